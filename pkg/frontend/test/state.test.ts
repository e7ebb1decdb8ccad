import { describe, expect, it } from "vitest";

import {
  addBotReply,
  addUserMessage,
  beginSession,
  canSend,
  initialState,
  markFeedbackSubmitted,
  markSendFailed,
} from "../src/state.js";

function sessionState() {
  const state = initialState();
  beginSession(state, "c1", "Namaste!", ["q1", "q2", "q3", "q4"], false);
  return state;
}

describe("chat state", () => {
  it("keeps exactly three suggestion chips", () => {
    const state = sessionState();
    expect(state.suggestions).toEqual(["q1", "q2", "q3"]);
  });

  it("greeting is a bot bubble without feedback", () => {
    const state = sessionState();
    expect(state.messages).toHaveLength(1);
    expect(state.messages[0].author).toBe("bot");
    expect(state.messages[0].messageId).toBeNull();
  });

  it("blocks empty input client-side", () => {
    const state = sessionState();
    expect(canSend(state, "   ")).toBe(false);
    expect(canSend(state, "sawaal")).toBe(true);
  });

  it("allows only one in-flight send", () => {
    const state = sessionState();
    addUserMessage(state, "pehla");
    expect(state.pending).toBe(true);
    expect(canSend(state, "dusra")).toBe(false);
    addBotReply(state, "jawab", "m1");
    expect(state.pending).toBe(false);
    expect(canSend(state, "dusra")).toBe(true);
  });

  it("clears chips after the first send", () => {
    const state = sessionState();
    addUserMessage(state, "q1");
    expect(state.suggestions).toEqual([]);
  });

  it("bot replies start unrated and can be marked submitted", () => {
    const state = sessionState();
    addUserMessage(state, "sawaal");
    const reply = addBotReply(state, "jawab", "m9");
    expect(reply.feedbackState).toBe("unrated");
    markFeedbackSubmitted(state, "m9");
    expect(reply.feedbackState).toBe("submitted");
  });

  it("failed sends release the pending lock and flag the bubble", () => {
    const state = sessionState();
    const message = addUserMessage(state, "sawaal");
    markSendFailed(state, message);
    expect(state.pending).toBe(false);
    expect(message.failed).toBe(true);
  });

  it("audio flag follows the tts capability", () => {
    const state = initialState();
    beginSession(state, "c1", "Namaste!", [], true);
    addUserMessage(state, "sawaal");
    const reply = addBotReply(state, "jawab", "m1");
    expect(reply.canPlayAudio).toBe(true);
  });
});
