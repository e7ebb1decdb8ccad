// Chat view model. One in-flight send at a time: the composer is
// disabled while pending, mirroring the server's per-session ordering.

export type FeedbackState = "unrated" | "submitted";

export interface UiMessage {
  author: "user" | "bot";
  text: string;
  messageId: string | null; // bot messages carry the server id
  canPlayAudio: boolean;
  feedbackState: FeedbackState;
  failed?: boolean; // user message whose send errored (retry affordance)
}

export interface ChatState {
  conversationId: string | null;
  messages: UiMessage[];
  suggestions: string[];
  pending: boolean;
  offline: boolean;
  ttsEnabled: boolean;
}

export function initialState(): ChatState {
  return {
    conversationId: null,
    messages: [],
    suggestions: [],
    pending: false,
    offline: false,
    ttsEnabled: false,
  };
}

export function beginSession(
  state: ChatState,
  conversationId: string,
  greeting: string,
  suggestions: string[],
  ttsEnabled: boolean,
): void {
  state.conversationId = conversationId;
  state.ttsEnabled = ttsEnabled;
  state.suggestions = suggestions.slice(0, 3);
  state.messages.push({
    author: "bot",
    text: greeting,
    messageId: null, // the greeting is not a rated message
    canPlayAudio: false,
    feedbackState: "submitted",
  });
}

export function addUserMessage(state: ChatState, text: string): UiMessage {
  const message: UiMessage = {
    author: "user",
    text,
    messageId: null,
    canPlayAudio: false,
    feedbackState: "submitted",
  };
  state.messages.push(message);
  state.pending = true;
  state.suggestions = []; // chips are a starter affordance only
  return message;
}

export function addBotReply(
  state: ChatState,
  text: string,
  messageId: string,
): UiMessage {
  const message: UiMessage = {
    author: "bot",
    text,
    messageId,
    canPlayAudio: state.ttsEnabled,
    feedbackState: "unrated",
  };
  state.messages.push(message);
  state.pending = false;
  return message;
}

export function markSendFailed(state: ChatState, message: UiMessage): void {
  message.failed = true;
  state.pending = false;
}

export function markFeedbackSubmitted(state: ChatState, messageId: string): void {
  for (const message of state.messages) {
    if (message.messageId === messageId) {
      message.feedbackState = "submitted";
    }
  }
}

export function canSend(state: ChatState, text: string): boolean {
  return (
    state.conversationId !== null && !state.pending && text.trim().length > 0
  );
}
