// End-to-end: the real UI driven against the real mock server over HTTP.
// The happy-dom window origin is pinned to the server (vitest config),
// so the app uses the same root-relative URLs as in production.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ChatApp } from "../src/main.js";
import { ChatApi } from "../src/api.js";

export const SERVER = "http://127.0.0.1:8931";

let server: ChildProcess;

async function waitForServer(url: string, timeoutMs = 45000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${url}/capabilities`);
      if (resp.ok) return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`mock server did not come up: ${lastError}`);
}

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 25));
}

async function until(predicate: () => boolean, timeoutMs = 15000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (predicate()) return;
    await flush();
  }
  throw new Error("condition not reached in time");
}

beforeAll(async () => {
  server = spawn(
    "sehatbot",
    ["serve", "--mock", "--bind", "127.0.0.1:8931"],
    { stdio: "ignore" },
  );
  await waitForServer(SERVER);
});

afterAll(() => {
  server?.kill();
});

describe("scripted browser session against the mock server", () => {
  it("runs the full greet -> chip -> answer -> feedback flow", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const app = new ChatApp(root);
    await app.start();

    // greeting and the three starter chips
    const greeting = root.querySelector('[data-testid="bubble-bot"]');
    expect(greeting?.textContent).toContain("Namaste");
    const chips = root.querySelectorAll<HTMLButtonElement>('[data-testid="chip"]');
    expect(chips).toHaveLength(3);

    // audio buttons hidden: the default build advertises tts:false
    expect(app.state.ttsEnabled).toBe(false);

    // click the first chip; its text goes out as the message
    const chipText = chips[0].textContent ?? "";
    expect(chipText.length).toBeGreaterThan(0);
    chips[0].click();
    await until(() => app.state.messages.some((m) => m.author === "bot" && m.messageId !== null));

    const userBubble = root.querySelector('[data-testid="bubble-user"]');
    expect(userBubble?.textContent).toContain(chipText);

    // golden answer for the first chip ("Condom kya hota hai?"):
    // the deterministic stack answers from the contraception document.
    const reply = app.state.messages.find((m) => m.author === "bot" && m.messageId);
    expect(reply).toBeDefined();
    expect(reply!.text.toLowerCase()).toContain("condom");
    expect(reply!.text).toContain("Myna's Telehealth");
    expect(root.querySelector('[data-testid="audio-button"]')).toBeNull();

    // submit the 7-metric feedback; the server answers 204 and the
    // widget flips to the thanks state
    for (const row of root.querySelectorAll(".feedback-row")) {
      row.querySelectorAll<HTMLButtonElement>(".star")[4].click();
    }
    (root.querySelector('[data-testid="feedback-submit"]') as HTMLButtonElement).click();
    await until(() => reply!.feedbackState === "submitted");
    expect(root.textContent).toContain("Dhanyavad");
  });

  it("keeps per-conversation history: second message in same session", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const app = new ChatApp(root);
    await app.start();

    await app.send("Saheli tablet se periods ka date badal jata hai kya?");
    const first = app.state.messages.filter((m) => m.author === "bot" && m.messageId);
    expect(first[0].text).toContain("Saheli");

    await app.send("IVF india me bhi hota hai kya?");
    const bots = app.state.messages.filter((m) => m.author === "bot" && m.messageId);
    expect(bots).toHaveLength(2);
    // the second answer is grounded in the fertility document
    expect(bots[1].text.toLowerCase()).toMatch(/conceiv|pregnan/);
    expect(bots[1].text).not.toBe(bots[0].text);
  });

  it("rejects whitespace-only input before any network call", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const app = new ChatApp(root);
    await app.start();
    const before = app.state.messages.length;
    await app.send("   ");
    expect(app.state.messages.length).toBe(before);
  });

  it("invalid feedback is rejected by the server and widget stays open", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const app = new ChatApp(root);
    await app.start();
    await app.send("Condom Kya hota hai?");
    const reply = app.state.messages.find((m) => m.author === "bot" && m.messageId)!;
    await app.feedback(reply.messageId as string, { speed: 5 });
    expect(reply.feedbackState).toBe("unrated");
  });

  it("shows the offline banner when the service is unreachable", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const app = new ChatApp(root, new ChatApi("http://127.0.0.1:59999"));
    await app.start();
    expect(app.state.offline).toBe(true);
    expect(root.querySelector('[data-testid="offline-banner"]')).not.toBeNull();
  });
});
