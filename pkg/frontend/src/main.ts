// Application wiring: capabilities -> session -> event loop.

import { ApiError, ChatApi } from "./api.js";
import {
  addBotReply,
  addUserMessage,
  beginSession,
  canSend,
  initialState,
  markFeedbackSubmitted,
  markSendFailed,
  type ChatState,
  type UiMessage,
} from "./state.js";
import { render, type ViewCallbacks } from "./view.js";
import type { Locale } from "./strings.js";

export class ChatApp {
  readonly state: ChatState = initialState();
  locale: Locale = "hinglish";

  constructor(
    private root: HTMLElement,
    private api: ChatApi = new ChatApi(),
  ) {}

  async start(): Promise<void> {
    try {
      const capabilities = await this.api.capabilities();
      const session = await this.api.openSession();
      beginSession(
        this.state,
        session.conversation_id,
        session.greeting,
        session.suggested_questions,
        capabilities.tts,
      );
    } catch {
      this.state.offline = true;
    }
    this.draw();
  }

  private callbacks: ViewCallbacks = {
    onSend: (text) => void this.send(text),
    onRetry: (message) => void this.retry(message),
    onFeedback: (messageId, ratings) => void this.feedback(messageId, ratings),
    onPlayAudio: (messageId) => this.playAudio(messageId),
    onLocaleChange: (locale) => {
      this.locale = locale;
      this.draw();
    },
  };

  draw(): void {
    render(this.root, this.state, this.locale, this.callbacks);
  }

  async send(text: string): Promise<void> {
    if (!canSend(this.state, text)) return;
    const userMessage = addUserMessage(this.state, text.trim());
    this.draw();
    await this.deliver(userMessage);
  }

  async retry(message: UiMessage): Promise<void> {
    if (this.state.pending) return;
    message.failed = false;
    this.state.pending = true;
    this.draw();
    await this.deliver(message);
  }

  private async deliver(userMessage: UiMessage): Promise<void> {
    try {
      const reply = await this.api.sendMessage(
        this.state.conversationId as string,
        userMessage.text,
      );
      this.state.offline = false;
      addBotReply(this.state, reply.response_text, reply.message_id);
    } catch (error) {
      if (error instanceof ApiError) {
        markSendFailed(this.state, userMessage);
      } else {
        // network failure, not an HTTP status
        markSendFailed(this.state, userMessage);
        this.state.offline = true;
      }
    }
    this.draw();
  }

  async feedback(
    messageId: string,
    ratings: Record<string, number>,
  ): Promise<void> {
    try {
      await this.api.submitFeedback(
        this.state.conversationId as string,
        messageId,
        ratings,
      );
      markFeedbackSubmitted(this.state, messageId);
    } catch {
      // leave the widget up so the user can try again
    }
    this.draw();
  }

  playAudio(messageId: string): void {
    const audio = new Audio(this.api.audioUrl(messageId));
    void audio.play();
  }
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root) {
    void new ChatApp(root).start();
  }
}

// In the browser the module is loaded by index.html; under tests the
// harness instantiates ChatApp directly.
if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
