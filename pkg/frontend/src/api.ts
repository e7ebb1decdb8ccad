// Typed client for the chat service HTTP API. The UI is served from
// /app on the same origin, so all paths are root-relative.

export interface SessionInfo {
  conversation_id: string;
  greeting: string;
  suggested_questions: string[];
}

export interface BotReply {
  response_text: string;
  message_id: string;
  trace_id: string;
}

export interface Capabilities {
  tts: boolean;
  voice_input: boolean;
}

export type Ratings = Record<string, number>;

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }

  get retryable(): boolean {
    return this.status >= 500;
  }
}

async function checkJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class ChatApi {
  constructor(private base: string = "") {}

  async capabilities(): Promise<Capabilities> {
    return checkJson<Capabilities>(await fetch(`${this.base}/capabilities`));
  }

  async openSession(): Promise<SessionInfo> {
    return checkJson<SessionInfo>(
      await fetch(`${this.base}/session`, { method: "POST" }),
    );
  }

  async sendMessage(conversationId: string, text: string): Promise<BotReply> {
    return checkJson<BotReply>(
      await fetch(`${this.base}/session/${conversationId}/message`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ text }),
      }),
    );
  }

  async submitFeedback(
    conversationId: string,
    messageId: string,
    ratings: Ratings,
  ): Promise<void> {
    const resp = await fetch(`${this.base}/feedback`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        conversation_id: conversationId,
        message_id: messageId,
        ratings,
      }),
    });
    if (resp.status !== 204) {
      throw new ApiError(resp.status, await resp.text());
    }
  }

  audioUrl(messageId: string): string {
    return `${this.base}/tts?message_id=${encodeURIComponent(messageId)}`;
  }
}
