// DOM rendering: mobile-first single column. No framework; the state is
// small enough that a full re-render per change stays instant.
// Pipeline internals (traces, guardrail reports) are never rendered.

import { METRIC_KEYS, strings, type Locale } from "./strings.js";
import type { ChatState, UiMessage } from "./state.js";

export interface ViewCallbacks {
  onSend(text: string): void;
  onRetry(message: UiMessage): void;
  onFeedback(messageId: string, ratings: Record<string, number>): void;
  onPlayAudio(messageId: string): void;
  onLocaleChange(locale: Locale): void;
}

const pendingStars = new WeakMap<HTMLElement, Record<string, number>>();

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderFeedback(
  message: UiMessage,
  locale: Locale,
  callbacks: ViewCallbacks,
): HTMLElement {
  const t = strings(locale);
  const box = el("div", "feedback");
  box.dataset.testid = "feedback";
  if (message.feedbackState === "submitted") {
    box.append(el("p", "feedback-thanks", t.feedbackThanks));
    return box;
  }
  box.append(el("p", "feedback-title", t.feedbackPrompt));
  const chosen: Record<string, number> = {};
  pendingStars.set(box, chosen);
  for (const metric of METRIC_KEYS) {
    const row = el("div", "feedback-row");
    row.dataset.metric = metric;
    row.append(el("span", "feedback-label", t.metrics[metric]));
    const stars = el("span", "stars");
    for (let value = 1; value <= 5; value += 1) {
      const star = el("button", "star", "★");
      star.type = "button";
      star.dataset.value = String(value);
      star.setAttribute("aria-label", `${t.metrics[metric]}: ${value}`);
      star.addEventListener("click", () => {
        chosen[metric] = value;
        stars
          .querySelectorAll(".star")
          .forEach((s, i) => s.classList.toggle("chosen", i < value));
      });
      stars.append(star);
    }
    row.append(stars);
    box.append(row);
  }
  const submit = el("button", "feedback-submit", t.feedbackSubmit);
  submit.type = "button";
  submit.dataset.testid = "feedback-submit";
  submit.addEventListener("click", () => {
    if (message.messageId && Object.keys(chosen).length > 0) {
      callbacks.onFeedback(message.messageId, { ...chosen });
    }
  });
  box.append(submit);
  return box;
}

function renderBubble(
  message: UiMessage,
  locale: Locale,
  callbacks: ViewCallbacks,
): HTMLElement {
  const t = strings(locale);
  const wrap = el("div", `bubble-row ${message.author}`);
  const bubble = el("div", "bubble");
  bubble.dataset.testid = `bubble-${message.author}`;
  bubble.append(el("p", "bubble-text", message.text));

  if (message.author === "bot" && message.canPlayAudio && message.messageId) {
    const audio = el("button", "audio-button", `🔊 ${t.listen}`);
    audio.type = "button";
    audio.dataset.testid = "audio-button";
    audio.addEventListener("click", () => {
      if (message.messageId) callbacks.onPlayAudio(message.messageId);
    });
    bubble.append(audio);
  }
  if (message.author === "bot" && message.messageId) {
    bubble.append(renderFeedback(message, locale, callbacks));
  }
  if (message.author === "user" && message.failed) {
    const note = el("div", "send-failed");
    note.append(el("span", undefined, t.sendFailed + " "));
    const retry = el("button", "retry-button", t.retry);
    retry.type = "button";
    retry.dataset.testid = "retry";
    retry.addEventListener("click", () => callbacks.onRetry(message));
    note.append(retry);
    bubble.append(note);
  }
  wrap.append(bubble);
  return wrap;
}

export function render(
  root: HTMLElement,
  state: ChatState,
  locale: Locale,
  callbacks: ViewCallbacks,
): void {
  const t = strings(locale);
  root.textContent = "";

  const header = el("header", "topbar");
  header.append(el("h1", "title", t.appTitle));
  const localeToggle = el(
    "button",
    "locale-toggle",
    locale === "hinglish" ? "EN" : "हिं",
  );
  localeToggle.type = "button";
  localeToggle.dataset.testid = "locale-toggle";
  localeToggle.addEventListener("click", () =>
    callbacks.onLocaleChange(locale === "hinglish" ? "english" : "hinglish"),
  );
  header.append(localeToggle);
  root.append(header);

  if (state.offline) {
    const banner = el("div", "offline-banner", t.offline);
    banner.dataset.testid = "offline-banner";
    root.append(banner);
  }

  const list = el("main", "messages");
  list.dataset.testid = "messages";
  for (const message of state.messages) {
    list.append(renderBubble(message, locale, callbacks));
  }

  if (state.suggestions.length > 0) {
    const chips = el("div", "chips");
    chips.dataset.testid = "chips";
    for (const suggestion of state.suggestions) {
      const chip = el("button", "chip", suggestion);
      chip.type = "button";
      chip.dataset.testid = "chip";
      chip.addEventListener("click", () => callbacks.onSend(suggestion));
      chips.append(chip);
    }
    list.append(chips);
  }
  root.append(list);

  const composer = el("footer", "composer");
  const mic = el("button", "mic", "🎤");
  mic.type = "button";
  mic.disabled = true; // voice input is out of scope; icon kept for parity
  mic.title = t.micTooltip;
  mic.dataset.testid = "mic";
  composer.append(mic);

  const input = el("input", "input") as HTMLInputElement;
  input.type = "text";
  input.placeholder = t.inputPlaceholder;
  input.disabled = state.pending;
  input.dataset.testid = "input";
  composer.append(input);

  const send = el("button", "send", t.send);
  send.type = "button";
  send.disabled = state.pending;
  send.dataset.testid = "send";
  const submit = () => {
    if (input.value.trim()) callbacks.onSend(input.value);
  };
  send.addEventListener("click", submit);
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter") submit();
  });
  composer.append(send);
  root.append(composer);

  const menu = el("nav", "menubar", t.menuPlaceholder);
  menu.dataset.testid = "menubar";
  root.append(menu);
}
