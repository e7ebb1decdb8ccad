// All user-visible strings live here, per locale. The bot's own message
// content arrives from the server already localized.

export type Locale = "hinglish" | "english";

interface StringTable {
  appTitle: string;
  inputPlaceholder: string;
  send: string;
  retry: string;
  offline: string;
  sendFailed: string;
  micTooltip: string;
  feedbackPrompt: string;
  feedbackSubmit: string;
  feedbackThanks: string;
  listen: string;
  menuPlaceholder: string;
  metrics: Record<string, string>;
}

// Metric keys mirror the service contract exactly.
export const METRIC_KEYS = [
  "overall_rating",
  "satisfied_by_answer",
  "helpful_answer",
  "language_simplicity",
  "response_time",
  "friendliness",
  "helpfulness",
] as const;

const hinglish: StringTable = {
  appTitle: "Sehat Sahayika",
  inputPlaceholder: "Apna sawaal yahan likhein…",
  send: "Bhejein",
  retry: "Dobara koshish karein",
  offline: "Network nahi mil raha. Connection check karein.",
  sendFailed: "Jawab nahi aa paya.",
  micTooltip: "Voice input abhi uplabdh nahi hai",
  feedbackPrompt: "Is jawab ko rate karein",
  feedbackSubmit: "Rating bhejein",
  feedbackThanks: "Dhanyavad! Aapki rating mil gayi.",
  listen: "Sunein",
  menuPlaceholder: "Menu",
  metrics: {
    overall_rating: "Kull rating",
    satisfied_by_answer: "Jawab se santusht",
    helpful_answer: "Jawab madadgar tha",
    language_simplicity: "Bhasha saral thi",
    response_time: "Jawab jaldi mila",
    friendliness: "Vyavhar accha tha",
    helpfulness: "Madad mili",
  },
};

const english: StringTable = {
  appTitle: "Sehat Sahayika",
  inputPlaceholder: "Type your question here…",
  send: "Send",
  retry: "Retry",
  offline: "No network connection. Please check and try again.",
  sendFailed: "The answer did not arrive.",
  micTooltip: "Voice input is not available yet",
  feedbackPrompt: "Rate this answer",
  feedbackSubmit: "Submit rating",
  feedbackThanks: "Thank you! Your rating was recorded.",
  listen: "Listen",
  menuPlaceholder: "Menu",
  metrics: {
    overall_rating: "Overall rating",
    satisfied_by_answer: "Satisfied by answer",
    helpful_answer: "Helpful answer",
    language_simplicity: "Language simplicity",
    response_time: "Response time",
    friendliness: "Friendliness",
    helpfulness: "Helpfulness",
  },
};

const TABLES: Record<Locale, StringTable> = { hinglish, english };

export function strings(locale: Locale): StringTable {
  return TABLES[locale];
}
