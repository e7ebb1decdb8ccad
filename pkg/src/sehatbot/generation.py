"""Draft-answer generation: persona prompt assembly, guardrails, length.

Guardrails are deliberately rule-based (pattern lists in plain-text
config, one regex per line): deterministic, auditable, and testable
offline. The LLM is only trusted to draft; policy is enforced here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import yaml

from .gateway import ENVELOPE_ANSWER, PromptRequest
from .knowledge import KnowledgeChunk
from .model import GuardrailReport, Violation

DATA_DIR = Path(__file__).parent / "data"

RULE_PRESCRIPTION = "prescription"
RULE_TEST_ORDER = "test_order"
RULE_INFORMAL_REGISTER = "informal_register"

FALLBACK_RETRIEVAL_INSTRUCTION = (
    "No reference material matched this question. Prefer directing the user "
    "to a teleconsultation instead of answering from memory."
)

MISCONCEPTION_INSTRUCTION = (
    "The question repeats a known misconception. Name the misconception "
    "explicitly and correct it with medically accurate evidence, without "
    "judging the person who asked."
)

_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")
_LIST_MARKER_TAIL = re.compile(r"(?:^|\s)\(?\d{1,2}[.)]\s*$")


def _load_patterns(path: Path) -> tuple[re.Pattern, ...]:
    """One case-insensitive regex per line; # comments and blanks skipped."""
    patterns = []
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        patterns.append(re.compile(stripped, re.IGNORECASE))
    return tuple(patterns)


@dataclass(frozen=True)
class GuardrailRules:
    prescription: tuple[re.Pattern, ...]
    test_order: tuple[re.Pattern, ...]
    informal_register: tuple[re.Pattern, ...]
    referral: tuple[re.Pattern, ...]

    @classmethod
    def load(cls, rules_dir: Union[str, Path]) -> "GuardrailRules":
        rules_dir = Path(rules_dir)
        return cls(
            prescription=_load_patterns(rules_dir / "prescription.txt"),
            test_order=_load_patterns(rules_dir / "test_orders.txt"),
            informal_register=_load_patterns(rules_dir / "informal_register.txt"),
            referral=_load_patterns(rules_dir / "referral_phrases.txt"),
        )


@dataclass
class GenerationPolicy:
    persona_text: str
    word_cap: int = 150
    history_window: int = 6
    referral_phrase: str = "Please consult a doctor with Myna's Telehealth."
    greeting_text: str = "Namaste!"
    followup_enabled: bool = True
    referral_required: bool = False
    suggested_questions: tuple[str, ...] = ()
    detail_terms: tuple[str, ...] = ()
    decline_phrases: tuple[str, ...] = ()
    misconception_patterns: tuple[re.Pattern, ...] = ()

    def __post_init__(self):
        if self.word_cap < 25:
            raise ValueError("word_cap must be >= 25")
        if not self.referral_phrase.strip():
            raise ValueError("referral_phrase must be non-empty")

    def needs_details(self, english_query: str) -> bool:
        """Symptom-style query with no age/duration detail given."""
        lowered = english_query.lower()
        if not any(term in lowered for term in self.detail_terms):
            return False
        return not re.search(r"\b\d{1,3}\b", lowered)

    def declined_details(self, history_user_turns: Iterable[str]) -> bool:
        for turn in history_user_turns:
            lowered = turn.lower()
            if any(phrase in lowered for phrase in self.decline_phrases):
                return True
        return False

    def is_misconception(self, english_query: str) -> bool:
        return any(p.search(english_query) for p in self.misconception_patterns)


def load_policy(path: Optional[Union[str, Path]] = None) -> GenerationPolicy:
    path = Path(path) if path else DATA_DIR / "policy.yaml"
    raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    misconception_file = path.parent / raw.get("misconception_patterns_file", "")
    patterns: tuple[re.Pattern, ...] = ()
    if misconception_file.is_file():
        patterns = _load_patterns(misconception_file)
    return GenerationPolicy(
        persona_text=raw["persona"].strip(),
        word_cap=int(raw.get("word_cap", 150)),
        history_window=int(raw.get("history_window", 6)),
        referral_phrase=str(raw.get("referral_phrase", "")).strip()
        or "Please consult a doctor with Myna's Telehealth.",
        greeting_text=str(raw.get("greeting", "Namaste!")).strip(),
        followup_enabled=bool(raw.get("followup_enabled", True)),
        referral_required=bool(raw.get("referral_required", False)),
        suggested_questions=tuple(raw.get("suggested_questions", [])),
        detail_terms=tuple(t.lower() for t in raw.get("detail_terms", [])),
        decline_phrases=tuple(t.lower() for t in raw.get("decline_phrases", [])),
        misconception_patterns=patterns,
    )


def default_rules() -> GuardrailRules:
    return GuardrailRules.load(DATA_DIR / "guardrails")


def _instruction_block(policy: GenerationPolicy, has_context: bool, query: str) -> str:
    lines = [
        "Rules:",
        "- Do not prescribe medications and never name drug dosages.",
        "- Do not order tests outright; at most note that a doctor may advise one.",
        "- Gather missing details step by step: at most one follow-up question, "
        "about a single aspect at a time.",
        '- Address the user with the respectful "aap" form, never "tu" or "tujhe".',
        f"- Keep the answer under {policy.word_cap} words, in simple everyday words.",
        "- When you are unsure, or the question needs examination, say so and end "
        f"with: {policy.referral_phrase}",
    ]
    if not has_context:
        lines.append("- " + FALLBACK_RETRIEVAL_INSTRUCTION)
    if policy.is_misconception(query):
        lines.append("- " + MISCONCEPTION_INSTRUCTION)
    return "\n".join(lines)


def assemble_prompt(
    policy: GenerationPolicy,
    profile_fragments: Sequence[str],
    retrieved: Sequence[KnowledgeChunk],
    history: Sequence[tuple[str, str]],
    english_query: str,
) -> PromptRequest:
    """Pure function of its arguments; the query rides as the user message.

    Section order: persona, cultural fragments, quoted retrieved context,
    history window (most recent last), then the instruction block (the
    provider protocol wants instructions in the system message, so they
    sit last there, just before the user message carrying the query).
    """
    if not english_query.strip():
        raise ValueError("english_query must be non-empty")
    sections = [policy.persona_text]
    if profile_fragments:
        sections.append(
            "Cultural context:\n" + "\n".join(f"- {f}" for f in profile_fragments)
        )
    context = "\n\n".join(chunk.text for chunk in retrieved)
    sections.append('Reference material from our doctors:\n"""\n' + context + '\n"""')
    window = list(history)[-policy.history_window :]
    if window:
        turns = []
        for user_text, bot_text in window:
            turns.append(f"User: {user_text}")
            turns.append(f"You: {bot_text}")
        sections.append("Conversation so far:\n" + "\n".join(turns))
    sections.append(_instruction_block(policy, bool(retrieved), english_query))
    return PromptRequest(
        system_text="\n\n".join(sections),
        user_text=english_query,
        expected_envelope_key=ENVELOPE_ANSWER,
        max_output_words=policy.word_cap,
    )


def rendered_prompt(req: PromptRequest) -> str:
    return f"{req.system_text}\n\nUser question: {req.user_text}"


FOLLOWUP_QUESTIONS = (
    (
        ("period", "menstrual", "cycle", "bleeding"),
        "Have you noticed any recent changes in your menstrual cycle?",
    ),
    (
        ("pregnan", "conceive", "baby"),
        "Could you share your age and how long you have been trying?",
    ),
    ((), "Could you share your age and how long you have noticed this?"),
)


def _pick_followup(english_query: str) -> str:
    lowered = english_query.lower()
    for terms, question in FOLLOWUP_QUESTIONS:
        if not terms or any(t in lowered for t in terms):
            return question
    return FOLLOWUP_QUESTIONS[-1][1]


def generate_answer(
    gateway,
    prompt: PromptRequest,
    policy: Optional[GenerationPolicy] = None,
    *,
    needs_details: bool = False,
    declined: bool = False,
) -> str:
    """Draft the English answer; append one follow-up question when the
    query lacks details the policy flags as needed (and the user has not
    already declined to give them)."""
    draft = gateway.complete(prompt)
    if not draft.strip():
        raise ValueError("provider returned an empty draft")
    if (
        policy is not None
        and policy.followup_enabled
        and needs_details
        and not declined
        and "?" not in draft
    ):
        draft = f"{draft.rstrip()} {_pick_followup(prompt.user_text)}"
    return draft


def apply_guardrails(
    draft_en: str,
    query_en: str = "",
    rules: Optional[GuardrailRules] = None,
    *,
    referral_required: bool = False,
) -> GuardrailReport:
    """Rule scan; reports, never raises.

    Imperative test orders only count as violations when no referral
    accompanies them (suggesting a test on the way to a doctor is the
    documented good behaviour).
    """
    if rules is None:
        rules = default_rules()
    violations: list[Violation] = []
    referral_present = any(p.search(draft_en) for p in rules.referral)

    for pattern in rules.prescription:
        for m in pattern.finditer(draft_en):
            violations.append(Violation(RULE_PRESCRIPTION, (m.start(), m.end()), m.group()))
    if not referral_present:
        for pattern in rules.test_order:
            for m in pattern.finditer(draft_en):
                violations.append(Violation(RULE_TEST_ORDER, (m.start(), m.end()), m.group()))
    register_hits = []
    for pattern in rules.informal_register:
        for m in pattern.finditer(draft_en):
            register_hits.append(Violation(RULE_INFORMAL_REGISTER, (m.start(), m.end()), m.group()))
    violations.extend(register_hits)

    register_ok = not register_hits
    passed = not violations and (referral_present or not referral_required)
    return GuardrailReport(
        violations=violations,
        referral_present=referral_present,
        register_ok=register_ok,
        passed=passed,
    )


def _sentence_prefix_ends(text: str) -> list[int]:
    """Character offsets where a sentence prefix may be cut."""
    ends = []
    for m in _SENTENCE_END.finditer(text):
        if _LIST_MARKER_TAIL.search(text[: m.start() + 1]):
            continue
        ends.append(m.start() + 1)
    ends.append(len(text))
    return ends


def enforce_length(draft: str, word_cap: int) -> tuple[str, list[str]]:
    """Cap the draft at word_cap words, cutting only at sentence ends.

    If even the first sentence exceeds the cap it is returned whole with
    a flag. Idempotent: capping a capped draft changes nothing.
    """
    if not draft.strip():
        raise ValueError("draft must be non-empty")
    if len(draft.split()) <= word_cap:
        return draft, []
    ends = _sentence_prefix_ends(draft)
    kept = None
    for end in ends:
        if len(draft[:end].split()) <= word_cap:
            kept = end
        else:
            break
    if kept is None:
        return draft[: ends[0]].rstrip(), ["length:first-sentence-over-cap"]
    return draft[:kept].rstrip(), ["length:truncated"]


def greet(policy: GenerationPolicy) -> tuple[str, list[str]]:
    """First-turn greeting plus three starter questions from top topics."""
    return policy.greeting_text, list(policy.suggested_questions[:3])
