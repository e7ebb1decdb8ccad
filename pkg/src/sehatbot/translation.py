"""Query normalization, Hinglish->English translation, and the hop back.

All three operations go through the gateway; behaviour is deterministic
under the mock. Failures degrade explicitly: normalization falls back
to the raw input with a trace flag, back-translation falls back to a
fixed apology-plus-referral answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

from .gateway import (
    ENVELOPE_GRAMMAR,
    ENVELOPE_TRANSLATED,
    GatewayError,
    PromptRequest,
)
from .model import Language
from .textutil import detect_language, devanagari_ratio, tokenize

NORMALIZE_LENGTH_TOLERANCE = 0.5  # output must stay within +-50% words

GRAMMAR_SYSTEM = (
    "Correct the spelling and grammar mistakes in the user's message without "
    "changing its language or script, and without adding or removing content. "
    "Keep the length close to the original. "
    'Reply as JSON with the key "updated_text".'
)

TO_ENGLISH_SYSTEM = (
    "Translate the user's Hinglish (romanized Hindi) health question into "
    "clear standard English, preserving the user's intent, including implied "
    "meanings common in everyday speech. "
    'Reply as JSON with the key "translated_text".'
)

TO_HINGLISH_SYSTEM = (
    "Render this English health answer into simple Hinglish (Hindi written in "
    "the Roman script) that a reader with basic literacy understands. Use the "
    'respectful "aap" form throughout. '
    'Reply as JSON with the key "translated_text".'
)

APOLOGY_FALLBACK = (
    "Maaf kijiye, abhi mujhe aapke sawaal ka sahi jawab dene mein dikkat ho "
    "rahi hai. Kripya teleconsultation ke zariye doctor se baat karein, ve "
    "aapki puri madad karenge."
)


class HintError(ValueError):
    pass


@dataclass(frozen=True)
class Gloss:
    meaning_en: str
    cue_words: tuple[str, ...]


@dataclass(frozen=True)
class DisambiguationHint:
    """An ambiguous surface form with its candidate readings.

    A gloss wins when any of its cue words co-occur with the surface
    form in the query; the winning meaning is appended as a bracketed
    note for the generator.
    """

    surface_form: str
    glosses: tuple[Gloss, ...]

    def __post_init__(self):
        if len(self.glosses) < 2:
            raise HintError(
                f"hint {self.surface_form!r} needs >=2 glosses to be ambiguous"
            )


def load_hints(path: Union[str, Path]) -> list[DisambiguationHint]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    hints = []
    for row in data:
        hints.append(
            DisambiguationHint(
                surface_form=row["surface_form"],
                glosses=tuple(
                    Gloss(g["meaning_en"], tuple(g["cue_words"])) for g in row["glosses"]
                ),
            )
        )
    return hints


def _script_class(text: str) -> str:
    return "devanagari" if devanagari_ratio(text) > 0.20 else "roman"


def resolve_hint(query: str, hints: Iterable[DisambiguationHint]) -> str:
    """The winning gloss for the first triggered hint, or ''."""
    tokens = set(tokenize(query))
    for hint in hints:
        if hint.surface_form.lower() not in tokens:
            continue
        for gloss in hint.glosses:
            if tokens & {c.lower() for c in gloss.cue_words}:
                return gloss.meaning_en
    return ""


class Translator:
    def __init__(self, gateway, hints: Iterable[DisambiguationHint] = ()):
        self.gateway = gateway
        self.hints = list(hints)

    def normalize_query(self, text: str) -> tuple[str, list[str]]:
        """Correct spelling/grammar; same language and script as the input.

        Returns (normalized text, flags). A gateway reply outside the
        length bound or in a different script is retried once, then the
        input passes through unchanged with a flag.
        """
        if not text.strip():
            raise ValueError("query must be non-empty")
        flags: list[str] = []
        if detect_language(text) is Language.OTHER:
            flags.append("normalize:non-roman-script")
        request = PromptRequest(
            system_text=GRAMMAR_SYSTEM,
            user_text=text,
            expected_envelope_key=ENVELOPE_GRAMMAR,
        )
        for _attempt in range(2):
            candidate = self.gateway.complete(request)
            if self._acceptable_normalization(text, candidate):
                return candidate, flags
        flags.append("normalize:length-bound-fallback")
        return text, flags

    @staticmethod
    def _acceptable_normalization(original: str, candidate: str) -> bool:
        if not candidate.strip():
            return False
        if _script_class(candidate) != _script_class(original):
            return False
        n_in = len(original.split())
        n_out = len(candidate.split())
        low = n_in * (1 - NORMALIZE_LENGTH_TOLERANCE)
        high = n_in * (1 + NORMALIZE_LENGTH_TOLERANCE)
        return low <= n_out <= high

    def to_english(self, query: str, hints: Iterable[DisambiguationHint] = None) -> str:
        """Translate for retrieval/generation; English input passes through."""
        if not query.strip():
            raise ValueError("query must be non-empty")
        active = list(hints) if hints is not None else self.hints
        if detect_language(query) is Language.ENGLISH:
            english = query
        else:
            english = self.gateway.complete(
                PromptRequest(
                    system_text=TO_ENGLISH_SYSTEM,
                    user_text=query,
                    expected_envelope_key=ENVELOPE_TRANSLATED,
                )
            )
        gloss = resolve_hint(query, active)
        if gloss:
            english = f"{english} [the user means: {gloss}]"
        return english

    def to_user_language(self, answer_en: str, target: Language) -> str:
        """Render the answer in the user's language; english is identity.

        On gateway failure the fixed apology + teleconsultation referral
        is returned instead of raw English.
        """
        if not answer_en.strip():
            raise ValueError("answer must be non-empty")
        if target is Language.ENGLISH:
            return answer_en
        try:
            return self.gateway.complete(
                PromptRequest(
                    system_text=TO_HINGLISH_SYSTEM,
                    user_text=answer_en,
                    expected_envelope_key=ENVELOPE_TRANSLATED,
                )
            )
        except GatewayError:
            return APOLOGY_FALLBACK
