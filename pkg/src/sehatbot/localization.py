"""Fuzzy lexicon replacement: swap formal/medical wording for local terms.

Matching is word n-gram against lexicon phrase, scored by normalized
edit distance on lowercase, punctuation-stripped, diacritic-folded
forms. Replacement is greedy: longest phrases first, left to right, and
a replaced span is never re-matched.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from . import speed

CATEGORIES = ("medical_term", "formal_register", "explicitness")
DEFAULT_MIN_SIMILARITY = 0.8

_WORD_RE = re.compile(r"\S+")
_EDGE_PUNCT = re.compile(r"^[^\w]+|[^\w]+$", re.UNICODE)


class LexiconError(ValueError):
    """Malformed lexicon file or entry."""


def _fold(token: str) -> str:
    """Comparison form: lowercase, diacritics folded, edge punctuation gone."""
    from .textutil import strip_diacritics

    return _EDGE_PUNCT.sub("", strip_diacritics(token).lower())


def phrase_similarity(a: str, b: str) -> float:
    """Normalized Levenshtein similarity over folded phrase forms."""
    fa = " ".join(_fold(t) for t in a.split())
    fb = " ".join(_fold(t) for t in b.split())
    return speed.similarity(fa, fb)


@dataclass(frozen=True)
class LexiconEntry:
    source_phrase: str
    replacement: str
    min_similarity: float = DEFAULT_MIN_SIMILARITY
    category: str = "medical_term"

    def __post_init__(self):
        words = self.source_phrase.split()
        if not 1 <= len(words) <= 5:
            raise LexiconError(f"source_phrase must be 1-5 words: {self.source_phrase!r}")
        if self.source_phrase == self.replacement:
            raise LexiconError(f"source equals replacement: {self.source_phrase!r}")
        if not 0.0 < self.min_similarity <= 1.0:
            raise LexiconError("min_similarity must be in (0, 1]")
        if self.category not in CATEGORIES:
            raise LexiconError(f"unknown category {self.category!r}")

    @property
    def word_count(self) -> int:
        return len(self.source_phrase.split())

    @property
    def folded_source(self) -> str:
        return " ".join(_fold(t) for t in self.source_phrase.split())


Lexicon = tuple[LexiconEntry, ...]


@dataclass(frozen=True)
class Replacement:
    matched_span: tuple[int, int]  # character offsets in the input text
    matched_text: str
    entry: LexiconEntry
    similarity: float


@dataclass
class ReplacementReport:
    replacements: list[Replacement]
    output_text: str


@dataclass(frozen=True)
class Advisory:
    matched_span: tuple[int, int]
    matched_text: str
    entry: LexiconEntry
    similarity: float

    @property
    def suggested(self) -> Optional[str]:
        return self.entry.replacement or None


@dataclass(frozen=True)
class _Token:
    raw: str
    start: int
    end: int
    folded: str = field(hash=False, compare=False, default="")


def _tokenize(text: str) -> list[_Token]:
    return [
        _Token(m.group(), m.start(), m.end(), _fold(m.group()))
        for m in _WORD_RE.finditer(text)
    ]


def _scan(text: str, entries: Sequence[LexiconEntry], consume: bool) -> list[Replacement]:
    """Longest-phrase-first, left-to-right n-gram scan.

    With consume=True a matched window is excluded from further matches
    (the localize contract); lint passes consume=False so overlapping
    advisories are all reported.
    """
    tokens = _tokenize(text)
    taken = [False] * len(tokens)
    matches: list[Replacement] = []
    by_length: dict[int, list[LexiconEntry]] = {}
    for entry in entries:
        by_length.setdefault(entry.word_count, []).append(entry)

    for n in sorted(by_length, reverse=True):
        candidates = by_length[n]
        for i in range(len(tokens) - n + 1):
            window = tokens[i : i + n]
            if consume and any(taken[i : i + n]):
                continue
            folded = " ".join(t.folded for t in window)
            if not folded.strip():
                continue
            best: Optional[tuple[LexiconEntry, float]] = None
            for entry in candidates:
                score = speed.similarity(folded, entry.folded_source)
                if score >= entry.min_similarity and (best is None or score > best[1]):
                    best = (entry, score)
            if best is None:
                continue
            span = (window[0].start, window[-1].end)
            matches.append(
                Replacement(span, text[span[0] : span[1]], best[0], best[1])
            )
            if consume:
                for j in range(i, i + n):
                    taken[j] = True
    matches.sort(key=lambda m: m.matched_span)
    return matches


def _sentence_initial(text: str, start: int) -> bool:
    for ch in reversed(text[:start]):
        if ch.isspace():
            continue
        return ch in ".!?"
    return True


def _render(text: str, matches: Sequence[Replacement]) -> str:
    out: list[str] = []
    cursor = 0
    for m in matches:
        start, end = m.matched_span
        out.append(text[cursor:start])
        original = m.matched_text
        stripped = _EDGE_PUNCT.sub("", original)
        head = original[: original.find(stripped)] if stripped else ""
        tail = original[original.find(stripped) + len(stripped) :] if stripped else ""
        replacement = m.entry.replacement
        if (
            replacement
            and stripped
            and stripped[0].isupper()
            and _sentence_initial(text, start)
        ):
            replacement = replacement[0].upper() + replacement[1:]
        out.append(head + replacement + tail)
        cursor = end
    out.append(text[cursor:])
    return "".join(out)


def localize(text: str, lexicon: Iterable[LexiconEntry]) -> ReplacementReport:
    """Replace lexicon matches in text; spans in the report are input offsets."""
    if not text:
        raise ValueError("text must be non-empty")
    entries = [e for e in lexicon if e.replacement]
    matches = _scan(text, entries, consume=True)
    return ReplacementReport(replacements=matches, output_text=_render(text, matches))


def lint_explicitness(text: str, lexicon: Iterable[LexiconEntry]) -> list[Advisory]:
    """Advisories for explicit-wording matches; rewriting is localize's job."""
    entries = [e for e in lexicon if e.category == "explicitness"]
    return [
        Advisory(m.matched_span, m.matched_text, m.entry, m.similarity)
        for m in _scan(text, entries, consume=False)
    ]


def load_lexicon(path: Union[str, Path]) -> Lexicon:
    """Parse a TSV lexicon: source_phrase, replacement, min_similarity, category."""
    entries: list[LexiconEntry] = []
    seen: dict[str, int] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        columns = [c.strip() for c in line.split("\t")]
        if len(columns) < 2:
            raise LexiconError(f"{path}:{lineno}: expected tab-separated columns")
        source, replacement = columns[0], columns[1]
        try:
            min_similarity = (
                float(columns[2])
                if len(columns) > 2 and columns[2]
                else DEFAULT_MIN_SIMILARITY
            )
            category = columns[3] if len(columns) > 3 and columns[3] else "medical_term"
            entry = LexiconEntry(source, replacement, min_similarity, category)
        except (LexiconError, ValueError) as exc:
            raise LexiconError(f"{path}:{lineno}: {exc}") from exc
        if source in seen:
            raise LexiconError(
                f"{path}:{lineno}: duplicate source_phrase {source!r}"
                f" (first at line {seen[source]})"
            )
        seen[source] = lineno
        entries.append(entry)
    return tuple(entries)


def merge_lexicons(base: Iterable[LexiconEntry], pack: Iterable[LexiconEntry]) -> Lexicon:
    """Overlay pack onto base; last writer wins per source_phrase."""
    merged: dict[str, LexiconEntry] = {}
    for entry in list(base) + list(pack):
        merged[entry.source_phrase] = entry
    return tuple(merged.values())
