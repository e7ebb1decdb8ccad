"""Small text helpers shared by the gateway, translation, and analytics."""

from __future__ import annotations

import re
import unicodedata

from .model import Language

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# Roman-script Hindi function words common in code-mixed chat. Presence of
# any of these marks a text as Hinglish rather than English.
HINGLISH_MARKERS = frozenset(
    """
    kya kyu kyun kaise kab kahan kaun hai hain hota hoti hote hoga hogi
    ka ki ke ko se mein main me par aur ya nahi nhi na mat
    aap aapka aapko apna apni hum mera meri mujhe muje
    karna karne karti karta kare karen karein krna
    sakta sakti sakte chahiye chahie zaroori jaroori
    saal sal baad bad pehle liye wala wali vala bhi toh
    """.split()
)

_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?])\s+")
_LIST_MARKER = re.compile(r"(?:^|\s)\(?\d{1,2}[.)]$")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens, split on unicode whitespace/punctuation."""
    return [t.lower() for t in _TOKEN_RE.findall(text)]


def devanagari_ratio(text: str) -> float:
    chars = [c for c in text if not c.isspace()]
    if not chars:
        return 0.0
    dev = sum(1 for c in chars if "ऀ" <= c <= "ॿ")
    return dev / len(chars)


def detect_language(text: str) -> Language:
    """Tag a user message as hinglish, english, or other (non-Roman script)."""
    if devanagari_ratio(text) > 0.20:
        return Language.OTHER
    tokens = set(tokenize(text))
    if tokens & HINGLISH_MARKERS:
        return Language.HINGLISH
    return Language.ENGLISH


def strip_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(c for c in decomposed if not unicodedata.combining(c))


def split_sentences(text: str) -> list[str]:
    """Split on sentence punctuation, keeping list markers ("1.") attached."""
    parts = _SENTENCE_BOUNDARY.split(text)
    merged: list[str] = []
    for part in parts:
        if merged and _LIST_MARKER.search(merged[-1]):
            merged[-1] = merged[-1] + " " + part
        else:
            merged.append(part)
    return [p for p in merged if p.strip()]
