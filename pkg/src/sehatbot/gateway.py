"""Uniform interface to the text-generation/embedding provider.

Two implementations: a live HTTPS client configured from environment
variables, and a deterministic mock so the whole stack is testable
offline. Providers return structured envelopes; callers only ever see
the value under the stage's envelope key.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, Optional, Union

from .model import Language
from .textutil import detect_language, split_sentences, tokenize

# Envelope keys, one per pipeline stage that calls the provider.
ENVELOPE_TRANSLATED = "translated_text"
ENVELOPE_ANSWER = "medical_answer"
ENVELOPE_GRAMMAR = "updated_text"
ENVELOPE_CATEGORY = "category"

DEFAULT_TEMPERATURE = 0.3
DEFAULT_TIMEOUT_S = 30.0
DEFAULT_MAX_INFLIGHT = 8
MOCK_DIMENSION = 256


class GatewayError(Exception):
    """Base class for provider failures."""


class MalformedEnvelope(GatewayError):
    """Provider reply did not contain the expected envelope key."""


class ProviderTimeout(GatewayError):
    """Provider did not answer in time (after retries)."""


class RateLimited(GatewayError):
    """Provider rejected the call for rate reasons (after retries)."""


@dataclass(frozen=True)
class PromptRequest:
    system_text: str
    user_text: str
    expected_envelope_key: str
    max_output_words: int = 150
    temperature: float = DEFAULT_TEMPERATURE

    def __post_init__(self):
        if not self.expected_envelope_key:
            raise ValueError("expected_envelope_key must be non-empty")
        if not self.user_text.strip():
            raise ValueError("user_text must be non-empty")
        if self.max_output_words <= 0:
            raise ValueError("max_output_words must be positive")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must be in [0, 2]")


@dataclass(frozen=True)
class EmbeddingVector:
    values: tuple[float, ...]
    dimension: int

    def __post_init__(self):
        if self.dimension <= 0 or len(self.values) != self.dimension:
            raise ValueError("dimension must match the number of values")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("embedding values must be finite")

    def norm(self) -> float:
        return math.sqrt(sum(v * v for v in self.values))


def _extract_envelope(envelope: Mapping, key: str) -> str:
    if key not in envelope:
        raise MalformedEnvelope(f"provider reply is missing envelope key {key!r}")
    return str(envelope[key])


def call_with_backoff(
    fn: Callable[[], str],
    attempts: int = 3,
    base_delay: float = 0.5,
    sleep: Callable[[float], None] = time.sleep,
) -> str:
    """Retry transient failures with strictly increasing delays."""
    delay = base_delay
    for attempt in range(attempts):
        try:
            return fn()
        except (ProviderTimeout, RateLimited):
            if attempt == attempts - 1:
                raise
            sleep(delay)
            delay *= 2
    raise AssertionError("unreachable")


def mock_reply_key(envelope_key: str, user_text: str) -> str:
    """Fixture lookup key: hash of the stage key plus the user payload.

    (Hashing the fully assembled prompt would couple fixtures to prompt
    wording; the envelope key and user payload identify a stage call.)
    """
    digest = hashlib.sha256()
    digest.update(envelope_key.encode("utf-8"))
    digest.update(b"\n")
    digest.update(user_text.encode("utf-8"))
    return digest.hexdigest()


# Tiny word maps so the mock emits plausible text for prompts without a
# canned reply. Domain terms intentionally pass through untouched.
_HI_EN = {
    "kya": "what", "hai": "is", "hain": "are", "hota": "happens", "hoti": "happens",
    "kaise": "how", "kyu": "why", "kyun": "why", "kab": "when", "aur": "and",
    "nahi": "not", "nhi": "not", "se": "from", "ke": "of", "ka": "of", "ki": "of",
    "liye": "for", "mein": "in", "me": "in", "bhi": "also", "toh": "then",
    "sakta": "can", "sakti": "can", "sakte": "can", "ho": "be", "karna": "do",
    "karne": "doing", "chahiye": "should", "baad": "after", "bad": "after",
    "saal": "years", "sal": "years", "paisa": "money", "na": "no",
}


class MockGateway:
    """Deterministic provider: canned replies plus rule-based synthesis.

    A pure function of (seed, canned fixture file, inputs) so every run,
    on every machine, produces byte-identical output.
    """

    def __init__(
        self,
        replies: Optional[Mapping[str, Union[str, Mapping]]] = None,
        seed: int = 0,
        dimension: int = MOCK_DIMENSION,
        transient_failures: int = 0,
        healthy: bool = True,
    ):
        self.replies = dict(replies or {})
        self.seed = seed
        self.dimension = dimension
        self._remaining_failures = transient_failures
        self._healthy = healthy
        self.calls: list[PromptRequest] = []

    @classmethod
    def from_fixture(cls, path: Union[str, Path], **kwargs) -> "MockGateway":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(replies=data.get("replies", {}), seed=data.get("seed", 0), **kwargs)

    def healthy(self) -> bool:
        return self._healthy

    def complete(self, req: PromptRequest) -> str:
        def attempt() -> str:
            if self._remaining_failures > 0:
                self._remaining_failures -= 1
                raise ProviderTimeout("mock transient failure")
            return self._reply(req)

        self.calls.append(req)
        return call_with_backoff(attempt, sleep=lambda _s: None)

    def _reply(self, req: PromptRequest) -> str:
        canned = self.replies.get(mock_reply_key(req.expected_envelope_key, req.user_text))
        if canned is not None:
            if isinstance(canned, Mapping):
                return _extract_envelope(canned, req.expected_envelope_key)
            return canned
        return self._synthesize(req)

    def _synthesize(self, req: PromptRequest) -> str:
        key = req.expected_envelope_key
        if key == ENVELOPE_GRAMMAR:
            return req.user_text
        if key == ENVELOPE_TRANSLATED:
            if detect_language(req.user_text) is Language.HINGLISH:
                words = [_HI_EN.get(w.lower(), w) for w in req.user_text.split()]
                return " ".join(words)
            return req.user_text
        if key == ENVELOPE_ANSWER:
            return self._synthesize_answer(req.system_text)
        if key == ENVELOPE_CATEGORY:
            return ""
        raise MalformedEnvelope(f"mock cannot synthesize envelope key {key!r}")

    def _synthesize_answer(self, system_text: str) -> str:
        context = ""
        if '"""' in system_text:
            context = system_text.split('"""')[1].strip()
        if context:
            lead = " ".join(split_sentences(context)[:2]).strip()
            return (
                f"{lead} Har sharir alag hota hai, isliye apni sthiti ke hisaab se "
                "samajhna zaroori hai. Agar aapko aur madad chahiye, please consult "
                "a doctor with Myna's Telehealth."
            )
        return (
            "Mujhe iska sateek jawab apne records mein nahi mila. Kripya Myna's "
            "Telehealth ke doctor se teleconsultation karein, ve aapki madad karenge."
        )

    def embed(self, text: str) -> EmbeddingVector:
        if not text.strip():
            raise ValueError("cannot embed empty text")
        counts = [0.0] * self.dimension
        tokens = tokenize(text) or [text.strip().lower()]
        seed_key = self.seed.to_bytes(8, "little", signed=True)
        for token in tokens:
            digest = hashlib.blake2b(token.encode("utf-8"), key=seed_key, digest_size=8)
            bucket = int.from_bytes(digest.digest(), "little") % self.dimension
            counts[bucket] += 1.0
        norm = math.sqrt(sum(c * c for c in counts))
        values = tuple(c / norm for c in counts)
        return EmbeddingVector(values=values, dimension=self.dimension)


class LiveGateway:
    """HTTPS chat-completion client; configured via LLM_* env variables."""

    def __init__(
        self,
        endpoint: Optional[str] = None,
        api_key: Optional[str] = None,
        model: Optional[str] = None,
        timeout_s: float = DEFAULT_TIMEOUT_S,
        max_inflight: int = DEFAULT_MAX_INFLIGHT,
        embed_dimension: int = MOCK_DIMENSION,
    ):
        self.endpoint = endpoint or os.environ.get("LLM_ENDPOINT", "")
        self.api_key = api_key or os.environ.get("LLM_API_KEY", "")
        self.model = model or os.environ.get("LLM_MODEL", "")
        if not self.endpoint:
            raise GatewayError("LLM_ENDPOINT is not configured")
        self.timeout_s = timeout_s
        self._inflight = threading.BoundedSemaphore(max_inflight)
        # Fallback for providers without an embedding endpoint: the same
        # deterministic hashed bag-of-words the mock uses.
        self._embedder = MockGateway(dimension=embed_dimension)

    def healthy(self) -> bool:
        try:
            import httpx

            resp = httpx.get(self.endpoint, timeout=5.0)
            return resp.status_code < 500
        except Exception:
            return False

    def complete(self, req: PromptRequest) -> str:
        return call_with_backoff(lambda: self._once(req))

    def _once(self, req: PromptRequest) -> str:
        import httpx

        payload = {
            "model": self.model,
            "messages": [
                {"role": "system", "content": req.system_text},
                {"role": "user", "content": req.user_text},
            ],
            "temperature": req.temperature,
            "max_tokens": req.max_output_words * 4,
            "response_format": {"type": "json_object"},
        }
        headers = {"Authorization": f"Bearer {self.api_key}"}
        with self._inflight:
            try:
                resp = httpx.post(
                    self.endpoint, json=payload, headers=headers, timeout=self.timeout_s
                )
            except httpx.TimeoutException as exc:
                raise ProviderTimeout(str(exc)) from exc
        if resp.status_code == 429:
            raise RateLimited("provider rate limit")
        if resp.status_code >= 500:
            raise ProviderTimeout(f"provider error {resp.status_code}")
        if resp.status_code != 200:
            raise GatewayError(f"provider error {resp.status_code}: {resp.text[:200]}")
        content = resp.json()["choices"][0]["message"]["content"]
        try:
            envelope = json.loads(content)
        except json.JSONDecodeError as exc:
            raise MalformedEnvelope("provider reply is not a JSON envelope") from exc
        return _extract_envelope(envelope, req.expected_envelope_key)

    def embed(self, text: str) -> EmbeddingVector:
        return self._embedder.embed(text)
