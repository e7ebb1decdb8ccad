"""Turn orchestration: the three-stage flow plus guardrails and trace.

Stage order per turn: normalize -> to_english -> retrieve -> generate
(with length cap) -> guardrails -> back-translate -> localize. Every
stage lands in the PipelineTrace; degraded stages carry flags instead
of being skipped silently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional

from . import analytics
from .cultural import CulturalProfile, compile_actions, prompt_fragments
from .gateway import GatewayError
from .generation import (
    GenerationPolicy,
    GuardrailRules,
    apply_guardrails,
    assemble_prompt,
    enforce_length,
    generate_answer,
)
from .knowledge import DEFAULT_TOP_K, KnowledgeChunk, VectorIndex
from .localization import Lexicon, localize
from .model import (
    Language,
    LogStore,
    MessageLog,
    PipelineTrace,
    TraceStore,
    new_message_id,
)
from .textutil import detect_language
from .translation import APOLOGY_FALLBACK, Translator

GENERATION_FALLBACK_EN = "I am sorry, I cannot safely answer this here."


def deterministic_timer() -> Callable[[], float]:
    """Fake clock for the mock stack: each call advances 1 ms."""
    state = {"t": 0.0}

    def tick() -> float:
        state["t"] += 0.001
        return state["t"]

    return tick


@dataclass
class TurnResult:
    message_id: str
    response_text: str
    language: Language
    trace: PipelineTrace


class ChatPipeline:
    def __init__(
        self,
        gateway,
        index: VectorIndex,
        translator: Translator,
        policy: GenerationPolicy,
        rules: GuardrailRules,
        lexicon: Lexicon,
        profile: Optional[CulturalProfile] = None,
        log_store: Optional[LogStore] = None,
        trace_store: Optional[TraceStore] = None,
        timer: Optional[Callable[[], float]] = None,
        top_k: int = DEFAULT_TOP_K,
        clock: Optional[Callable[[], datetime]] = None,
    ):
        self.gateway = gateway
        self.index = index
        self.translator = translator
        self.policy = policy
        self.rules = rules
        self.lexicon = lexicon
        self.profile = profile or CulturalProfile()
        self.actions = compile_actions(self.profile)
        self.fragments = prompt_fragments(self.actions)
        self.log_store = log_store if log_store is not None else LogStore()
        self.trace_store = trace_store if trace_store is not None else TraceStore()
        self.timer = timer or time.perf_counter
        self.top_k = top_k
        self.clock = clock or (lambda: datetime.now(timezone.utc))

    def _history_pairs(self, conversation_id: str) -> list[tuple[str, str]]:
        return [
            (log.user_text, log.response_text)
            for log in self.log_store.conversation(conversation_id)
        ]

    def run_turn(self, conversation_id: str, user_text: str) -> TurnResult:
        """One full turn; persists the MessageLog and PipelineTrace.

        Gateway failures in normalization/back-translation degrade to
        the apology answer; failures in generation propagate (the
        service maps them to 502).
        """
        if not user_text.strip():
            raise ValueError("user_text must be non-empty")
        timings: dict[str, float] = {}
        flags: list[str] = []
        history = self._history_pairs(conversation_id)
        language = detect_language(user_text)

        def timed(stage: str, fn: Callable[[], object]) -> object:
            started = self.timer()
            try:
                return fn()
            finally:
                timings[stage] = round((self.timer() - started) * 1000.0, 3)

        # Stage 1a: grammar/spelling normalization.
        try:
            normalized, norm_flags = timed(
                "normalize", lambda: self.translator.normalize_query(user_text)
            )
            flags.extend(norm_flags)
        except GatewayError:
            normalized = user_text
            flags.append("normalize:gateway-error")
            timings.setdefault("normalize", 0.0)

        # Stage 1b: translate to English for retrieval and generation.
        try:
            english = timed("translate", lambda: self.translator.to_english(normalized))
            translation_failed = False
        except GatewayError:
            english = normalized
            translation_failed = True
            flags.append("translate:gateway-error-fallback")
            timings.setdefault("translate", 0.0)

        if translation_failed:
            return self._apology_turn(
                conversation_id, user_text, language, normalized, english, timings, flags
            )

        # Stage 2a: retrieval.
        results = timed(
            "retrieve",
            lambda: self.index.retrieve(english, self.top_k, embed=self.gateway.embed),
        )
        chunk_ids = [r.chunk_id for r in results]
        chunks: list[KnowledgeChunk] = [
            c for c in (self.index.get(cid) for cid in chunk_ids) if c is not None
        ]
        if not chunks:
            flags.append("retrieve:empty")

        # Stage 2b: draft generation with length policy.
        prompt = assemble_prompt(self.policy, self.fragments, chunks, history, english)
        needs_details = self.policy.needs_details(english)
        declined = self.policy.declined_details(u for u, _ in history)
        draft = timed(
            "generate",
            lambda: generate_answer(
                self.gateway,
                prompt,
                self.policy,
                needs_details=needs_details,
                declined=declined,
            ),
        )
        draft, length_flags = enforce_length(draft, self.policy.word_cap)
        flags.extend(length_flags)

        # Guardrails: regenerate once on failure, then fall back to referral.
        report = timed(
            "guardrails",
            lambda: apply_guardrails(
                draft, english, self.rules, referral_required=self.policy.referral_required
            ),
        )
        if not report.passed:
            flags.append("guardrail:regenerated")
            draft = generate_answer(
                self.gateway,
                prompt,
                self.policy,
                needs_details=needs_details,
                declined=declined,
            )
            draft, _ = enforce_length(draft, self.policy.word_cap)
            report = apply_guardrails(
                draft, english, self.rules, referral_required=self.policy.referral_required
            )
        if not report.passed:
            flags.append("guardrail:fallback")
            draft = f"{GENERATION_FALLBACK_EN} {self.policy.referral_phrase}"
            report = apply_guardrails(
                draft, english, self.rules, referral_required=self.policy.referral_required
            )

        # Stage 2c: render in the user's language (non-Roman input is
        # answered in Hinglish, flagged by normalization).
        target = Language.ENGLISH if language is Language.ENGLISH else Language.HINGLISH
        answer_user = timed(
            "back_translate", lambda: self.translator.to_user_language(draft, target)
        )
        if answer_user == APOLOGY_FALLBACK:
            flags.append("back_translate:apology-fallback")
        answer_user, user_length_flags = enforce_length(answer_user, self.policy.word_cap)
        flags.extend(f"final-{f}" for f in user_length_flags)

        # Stage 3: localization.
        localized_report = timed("localize", lambda: localize(answer_user, self.lexicon))
        localized = localized_report.output_text

        trace = PipelineTrace(
            raw_query=user_text,
            normalized_query=normalized,
            english_query=english,
            retrieved_chunk_ids=chunk_ids,
            draft_answer_english=draft,
            answer_user_language=answer_user,
            localized_answer=localized,
            guardrail_report=report,
            stage_timings=timings,
            flags=flags,
        )
        return self._persist(conversation_id, user_text, language, localized, trace)

    def _apology_turn(
        self,
        conversation_id: str,
        user_text: str,
        language: Language,
        normalized: str,
        english: str,
        timings: dict[str, float],
        flags: list[str],
    ) -> TurnResult:
        """Deliver the fixed apology + teleconsultation referral."""
        draft = f"{GENERATION_FALLBACK_EN} {self.policy.referral_phrase}"
        answer_user = APOLOGY_FALLBACK if language is not Language.ENGLISH else draft
        for stage in ("retrieve", "generate", "guardrails", "back_translate", "localize"):
            timings.setdefault(stage, 0.0)
            flags.append(f"{stage}:skipped-apology")
        report = apply_guardrails(
            draft, english, self.rules, referral_required=self.policy.referral_required
        )
        trace = PipelineTrace(
            raw_query=user_text,
            normalized_query=normalized,
            english_query=english,
            retrieved_chunk_ids=[],
            draft_answer_english=draft,
            answer_user_language=answer_user,
            localized_answer=answer_user,
            guardrail_report=report,
            stage_timings=timings,
            flags=flags,
        )
        return self._persist(conversation_id, user_text, language, answer_user, trace)

    def _persist(
        self,
        conversation_id: str,
        user_text: str,
        language: Language,
        response_text: str,
        trace: PipelineTrace,
    ) -> TurnResult:
        message_id = new_message_id()
        log = MessageLog(
            conversation_id=conversation_id,
            message_id=message_id,
            timestamp=self.clock(),
            language=language,
            user_text=user_text,
            response_text=response_text,
            topic=analytics.classify_topic(user_text, self.gateway),
            question_type=analytics.classify_type(user_text, self.gateway),
        )
        self.log_store.append(log)
        self.trace_store.put(message_id, trace)
        return TurnResult(
            message_id=message_id,
            response_text=response_text,
            language=language,
            trace=trace,
        )
