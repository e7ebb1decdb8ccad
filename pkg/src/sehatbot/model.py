"""Shared data model: conversation logs, taxonomy enums, pipeline traces.

The message log is the system of record; everything else (sessions,
analytics, traces) is derived from or attached to it.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

LOG_FIELDS = (
    "conversation_id",
    "message_id",
    "timestamp",
    "language",
    "user_text",
    "response_text",
    "topic",
    "question_type",
)


class LogError(ValueError):
    """A record violates the message-log contract."""


class Language(str, Enum):
    HINGLISH = "hinglish"
    ENGLISH = "english"
    OTHER = "other"


class Topic(str, Enum):
    CONTRACEPTIVE_METHODS = "contraceptive_methods"
    FAMILY_PLANNING = "family_planning"
    SEXUAL_HEALTH = "sexual_health"
    PREGNANCY = "pregnancy"
    STERILIZATION = "sterilization"
    REPRODUCTIVE_ANATOMY = "reproductive_anatomy"
    MENSTRUAL_HEALTH = "menstrual_health"
    ABORTION = "abortion"
    FERTILITY_SUPPORT = "fertility_support"
    MISCARRIAGE = "miscarriage"
    FOLLOW_UP = "follow_up"


class QuestionType(str, Enum):
    BASIC_CONCEPTUAL_INQUIRY = "basic_conceptual_inquiry"
    COMPLEX_QUERY = "complex_query"
    ADVICE_OPINION = "advice_opinion"
    HEALTH_SAFETY_CONCERN = "health_safety_concern"
    MISCONCEPTION = "misconception"
    NORMS_AND_ETHICS = "norms_and_ethics"
    HEALTHCARE_ACCESS = "healthcare_access"
    FOLLOW_UP = "follow_up"


@dataclass(frozen=True)
class OtherCategory:
    """Lossless escape for category labels that are not in the fixed enums.

    Ingest must never drop data, so unknown labels ride along verbatim.
    """

    raw: str

    @property
    def value(self) -> str:
        return self.raw


TopicLabel = Union[Topic, OtherCategory]
TypeLabel = Union[QuestionType, OtherCategory]


def parse_topic(raw: str) -> TopicLabel:
    try:
        return Topic(raw)
    except ValueError:
        return OtherCategory(raw)


def parse_question_type(raw: str) -> TypeLabel:
    try:
        return QuestionType(raw)
    except ValueError:
        return OtherCategory(raw)


def new_conversation(now: Optional[datetime] = None) -> str:
    """Fresh 128-bit random identifier, lowercase hex."""
    return uuid.uuid4().hex


def new_message_id() -> str:
    return uuid.uuid4().hex


def _format_rfc3339(ts: datetime) -> str:
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc).isoformat()


def _parse_rfc3339(raw: str) -> datetime:
    ts = datetime.fromisoformat(raw.replace("Z", "+00:00"))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts


@dataclass
class MessageLog:
    """One question-answer interaction."""

    conversation_id: str
    message_id: str
    timestamp: datetime
    language: Language
    user_text: str
    response_text: str
    topic: Optional[TopicLabel] = None
    question_type: Optional[TypeLabel] = None

    def validate(self) -> None:
        if not self.conversation_id or not self.message_id:
            raise LogError("conversation_id and message_id are required")
        if not self.user_text.strip():
            raise LogError("user_text must be non-empty after trimming")
        if not isinstance(self.timestamp, datetime):
            raise LogError("timestamp must be a datetime")

    def to_json_dict(self) -> dict:
        return {
            "conversation_id": self.conversation_id,
            "message_id": self.message_id,
            "timestamp": _format_rfc3339(self.timestamp),
            "language": self.language.value,
            "user_text": self.user_text,
            "response_text": self.response_text,
            "topic": self.topic.value if self.topic is not None else None,
            "question_type": (
                self.question_type.value if self.question_type is not None else None
            ),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MessageLog":
        return cls(
            conversation_id=data["conversation_id"],
            message_id=data["message_id"],
            timestamp=_parse_rfc3339(data["timestamp"]),
            language=Language(data["language"]),
            user_text=data["user_text"],
            response_text=data["response_text"],
            topic=parse_topic(data["topic"]) if data.get("topic") else None,
            question_type=(
                parse_question_type(data["question_type"])
                if data.get("question_type")
                else None
            ),
        )


class LogStore:
    """Append-only message log, line-delimited JSON on disk.

    Appends from independent conversations may be concurrent; the store
    serializes the file write itself. Within one conversation the caller
    (session layer) must serialize turns.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self._path = Path(path) if path else None
        self._lock = threading.Lock()
        self._records: list[MessageLog] = []
        self._seen: set[tuple[str, str]] = set()
        self._last_ts: dict[str, datetime] = {}
        if self._path and self._path.exists():
            for line in self._path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    self._ingest(MessageLog.from_json_dict(json.loads(line)))

    def _ingest(self, log: MessageLog) -> None:
        key = (log.conversation_id, log.message_id)
        if key in self._seen:
            raise LogError(f"duplicate message_id {log.message_id!r} in conversation")
        last = self._last_ts.get(log.conversation_id)
        if last is not None and log.timestamp < last:
            raise LogError("timestamps must be non-decreasing within a conversation")
        self._records.append(log)
        self._seen.add(key)
        self._last_ts[log.conversation_id] = log.timestamp

    def append(self, log: MessageLog) -> None:
        log.validate()
        with self._lock:
            self._ingest(log)
            if self._path:
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(log.to_json_dict(), ensure_ascii=False) + "\n")

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[MessageLog]:
        with self._lock:
            return iter(list(self._records))

    def conversation(self, conversation_id: str) -> list[MessageLog]:
        """History for one conversation, ordered by (timestamp, message_id)."""
        with self._lock:
            records = [r for r in self._records if r.conversation_id == conversation_id]
        return sorted(records, key=lambda r: (r.timestamp, r.message_id))


@dataclass(frozen=True)
class Violation:
    rule_id: str
    matched_span: tuple[int, int]
    matched_text: str

    def to_json_dict(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "matched_span": list(self.matched_span),
            "matched_text": self.matched_text,
        }


@dataclass
class GuardrailReport:
    violations: list[Violation]
    referral_present: bool
    register_ok: bool
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "violations": [v.to_json_dict() for v in self.violations],
            "referral_present": self.referral_present,
            "register_ok": self.register_ok,
            "passed": self.passed,
        }


# The seven per-turn stage fields, in pipeline order.
TRACE_STAGES = (
    "raw_query",
    "normalized_query",
    "english_query",
    "retrieved_chunk_ids",
    "draft_answer_english",
    "answer_user_language",
    "localized_answer",
)


@dataclass
class PipelineTrace:
    """Auditable record of one turn through the three-stage flow.

    Every stage field is populated exactly once per turn; skipped or
    degraded stages are recorded in ``flags`` rather than left empty.
    """

    raw_query: str
    normalized_query: str
    english_query: str
    retrieved_chunk_ids: list[str]
    draft_answer_english: str
    answer_user_language: str
    localized_answer: str
    guardrail_report: GuardrailReport
    stage_timings: dict[str, float]
    flags: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "raw_query": self.raw_query,
            "normalized_query": self.normalized_query,
            "english_query": self.english_query,
            "retrieved_chunk_ids": list(self.retrieved_chunk_ids),
            "draft_answer_english": self.draft_answer_english,
            "answer_user_language": self.answer_user_language,
            "localized_answer": self.localized_answer,
            "guardrail_report": self.guardrail_report.to_json_dict(),
            "stage_timings": dict(self.stage_timings),
            "flags": list(self.flags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, sort_keys=True)


class TraceStore:
    """Per-turn pipeline traces, JSONL, keyed by message_id."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self._path = Path(path) if path else None
        self._lock = threading.Lock()
        self._traces: dict[str, PipelineTrace] = {}

    def put(self, message_id: str, trace: PipelineTrace) -> None:
        with self._lock:
            self._traces[message_id] = trace
            if self._path:
                row = {"message_id": message_id, **trace.to_json_dict()}
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(row, ensure_ascii=False) + "\n")

    def get(self, message_id: str) -> Optional[PipelineTrace]:
        with self._lock:
            return self._traces.get(message_id)

    def __len__(self) -> int:
        return len(self._traces)


def word_count(text: str) -> int:
    """Words are maximal non-whitespace runs."""
    return len(text.split())


def history_ordered(logs: Iterable[MessageLog]) -> list[MessageLog]:
    return sorted(logs, key=lambda r: (r.timestamp, r.message_id))
