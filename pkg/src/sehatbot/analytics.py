"""Classify logged queries into the topic/type taxonomies and compute
descriptive statistics (word lengths, hourly activity).

Classification is rule-first (keyword cascade in fixed priority order),
with an optional gateway fallback for open text, and a fixed default
when even that fails. Rules keep the desk-scale tests deterministic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union
from zoneinfo import ZoneInfo

from .gateway import ENVELOPE_CATEGORY, GatewayError, PromptRequest
from .model import MessageLog, OtherCategory, QuestionType, Topic, word_count

DEFAULT_ZONE = "Asia/Kolkata"

# First match wins; specific topics come before broad ones so e.g. a
# miscarriage question mentioning pregnancy lands on miscarriage.
TOPIC_RULES: tuple[tuple[Topic, tuple[str, ...]], ...] = (
    (Topic.MISCARRIAGE, ("miscarriage", "garbhpat", "baccha gir", "bacha gir")),
    (Topic.ABORTION, ("abortion", "garbh gira", "pregnancy khatam", "mtp")),
    (
        Topic.FERTILITY_SUPPORT,
        ("ivf", "in vitro", "fertility treatment", "test tube baby", "surrogacy"),
    ),
    (
        Topic.STERILIZATION,
        ("nasbandi", "vasectomy", "tubectomy", "sterilization", "sterilisation", "tanke"),
    ),
    (
        Topic.CONTRACEPTIVE_METHODS,
        (
            "condom", "copper-t", "copper t", "cooper t", "iud", "diaphragm",
            "contraceptive", "garbh nirodhak", "garbhnirodhak", "mala-d", "mala d",
            "saheli", "goli", "pill", "patch", "injection se bach",
        ),
    ),
    (
        Topic.MENSTRUAL_HEALTH,
        ("period", "mahavari", "masik", "menstrual", "mc aana", "mahina aana"),
    ),
    (
        Topic.REPRODUCTIVE_ANATOMY,
        ("sperm", "shukranu", "uterus", "bachedani", "ovary", "anda", "yoni", "vagina", "penis", "ling"),
    ),
    (
        Topic.PREGNANCY,
        ("pregnan", "garbhavastha", "garbhvati", "conceive", "baccha nahi", "bacha nahi", "pet se"),
    ),
    (
        Topic.SEXUAL_HEALTH,
        ("hiv", "aids", "std", "sti", "safe sex", "sex karne se", "sambhog", "infection"),
    ),
    (
        Topic.FAMILY_PLANNING,
        ("family planning", "parivar niyojan", "bachon mein antar", "kitne bachche"),
    ),
)

TYPE_RULES: tuple[tuple[QuestionType, tuple[str, ...]], ...] = (
    (
        QuestionType.MISCONCEPTION,
        (
            "adrak", "ginger", "papaya se", "myth", "galatfahmi",
            "condom se hiv", "condoms cause", "sach hai kya", "kya yeh sach",
        ),
    ),
    (
        QuestionType.HEALTHCARE_ACCESS,
        ("paisa", "paise", "money", "free mein", "muft", "kharcha", "cost", "afford", "sarkari"),
    ),
    (
        QuestionType.NORMS_AND_ETHICS,
        (
            "saal ki ladki", "saal ke ladki", "shadi se pehle", "before marriage",
            "religion", "dharm", "mana hai", "samaj", "log kya", "allowed",
            "proper age", "sahi umar",
        ),
    ),
    (
        QuestionType.HEALTH_SAFETY_CONCERN,
        (
            "side effect", "nuksan", "dard", "problem ho sakt", "risk", "khatra",
            "safe hai", "infection", "uti",
        ),
    ),
    (
        QuestionType.ADVICE_OPINION,
        (
            "kya kare", "kya karen", "kya karna chahiye", "should i", "sahi hai",
            "lena sahi", "karna sahi", "advice", "salah", "kaun sa behtar",
        ),
    ),
    (
        QuestionType.COMPLEX_QUERY,
        (
            "kitna time", "kitne din", "kaise use", "kaise lagate", "kab tak",
            "kitni baar", "use karne se", "lagane ke liye", "fail ho sakt",
        ),
    ),
    (
        QuestionType.BASIC_CONCEPTUAL_INQUIRY,
        ("kya hota hai", "kya hai", "what is", "kise kehte", "meaning", "matlab"),
    ),
)

_TOPIC_PROMPT = (
    "Classify the health question into exactly one of these topic labels: "
    + ", ".join(t.value for t in Topic)
    + '. Reply as JSON with the key "category".'
)
_TYPE_PROMPT = (
    "Classify the question style into exactly one of these labels: "
    + ", ".join(t.value for t in QuestionType)
    + '. Reply as JSON with the key "category".'
)


def _gateway_label(gateway, system_text: str, query_text: str) -> str:
    try:
        return gateway.complete(
            PromptRequest(
                system_text=system_text,
                user_text=query_text,
                expected_envelope_key=ENVELOPE_CATEGORY,
            )
        ).strip().lower()
    except (GatewayError, ValueError):
        return ""


def classify_topic(query_text: str, gateway=None, *, is_followup: bool = False) -> Topic:
    """Exactly one topic per query; follow-ups only via reply linkage."""
    if not query_text.strip():
        raise ValueError("query_text must be non-empty")
    if is_followup:
        return Topic.FOLLOW_UP
    lowered = query_text.lower()
    for topic, needles in TOPIC_RULES:
        if any(n in lowered for n in needles):
            return topic
    if gateway is not None:
        label = _gateway_label(gateway, _TOPIC_PROMPT, query_text)
        try:
            candidate = Topic(label)
            if candidate is not Topic.FOLLOW_UP:
                return candidate
        except ValueError:
            pass
    return Topic.FAMILY_PLANNING


def classify_type(query_text: str, gateway=None, *, is_followup: bool = False) -> QuestionType:
    if not query_text.strip():
        raise ValueError("query_text must be non-empty")
    if is_followup:
        return QuestionType.FOLLOW_UP
    lowered = query_text.lower()
    for qtype, needles in TYPE_RULES:
        if any(n in lowered for n in needles):
            return qtype
    if gateway is not None:
        label = _gateway_label(gateway, _TYPE_PROMPT, query_text)
        try:
            candidate = QuestionType(label)
            if candidate is not QuestionType.FOLLOW_UP:
                return candidate
        except ValueError:
            pass
    return QuestionType.BASIC_CONCEPTUAL_INQUIRY


def hourly_histogram(
    logs: Iterable[MessageLog], zone: Union[str, ZoneInfo] = DEFAULT_ZONE
) -> list[int]:
    """24 bins; bin h counts messages whose local hour-of-day is h."""
    if isinstance(zone, str):
        zone = ZoneInfo(zone)
    bins = [0] * 24
    for log in logs:
        bins[log.timestamp.astimezone(zone).hour] += 1
    return bins


@dataclass(frozen=True)
class LengthSummary:
    min: int
    max: int
    mean: float


@dataclass(frozen=True)
class LengthStats:
    prompt: LengthSummary
    response: LengthSummary


def _summary(counts: Sequence[int]) -> LengthSummary:
    return LengthSummary(
        min=min(counts), max=max(counts), mean=round(sum(counts) / len(counts), 1)
    )


def length_stats(logs: Sequence[MessageLog]) -> LengthStats:
    """Whitespace-token word counts over prompts and responses."""
    logs = list(logs)
    if not logs:
        raise ValueError("length_stats needs a non-empty log set")
    return LengthStats(
        prompt=_summary([word_count(l.user_text) for l in logs]),
        response=_summary([word_count(l.response_text) for l in logs]),
    )


@dataclass
class Tabulation:
    topic_counts: dict[str, int]
    type_counts: dict[str, int]
    total: int

    def to_text(self) -> str:
        lines = ["topic counts:"]
        for label, count in self.topic_counts.items():
            lines.append(f"  {label:28s} {count:6d}")
        lines.append("question type counts:")
        for label, count in self.type_counts.items():
            lines.append(f"  {label:28s} {count:6d}")
        lines.append(f"total messages: {self.total}")
        return "\n".join(lines)


def _label_of(category, fallback: str) -> str:
    if category is None:
        return fallback
    if isinstance(category, OtherCategory):
        return category.raw
    return category.value


def tabulate(logs: Iterable[MessageLog]) -> Tabulation:
    """Per-category counts plus total, over the stored labels.

    Unlabelled logs are classified with the rule cascade only (no
    gateway), so tabulation is always deterministic and offline.
    """
    topic_counts = {t.value: 0 for t in Topic}
    type_counts = {t.value: 0 for t in QuestionType}
    total = 0
    for log in logs:
        total += 1
        topic = log.topic if log.topic is not None else classify_topic(log.user_text)
        qtype = (
            log.question_type
            if log.question_type is not None
            else classify_type(log.user_text)
        )
        topic_label = _label_of(topic, Topic.FAMILY_PLANNING.value)
        type_label = _label_of(qtype, QuestionType.BASIC_CONCEPTUAL_INQUIRY.value)
        topic_counts[topic_label] = topic_counts.get(topic_label, 0) + 1
        type_counts[type_label] = type_counts.get(type_label, 0) + 1
    return Tabulation(topic_counts=topic_counts, type_counts=type_counts, total=total)


def _csv_bytes(header: tuple[str, str], rows: Iterable[tuple[str, int]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().encode("utf-8")


def report_bytes(
    logs: Sequence[MessageLog], zone: Union[str, ZoneInfo] = DEFAULT_ZONE
) -> dict[str, bytes]:
    """The four report files as name -> bytes (shared by CLI and service)."""
    logs = list(logs)
    table = tabulate(logs)
    files: dict[str, bytes] = {}
    files["topics.csv"] = _csv_bytes(
        ("topic", "count"),
        list(table.topic_counts.items()) + [("total", table.total)],
    )
    files["types.csv"] = _csv_bytes(
        ("question_type", "count"),
        list(table.type_counts.items()) + [("total", table.total)],
    )
    files["hourly.csv"] = _csv_bytes(
        ("hour", "count"), list(enumerate(hourly_histogram(logs, zone)))
    )
    if logs:
        stats = length_stats(logs)
        lengths = (
            f"prompt words: min {stats.prompt.min}, max {stats.prompt.max}, "
            f"mean {stats.prompt.mean}\n"
            f"response words: min {stats.response.min}, max {stats.response.max}, "
            f"mean {stats.response.mean}\n"
        )
    else:
        lengths = "no messages logged\n"
    files["lengths.txt"] = lengths.encode("utf-8")
    return files


def write_reports(
    logs: Sequence[MessageLog],
    out_dir: Union[str, Path],
    zone: Union[str, ZoneInfo] = DEFAULT_ZONE,
) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, data in report_bytes(logs, zone).items():
        path = out / name
        path.write_bytes(data)
        written.append(path)
    return written
