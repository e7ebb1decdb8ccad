import random
from datetime import datetime, timedelta, timezone
from zoneinfo import ZoneInfo

import pytest

from sehatbot.analytics import (
    classify_topic,
    classify_type,
    hourly_histogram,
    length_stats,
    report_bytes,
    tabulate,
    write_reports,
)
from sehatbot.gateway import MockGateway
from sehatbot.model import Language, MessageLog, QuestionType, Topic

KOLKATA = ZoneInfo("Asia/Kolkata")

# Published per-category query counts the fixtures reproduce.
TOPIC_DISTRIBUTION = {
    Topic.CONTRACEPTIVE_METHODS: 657,
    Topic.FAMILY_PLANNING: 541,
    Topic.SEXUAL_HEALTH: 258,
    Topic.PREGNANCY: 227,
    Topic.STERILIZATION: 182,
    Topic.REPRODUCTIVE_ANATOMY: 99,
    Topic.MENSTRUAL_HEALTH: 80,
    Topic.ABORTION: 34,
    Topic.FERTILITY_SUPPORT: 17,
    Topic.MISCARRIAGE: 4,
    Topic.FOLLOW_UP: 9,
}
TYPE_DISTRIBUTION = {
    QuestionType.BASIC_CONCEPTUAL_INQUIRY: 577,
    QuestionType.COMPLEX_QUERY: 438,
    QuestionType.ADVICE_OPINION: 504,
    QuestionType.HEALTH_SAFETY_CONCERN: 365,
    QuestionType.MISCONCEPTION: 137,
    QuestionType.NORMS_AND_ETHICS: 68,
    QuestionType.HEALTHCARE_ACCESS: 20,
    QuestionType.FOLLOW_UP: 9,
}
TOTAL = 2118


def make_log(i, ts, topic=None, qtype=None, user_text="sawaal hai", response_text="jawab"):
    return MessageLog(
        conversation_id=f"c{i % 50}",
        message_id=f"m{i:05d}",
        timestamp=ts,
        language=Language.HINGLISH,
        user_text=user_text,
        response_text=response_text,
        topic=topic,
        question_type=qtype,
    )


def topic_fixture():
    """Logs labeled with the published topic counts (their rows sum to 2108)."""
    topics = [t for t, n in TOPIC_DISTRIBUTION.items() for _ in range(n)]
    rng = random.Random(42)
    rng.shuffle(topics)
    base = datetime(2024, 1, 15, 3, 0, tzinfo=KOLKATA)
    return [
        make_log(
            i,
            (base + timedelta(seconds=i)).astimezone(timezone.utc),
            topic,
            QuestionType.BASIC_CONCEPTUAL_INQUIRY,
        )
        for i, topic in enumerate(topics)
    ]


def type_fixture():
    """Logs labeled with the published question-type counts (sum 2118)."""
    types = [t for t, n in TYPE_DISTRIBUTION.items() for _ in range(n)]
    rng = random.Random(43)
    rng.shuffle(types)
    base = datetime(2024, 1, 15, 3, 0, tzinfo=KOLKATA)
    return [
        make_log(
            i,
            (base + timedelta(seconds=i)).astimezone(timezone.utc),
            Topic.FAMILY_PLANNING,
            qtype,
        )
        for i, qtype in enumerate(types)
    ]


# --- classification -----------------------------------------------------


@pytest.mark.parametrize(
    "query,topic",
    [
        ("Condom Kya hota hai?", Topic.CONTRACEPTIVE_METHODS),
        ("IVF india me bhi hota hai kya?", Topic.FERTILITY_SUPPORT),
        (
            "Pregnancy rukne ke bad bar bar Miscarriage hone ka kya karan ho sakti hai?",
            Topic.MISCARRIAGE,
        ),
    ],
)
def test_topic_examples(query, topic):
    assert classify_topic(query) is topic


@pytest.mark.parametrize(
    "query,qtype",
    [
        ("Condom Kya hota hai?", QuestionType.BASIC_CONCEPTUAL_INQUIRY),
        ("Paisa Na Ho to Kya family planning ho sakti hai?", QuestionType.HEALTHCARE_ACCESS),
        ("Adrak ka juice peene se kya abortion hota hai?", QuestionType.MISCONCEPTION),
    ],
)
def test_type_examples(query, qtype):
    assert classify_type(query) is qtype


def test_norms_and_ethics_example():
    assert classify_type("15 saal ki ladki kaise karegi family planning?") is (
        QuestionType.NORMS_AND_ETHICS
    )


def test_followup_only_via_linkage():
    assert classify_topic("aur batao", is_followup=True) is Topic.FOLLOW_UP
    assert classify_topic("aur batao") is not Topic.FOLLOW_UP


def test_classifier_deterministic_under_mock(gateway):
    query = "yeh ek bilkul naya anokha sawaal hai"
    first = classify_topic(query, gateway)
    assert all(classify_topic(query, gateway) is first for _ in range(10))


def test_gateway_failure_falls_back_to_family_planning():
    from sehatbot.gateway import ProviderTimeout

    class Failing(MockGateway):
        def _reply(self, req):
            raise ProviderTimeout("down")

    assert classify_topic("anokha sawaal", Failing()) is Topic.FAMILY_PLANNING
    assert classify_type("anokha sawaal", Failing()) is (
        QuestionType.BASIC_CONCEPTUAL_INQUIRY
    )


def test_classifiers_total_over_fixture(fixture_queries):
    for fixture in fixture_queries:
        assert classify_topic(fixture["query"]) in Topic
        assert classify_type(fixture["query"]) in QuestionType


def test_empty_query_rejected():
    with pytest.raises(ValueError):
        classify_topic(" ")


# --- hourly histogram ---------------------------------------------------


def test_all_logs_same_hour():
    base = datetime(2024, 2, 1, 2, 15, tzinfo=KOLKATA)
    logs = [make_log(i, base + timedelta(minutes=i % 40)) for i in range(17)]
    bins = hourly_histogram(logs, KOLKATA)
    assert bins[2] == 17
    assert sum(bins) == 17


def test_late_night_edge():
    ts = datetime(2024, 2, 1, 23, 59, tzinfo=KOLKATA)
    bins = hourly_histogram([make_log(0, ts)], KOLKATA)
    assert bins[23] == 1


def test_zone_matters():
    ts = datetime(2024, 2, 1, 0, 30, tzinfo=timezone.utc)  # 06:00 IST
    bins = hourly_histogram([make_log(0, ts)], "Asia/Kolkata")
    assert bins[6] == 1


def test_planted_morning_peak_fixture():
    """1900 messages in local hours 6-11, 218 elsewhere, 2118 total."""
    rng = random.Random(7)
    logs = []
    base = datetime(2024, 1, 20, tzinfo=KOLKATA)
    for i in range(1900):
        ts = base.replace(hour=6 + i % 6, minute=rng.randrange(60))
        logs.append(make_log(i, ts + timedelta(days=i % 30)))
    other_hours = [h for h in range(24) if not 6 <= h <= 11]
    for j in range(218):
        ts = base.replace(hour=other_hours[j % len(other_hours)], minute=rng.randrange(60))
        logs.append(make_log(1900 + j, ts + timedelta(days=j % 30)))
    bins = hourly_histogram(logs, KOLKATA)
    assert sum(bins) == 2118
    assert sum(bins[6:12]) == 1900


def test_histogram_invariant_under_permutation():
    rng = random.Random(9)
    base = datetime(2024, 3, 1, tzinfo=KOLKATA)
    logs = [
        make_log(i, base + timedelta(hours=rng.randrange(240))) for i in range(120)
    ]
    shuffled = logs[:]
    rng.shuffle(shuffled)
    assert hourly_histogram(logs, KOLKATA) == hourly_histogram(shuffled, KOLKATA)


# --- length stats -------------------------------------------------------


def words(n):
    return " ".join(f"w{i}" for i in range(n))


def test_published_length_stats_fixture():
    """Prompt lengths min 3, max 70, mean exactly 11.0."""
    counts = [3, 70] + [10] * 51  # (3 + 70 + 510) / 53 == 11.0
    base = datetime(2024, 1, 5, 8, 0, tzinfo=KOLKATA)
    logs = [
        make_log(i, base + timedelta(minutes=i), user_text=words(c))
        for i, c in enumerate(counts)
    ]
    stats = length_stats(logs)
    assert (stats.prompt.min, stats.prompt.max, stats.prompt.mean) == (3, 70, 11.0)


def test_single_log_stats():
    base = datetime(2024, 1, 5, 8, 0, tzinfo=KOLKATA)
    stats = length_stats([make_log(0, base, user_text=words(5))])
    assert (stats.prompt.min, stats.prompt.max, stats.prompt.mean) == (5, 5, 5.0)


def test_response_stats_reproduce_hand_counts(mock_replies):
    from sehatbot.gateway import ENVELOPE_ANSWER, mock_reply_key

    saheli = mock_replies[mock_reply_key(ENVELOPE_ANSWER, "Does Saheli tablet change the date of periods?")]
    vasectomy = mock_replies[mock_reply_key(ENVELOPE_ANSWER, "Can vasectomy fail after 3 years?")]
    base = datetime(2024, 1, 5, 8, 0, tzinfo=KOLKATA)
    logs = [
        make_log(0, base, response_text=saheli),
        make_log(1, base + timedelta(minutes=1), response_text=vasectomy),
    ]
    stats = length_stats(logs)
    hand_counts = sorted((len(saheli.split()), len(vasectomy.split())))
    assert stats.response.min == hand_counts[0]
    assert stats.response.max == hand_counts[1]
    assert stats.response.mean == round(sum(hand_counts) / 2, 1)


def test_empty_set_rejected():
    with pytest.raises(ValueError):
        length_stats([])


# --- tabulation ---------------------------------------------------------


def test_tabulate_reproduces_topic_distribution():
    table = tabulate(topic_fixture())
    for topic, count in TOPIC_DISTRIBUTION.items():
        assert table.topic_counts[topic.value] == count
    assert table.total == sum(TOPIC_DISTRIBUTION.values())  # 2108 as published


def test_tabulate_reproduces_type_distribution():
    table = tabulate(type_fixture())
    for qtype, count in TYPE_DISTRIBUTION.items():
        assert table.type_counts[qtype.value] == count
    assert table.total == TOTAL


def test_partition_property():
    logs = type_fixture()[:500]
    table = tabulate(logs)
    assert sum(table.topic_counts.values()) == len(logs)
    assert sum(table.type_counts.values()) == len(logs)


def test_empty_log_set_all_zero():
    table = tabulate([])
    assert table.total == 0
    assert set(table.topic_counts.values()) == {0}
    assert set(table.type_counts.values()) == {0}


def test_reports_render_text_and_csv(tmp_path):
    logs = type_fixture()[:100]
    files = report_bytes(logs)
    assert set(files) == {"topics.csv", "types.csv", "hourly.csv", "lengths.txt"}
    assert files["topics.csv"].startswith(b"topic,count\n")
    assert tabulate(logs).to_text().startswith("topic counts:")
    written = write_reports(logs, tmp_path / "out")
    assert sorted(p.name for p in written) == [
        "hourly.csv",
        "lengths.txt",
        "topics.csv",
        "types.csv",
    ]
