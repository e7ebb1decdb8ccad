import io
import threading
import zipfile
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from sehatbot import analytics
from sehatbot.gateway import MockGateway
from sehatbot.service import (
    FEEDBACK_METRICS,
    Synthesizer,
    build_mock_stack,
    create_app,
)

ADMIN = "test-admin-token"


class CapturingSynthesizer(Synthesizer):
    def __init__(self):
        self.requests = []

    def synthesize(self, text, overrides):
        self.requests.append((text, overrides))
        return b"RIFFfake-wav"


@pytest.fixture()
def stack(tmp_path):
    return build_mock_stack(
        log_path=tmp_path / "messages.jsonl",
        trace_path=tmp_path / "traces.jsonl",
        admin_token=ADMIN,
    )


@pytest.fixture()
def client(stack):
    return TestClient(create_app(stack))


def open_session(client):
    resp = client.post("/session")
    assert resp.status_code == 200
    return resp.json()


def send(client, conversation_id, text):
    return client.post(f"/session/{conversation_id}/message", json={"text": text})


# --- session ------------------------------------------------------------


def test_session_greeting_and_suggestions(client):
    body = open_session(client)
    assert body["greeting"].startswith("Namaste")
    assert len(body["suggested_questions"]) == 3
    assert body["conversation_id"]


def test_two_sessions_distinct_ids(client):
    assert open_session(client)["conversation_id"] != open_session(client)["conversation_id"]


def test_session_503_when_gateway_down(tmp_path):
    stack = build_mock_stack(
        log_path=tmp_path / "m.jsonl", gateway=MockGateway(healthy=False)
    )
    client = TestClient(create_app(stack))
    assert client.post("/session").status_code == 503


# --- message ------------------------------------------------------------


def test_message_flow_returns_golden_answer(client):
    sid = open_session(client)["conversation_id"]
    resp = send(client, sid, "Saheli tablet se periods ka date badal jata hai kya?")
    assert resp.status_code == 200
    body = resp.json()
    assert body["response_text"].startswith("Saheli, jo Centchroman ke naam se")
    assert body["message_id"] == body["trace_id"]


def test_message_unknown_session_404(client):
    assert send(client, "nope", "hello").status_code == 404


def test_message_whitespace_422(client):
    sid = open_session(client)["conversation_id"]
    assert send(client, sid, "   ").status_code == 422


def test_message_persists_log_and_trace(client, stack):
    sid = open_session(client)["conversation_id"]
    body = send(client, sid, "Condom Kya hota hai?").json()
    logs = stack.log_store.conversation(sid)
    assert len(logs) == 1
    assert logs[0].message_id == body["message_id"]
    assert stack.trace_store.get(body["message_id"]) is not None


def test_sequential_messages_persist_in_order(client, stack):
    sid = open_session(client)["conversation_id"]
    texts = [f"sawaal number {i} kya hai?" for i in range(4)]
    for text in texts:
        assert send(client, sid, text).status_code == 200
    logs = stack.log_store.conversation(sid)
    assert [l.user_text for l in logs] == texts


def test_concurrent_interleaved_sessions_stay_ordered(client, stack):
    """10 sessions, 3 messages each, all in flight together."""
    sids = [open_session(client)["conversation_id"] for _ in range(10)]
    texts = {sid: [f"{sid[:6]} sawaal {i}" for i in range(3)] for sid in sids}

    def run_session(sid):
        for text in texts[sid]:
            assert send(client, sid, text).status_code == 200

    with ThreadPoolExecutor(max_workers=10) as pool:
        list(pool.map(run_session, sids))

    for sid in sids:
        logs = stack.log_store.conversation(sid)
        assert [l.user_text for l in logs] == texts[sid]
        stamps = [l.timestamp for l in logs]
        assert stamps == sorted(stamps)


def test_concurrent_sends_within_one_session_serialize(client, stack):
    """Racing sends to the same session all complete, turns stay atomic."""
    sid = open_session(client)["conversation_id"]
    texts = [f"ek hi session ka sawaal {i} kya hai?" for i in range(4)]
    with ThreadPoolExecutor(max_workers=4) as pool:
        codes = list(pool.map(lambda t: send(client, sid, t).status_code, texts))
    assert codes == [200] * 4
    logs = stack.log_store.conversation(sid)
    assert sorted(l.user_text for l in logs) == sorted(texts)
    stamps = [l.timestamp for l in logs]
    assert stamps == sorted(stamps)
    assert all(stack.trace_store.get(l.message_id) is not None for l in logs)


def test_gateway_failure_maps_to_502(tmp_path):
    from sehatbot.gateway import ENVELOPE_ANSWER, ProviderTimeout

    class FailingAnswer(MockGateway):
        def _reply(self, req):
            if req.expected_envelope_key == ENVELOPE_ANSWER:
                raise ProviderTimeout("down")
            return super()._reply(req)

    import json

    from sehatbot.service import DATA_DIR

    replies = json.loads((DATA_DIR / "mock_replies.json").read_text())["replies"]
    stack = build_mock_stack(
        log_path=tmp_path / "m.jsonl", gateway=FailingAnswer(replies=replies, seed=0)
    )
    client = TestClient(create_app(stack))
    sid = open_session(client)["conversation_id"]
    assert send(client, sid, "Condom kya hota hai?").status_code == 502


# --- feedback -----------------------------------------------------------


def all_fives():
    return {metric: 5 for metric in FEEDBACK_METRICS}


def test_feedback_happy_path(client, stack):
    sid = open_session(client)["conversation_id"]
    mid = send(client, sid, "Condom Kya hota hai?").json()["message_id"]
    resp = client.post(
        "/feedback",
        json={"conversation_id": sid, "message_id": mid, "ratings": all_fives()},
    )
    assert resp.status_code == 204
    assert len(stack.feedback) == 1


def test_feedback_rating_out_of_range(client):
    sid = open_session(client)["conversation_id"]
    mid = send(client, sid, "Condom Kya hota hai?").json()["message_id"]
    ratings = all_fives()
    ratings["overall_rating"] = 6
    resp = client.post(
        "/feedback",
        json={"conversation_id": sid, "message_id": mid, "ratings": ratings},
    )
    assert resp.status_code == 400


def test_feedback_unknown_metric_names_valid_set(client):
    sid = open_session(client)["conversation_id"]
    mid = send(client, sid, "Condom Kya hota hai?").json()["message_id"]
    resp = client.post(
        "/feedback",
        json={"conversation_id": sid, "message_id": mid, "ratings": {"speed": 5}},
    )
    assert resp.status_code == 400
    detail = resp.json()["detail"]
    for metric in FEEDBACK_METRICS:
        assert metric in detail


def test_feedback_unknown_message_404(client):
    sid = open_session(client)["conversation_id"]
    resp = client.post(
        "/feedback",
        json={"conversation_id": sid, "message_id": "missing", "ratings": all_fives()},
    )
    assert resp.status_code == 404


# --- tts ----------------------------------------------------------------


def test_tts_default_build_501_and_capability(client):
    sid = open_session(client)["conversation_id"]
    mid = send(client, sid, "Condom Kya hota hai?").json()["message_id"]
    resp = client.get("/tts", params={"message_id": mid})
    assert resp.status_code == 501
    assert resp.json()["tts"] is False
    assert client.get("/capabilities").json() == {"tts": False, "voice_input": False}


def test_tts_unknown_message_404(client):
    assert client.get("/tts", params={"message_id": "missing"}).status_code == 404


def test_tts_passes_pronunciation_overrides(tmp_path):
    synth = CapturingSynthesizer()
    stack = build_mock_stack(
        log_path=tmp_path / "m.jsonl", admin_token=ADMIN, synthesizer=synth
    )
    client = TestClient(create_app(stack))
    assert client.get("/capabilities").json()["tts"] is True
    sid = open_session(client)["conversation_id"]
    # golden answer mentions Myna's Telehealth -> override for "Myna" fires
    mid = send(client, sid, "Condom Kya hota hai?").json()["message_id"]
    resp = client.get("/tts", params={"message_id": mid})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("audio/")
    (text, overrides) = synth.requests[-1]
    assert any(word == "Myna" for word, _ in overrides)


# --- admin analytics ----------------------------------------------------


def test_admin_requires_token(client):
    assert client.get("/admin/analytics").status_code == 401
    assert (
        client.get("/admin/analytics", headers={"Authorization": "Bearer wrong"})
    ).status_code == 401


def test_admin_bundle_matches_cli_byte_for_byte(client, stack, tmp_path):
    sid = open_session(client)["conversation_id"]
    for text in ("Condom Kya hota hai?", "IVF india me bhi hota hai kya?"):
        assert send(client, sid, text).status_code == 200

    resp = client.get("/admin/analytics", headers={"Authorization": f"Bearer {ADMIN}"})
    assert resp.status_code == 200
    archive = zipfile.ZipFile(io.BytesIO(resp.content))
    names = sorted(archive.namelist())
    assert names == ["hourly.csv", "lengths.txt", "topics.csv", "types.csv"]

    out_dir = tmp_path / "cli-report"
    analytics.write_reports(list(stack.log_store), out_dir, stack.zone)
    for name in names:
        assert archive.read(name) == (out_dir / name).read_bytes()


def test_admin_counts_survive_cli_round_trip(client, stack, tmp_path):
    """CLI reading the persisted log file renders the same counts."""
    from sehatbot.cli import main as cli_main

    sid = open_session(client)["conversation_id"]
    send(client, sid, "Condom Kya hota hai?")
    log_path = stack.log_store._path
    out_dir = tmp_path / "report"
    assert cli_main(["analytics", "--logs", str(log_path), "--report", str(out_dir)]) == 0
    resp = client.get("/admin/analytics", headers={"Authorization": f"Bearer {ADMIN}"})
    archive = zipfile.ZipFile(io.BytesIO(resp.content))
    assert archive.read("topics.csv") == (out_dir / "topics.csv").read_bytes()
