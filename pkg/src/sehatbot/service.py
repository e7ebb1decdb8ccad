"""HTTP facade: sessions, the message pipeline, feedback, analytics, TTS.

Sessions are in-memory with an idle TTL; the durable artifacts are the
message log and the trace store. Turns within one session run behind a
per-session lock, so concurrent sends serialize in arrival order.
"""

from __future__ import annotations

import io
import os
import threading
import time
import zipfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, Header, HTTPException
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import analytics
from .gateway import GatewayError, MockGateway
from .generation import default_rules, greet, load_policy
from .knowledge import ingest_corpus
from .localization import load_lexicon
from .model import LogStore, MessageLog, TraceStore, new_conversation
from .pipeline import ChatPipeline, deterministic_timer
from .translation import Translator, load_hints

DATA_DIR = Path(__file__).parent / "data"
SESSION_TTL_S = 24 * 3600

FEEDBACK_METRICS = (
    "overall_rating",
    "satisfied_by_answer",
    "helpful_answer",
    "language_simplicity",
    "response_time",
    "friendliness",
    "helpfulness",
)


class FeedbackBody(BaseModel):
    conversation_id: str
    message_id: str
    ratings: dict[str, int]
    free_text: Optional[str] = None


class MessageBody(BaseModel):
    text: str


@dataclass
class Session:
    conversation_id: str
    created: float
    last_used: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class Synthesizer:
    """Pluggable text-to-speech hook. The default build ships none."""

    def synthesize(self, text: str, overrides: list[tuple[str, str]]) -> bytes:
        raise NotImplementedError


def load_pronunciations(path: Optional[Union[str, Path]] = None) -> list[tuple[str, str]]:
    path = Path(path) if path else DATA_DIR / "pronunciations.tsv"
    pairs = []
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        word, phonetic = (c.strip() for c in stripped.split("\t", 1))
        pairs.append((word, phonetic))
    return pairs


@dataclass
class ServiceStack:
    pipeline: ChatPipeline
    log_store: LogStore
    trace_store: TraceStore
    admin_token: str
    zone: str = analytics.DEFAULT_ZONE
    synthesizer: Optional[Synthesizer] = None
    pronunciations: list[tuple[str, str]] = field(default_factory=list)
    feedback: list[dict] = field(default_factory=list)
    sessions: dict[str, Session] = field(default_factory=dict)
    sessions_lock: threading.Lock = field(default_factory=threading.Lock)

    def capabilities(self) -> dict:
        return {"tts": self.synthesizer is not None, "voice_input": False}


def build_mock_stack(
    log_path: Optional[Union[str, Path]] = None,
    trace_path: Optional[Union[str, Path]] = None,
    profile_path: Optional[Union[str, Path]] = None,
    lexicon_path: Optional[Union[str, Path]] = None,
    corpus_dir: Optional[Union[str, Path]] = None,
    admin_token: str = "dev-token",
    synthesizer: Optional[Synthesizer] = None,
    gateway: Optional[MockGateway] = None,
) -> ServiceStack:
    """The deterministic stack: mock gateway, shipped corpus and configs."""
    from .cultural import load_profile

    gateway = gateway or MockGateway.from_fixture(DATA_DIR / "mock_replies.json")
    index = ingest_corpus(
        corpus_dir or DATA_DIR / "corpus",
        embed=gateway.embed,
        dimension=gateway.dimension,
    )
    translator = Translator(gateway, hints=load_hints(DATA_DIR / "hints.json"))
    policy = load_policy()
    lexicon = load_lexicon(lexicon_path or DATA_DIR / "lexicon.tsv")
    profile = load_profile(profile_path or DATA_DIR / "profile_default.yaml")
    log_store = LogStore(log_path)
    trace_store = TraceStore(trace_path)
    pipeline = ChatPipeline(
        gateway=gateway,
        index=index,
        translator=translator,
        policy=policy,
        rules=default_rules(),
        lexicon=lexicon,
        profile=profile,
        log_store=log_store,
        trace_store=trace_store,
        timer=deterministic_timer(),
    )
    return ServiceStack(
        pipeline=pipeline,
        log_store=log_store,
        trace_store=trace_store,
        admin_token=admin_token,
        synthesizer=synthesizer,
        pronunciations=load_pronunciations(),
    )


def build_live_stack() -> ServiceStack:
    """Stack configured from environment variables (live provider)."""
    from .cultural import load_profile
    from .gateway import LiveGateway

    gateway = LiveGateway()
    corpus_dir = os.environ.get("CORPUS_DIR", str(DATA_DIR / "corpus"))
    index = ingest_corpus(corpus_dir, embed=gateway.embed, dimension=256)
    translator = Translator(gateway, hints=load_hints(DATA_DIR / "hints.json"))
    policy = load_policy()
    lexicon = load_lexicon(os.environ.get("LEXICON_PATH", DATA_DIR / "lexicon.tsv"))
    profile = load_profile(os.environ.get("PROFILE_PATH", DATA_DIR / "profile_default.yaml"))
    log_store = LogStore(os.environ.get("LOG_PATH"))
    trace_store = TraceStore(os.environ.get("TRACE_PATH"))
    pipeline = ChatPipeline(
        gateway=gateway,
        index=index,
        translator=translator,
        policy=policy,
        rules=default_rules(),
        lexicon=lexicon,
        profile=profile,
        log_store=log_store,
        trace_store=trace_store,
    )
    return ServiceStack(
        pipeline=pipeline,
        log_store=log_store,
        trace_store=trace_store,
        admin_token=os.environ.get("ADMIN_TOKEN", ""),
        synthesizer=None,
        pronunciations=load_pronunciations(),
    )


def _find_message(stack: ServiceStack, message_id: str) -> Optional[MessageLog]:
    for log in stack.log_store:
        if log.message_id == message_id:
            return log
    return None


def create_app(stack: ServiceStack, ui_dir: Optional[Union[str, Path]] = None) -> FastAPI:
    app = FastAPI(title="sehatbot", docs_url=None, redoc_url=None)
    app.state.stack = stack

    def _session(conversation_id: str) -> Session:
        with stack.sessions_lock:
            now = time.monotonic()
            expired = [
                sid
                for sid, s in stack.sessions.items()
                if now - s.last_used > SESSION_TTL_S
            ]
            for sid in expired:
                del stack.sessions[sid]
            session = stack.sessions.get(conversation_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_used = now
            return session

    @app.get("/capabilities")
    def capabilities() -> dict:
        return stack.capabilities()

    @app.post("/session")
    def open_session() -> dict:
        if not stack.pipeline.gateway.healthy():
            raise HTTPException(status_code=503, detail="language provider unavailable")
        conversation_id = new_conversation()
        now = time.monotonic()
        with stack.sessions_lock:
            stack.sessions[conversation_id] = Session(conversation_id, now, now)
        greeting, suggestions = greet(stack.pipeline.policy)
        return {
            "conversation_id": conversation_id,
            "greeting": greeting,
            "suggested_questions": suggestions,
        }

    @app.post("/session/{conversation_id}/message")
    def post_message(conversation_id: str, body: MessageBody) -> dict:
        session = _session(conversation_id)
        if not body.text.strip():
            raise HTTPException(status_code=422, detail="text must be non-empty")
        with session.lock:
            try:
                result = stack.pipeline.run_turn(conversation_id, body.text)
            except GatewayError as exc:
                raise HTTPException(status_code=502, detail=str(exc)) from exc
        return {
            "response_text": result.response_text,
            "message_id": result.message_id,
            "trace_id": result.message_id,
        }

    @app.post("/feedback", status_code=204)
    def post_feedback(body: FeedbackBody) -> Response:
        unknown = [m for m in body.ratings if m not in FEEDBACK_METRICS]
        if unknown:
            raise HTTPException(
                status_code=400,
                detail=(
                    f"unknown metric(s) {unknown}; valid metrics are "
                    f"{list(FEEDBACK_METRICS)}"
                ),
            )
        if not body.ratings:
            raise HTTPException(status_code=400, detail="ratings must be non-empty")
        bad = {m: v for m, v in body.ratings.items() if not 1 <= v <= 5}
        if bad:
            raise HTTPException(
                status_code=400, detail=f"ratings must be integers 1-5, got {bad}"
            )
        log = _find_message(stack, body.message_id)
        if log is None or log.conversation_id != body.conversation_id:
            raise HTTPException(status_code=404, detail="unknown message")
        stack.feedback.append(body.model_dump())
        return Response(status_code=204)

    @app.get("/tts")
    def tts(message_id: str) -> Response:
        log = _find_message(stack, message_id)
        if log is None:
            raise HTTPException(status_code=404, detail="unknown message")
        if stack.synthesizer is None:
            return JSONResponse(
                status_code=501,
                content={"detail": "no synthesizer configured", "tts": False},
            )
        text = log.response_text
        overrides = [
            (word, phonetic)
            for word, phonetic in stack.pronunciations
            if word.lower() in text.lower()
        ]
        audio = stack.synthesizer.synthesize(text, overrides)
        return Response(content=audio, media_type="audio/wav")

    @app.get("/admin/analytics")
    def admin_analytics(authorization: str = Header(default="")) -> Response:
        expected = f"Bearer {stack.admin_token}"
        if not stack.admin_token or authorization != expected:
            raise HTTPException(status_code=401, detail="admin token required")
        files = analytics.report_bytes(list(stack.log_store), stack.zone)
        buf = io.BytesIO()
        with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as archive:
            for name in sorted(files):
                info = zipfile.ZipInfo(name, date_time=(1980, 1, 1, 0, 0, 0))
                archive.writestr(info, files[name])
        return Response(
            content=buf.getvalue(),
            media_type="application/zip",
            headers={"Content-Disposition": "attachment; filename=analytics.zip"},
        )

    ui_path = Path(ui_dir) if ui_dir else None
    if ui_path and ui_path.is_dir():
        app.mount("/app", StaticFiles(directory=str(ui_path), html=True), name="app")

    return app
