"""HTTP facade for the engine: example catalog, workspace edits, sessions.

The server holds one workspace: a single current automaton plus the
simulation sessions opened against it (last writer wins, no multi-tenant
isolation).  Any automaton edit invalidates every open session; stale
session ids answer 410 from then on.  Errors use the body shape
``{"code", "message", "detail?"}`` with the same canonical codes as the
library.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from typing import Iterator

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, StreamingResponse
from fastapi.staticfiles import StaticFiles

from . import core
from .core import AutomatonError, FiniteAutomaton, Transition
from .persistence import automaton_from_document, list_examples
from .simulation import (
    SessionStatus,
    SimulationSession,
    color_view,
    current_word_view,
    start_session,
    step_back,
    step_forward,
)

DEFAULT_PORT = 8080


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail: str | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


class Workspace:
    """The server-held automaton and its sessions, guarded by one lock."""

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self.automaton: FiniteAutomaton | None = None
        self._sessions: dict[str, tuple[SimulationSession, threading.Lock]] = {}
        self._retired: set[str] = set()

    def replace_automaton(self, automaton: FiniteAutomaton) -> None:
        with self._lock:
            self.automaton = automaton
            self._retire_all_sessions()

    def add_state_edit(self, name: str, accept: bool) -> FiniteAutomaton:
        """Add a state, bootstrapping a fresh automaton when none is loaded."""
        with self._lock:
            if self.automaton is None:
                automaton = core.new_automaton(name, accept)
            else:
                automaton = core.add_state(self.automaton, name)
                if accept:
                    automaton = core.mark_accept(automaton, name)
            self.replace_automaton(automaton)
            return automaton

    def add_transition_edit(self, src: str, symbol: str, dst: str) -> FiniteAutomaton:
        with self._lock:
            automaton = core.add_transition(self.require_automaton(), Transition(src, symbol, dst))
            self.replace_automaton(automaton)
            return automaton

    def require_automaton(self) -> FiniteAutomaton:
        with self._lock:
            if self.automaton is None:
                raise ApiError(409, "NO_AUTOMATON", "no automaton is loaded")
            return self.automaton

    def create_session(self, word: str) -> tuple[str, SimulationSession]:
        with self._lock:
            automaton = self.require_automaton()
            session = start_session(automaton, word)
            session_id = secrets.token_urlsafe(16)
            self._sessions[session_id] = (session, threading.Lock())
            return session_id, session

    def session_entry(self, session_id: str) -> tuple[SimulationSession, threading.Lock]:
        with self._lock:
            if session_id in self._sessions:
                return self._sessions[session_id]
            if session_id in self._retired:
                raise ApiError(
                    410, "SESSION_GONE", "session was invalidated by an automaton edit"
                )
            raise ApiError(404, "UNKNOWN_SESSION", f"no session {session_id!r}")

    def _retire_all_sessions(self) -> None:
        self._retired.update(self._sessions)
        self._sessions.clear()


def _summary(a: FiniteAutomaton) -> dict:
    return {
        "states": sorted(core.state_set(a)),
        "alphabet": sorted(core.alphabet(a)),
        "deterministic": core.is_deterministic(a),
        "initialState": a.initial_state,
        "acceptStates": sorted(a.accept_states),
        "transitions": [[t.src, t.symbol, t.dst] for t in a.transitions],
    }


def _view_payload(session: SimulationSession) -> dict:
    view = color_view(session)
    payload = {
        "position": session.position,
        "remaining": view.remaining,
        "colors": {state: color.value for state, color in sorted(view.colors.items())},
        "status": session.status.value,
        "wordView": current_word_view(session),
        "caption": view.caption,
    }
    if session.status is SessionStatus.FINISHED:
        payload["verdict"] = session.trace.verdict.value
    return payload


async def _json_body(request: Request, default: dict | None = None) -> dict:
    raw = await request.body()
    if not raw and default is not None:
        return default
    try:
        body = json.loads(raw)
    except ValueError as exc:
        raise ApiError(400, "MALFORMED_DOCUMENT", f"request body is not valid JSON: {exc}")
    if not isinstance(body, dict):
        raise ApiError(400, "MALFORMED_DOCUMENT", "request body must be a JSON object")
    return body


def _require_str(body: dict, field: str) -> str:
    if field not in body:
        raise ApiError(400, "MISSING_FIELD", f"body is missing field {field!r}", field)
    value = body[field]
    if not isinstance(value, str):
        raise ApiError(400, "MALFORMED_DOCUMENT", f"field {field!r} must be a string")
    return value


def _sse_event(event: str, payload: dict) -> str:
    return f"event: {event}\ndata: {json.dumps(payload)}\n\n"


NATURE_KINDS = {
    "productive": core.productive_states,
    "accessible": core.accessible_states,
    "useful": core.useful_states,
}


def create_app(ui_dir: str | None = None) -> FastAPI:
    """Build the application; ``ui_dir`` defaults to ``$OFLAT_UI_DIR``."""
    app = FastAPI(title="finite-automaton workbench")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    workspace = Workspace()
    app.state.workspace = workspace

    @app.exception_handler(ApiError)
    async def _handle_api_error(_request: Request, exc: ApiError) -> JSONResponse:
        body = {"code": exc.code, "message": exc.message}
        if exc.detail is not None:
            body["detail"] = exc.detail
        return JSONResponse(body, status_code=exc.status)

    @app.exception_handler(AutomatonError)
    async def _handle_automaton_error(_request: Request, exc: AutomatonError) -> JSONResponse:
        body = {"code": exc.code, "message": str(exc)}
        if exc.detail is not None:
            body["detail"] = exc.detail
        return JSONResponse(body, status_code=400)

    @app.get("/examples")
    async def get_examples() -> dict:
        return {
            "examples": [
                {"name": name, "document": doc} for name, doc in list_examples().items()
            ]
        }

    @app.put("/automaton")
    async def put_automaton(request: Request) -> dict:
        body = await _json_body(request)
        automaton = automaton_from_document(body)
        workspace.replace_automaton(automaton)
        return _summary(automaton)

    @app.post("/automaton/states")
    async def post_state(request: Request) -> dict:
        body = await _json_body(request)
        name = _require_str(body, "name")
        accept = body.get("accept", False)
        if not isinstance(accept, bool):
            raise ApiError(400, "MALFORMED_DOCUMENT", "field 'accept' must be a boolean")
        return _summary(workspace.add_state_edit(name, accept))

    @app.post("/automaton/transitions")
    async def post_transition(request: Request) -> dict:
        body = await _json_body(request)
        src = _require_str(body, "from")
        symbol = _require_str(body, "symbol")
        dst = _require_str(body, "to")
        return _summary(workspace.add_transition_edit(src, symbol, dst))

    @app.get("/automaton/nature")
    async def get_nature(kind: str | None = None) -> dict:
        if kind not in NATURE_KINDS:
            raise ApiError(400, "UNKNOWN_KIND", f"kind must be one of {sorted(NATURE_KINDS)}")
        automaton = workspace.require_automaton()
        return {"states": sorted(NATURE_KINDS[kind](automaton))}

    @app.post("/sessions")
    async def post_session(request: Request) -> dict:
        body = await _json_body(request)
        word = _require_str(body, "word")
        session_id, session = workspace.create_session(word)
        return {"sessionId": session_id, "view": _view_payload(session)}

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str) -> dict:
        session, lock = workspace.session_entry(session_id)
        with lock:
            return _view_payload(session)

    @app.post("/sessions/{session_id}/forward")
    async def post_forward(session_id: str) -> dict:
        session, lock = workspace.session_entry(session_id)
        with lock:
            step_forward(session)
            return _view_payload(session)

    @app.post("/sessions/{session_id}/back")
    async def post_back(session_id: str) -> dict:
        session, lock = workspace.session_entry(session_id)
        with lock:
            step_back(session)
            return _view_payload(session)

    @app.post("/sessions/{session_id}/run")
    async def post_run(session_id: str, request: Request) -> StreamingResponse:
        body = await _json_body(request, default={})
        delay_ms = body.get("delayMs", 500)
        if not isinstance(delay_ms, (int, float)) or delay_ms < 0:
            raise ApiError(400, "MALFORMED_DOCUMENT", "delayMs must be a non-negative number")
        workspace.session_entry(session_id)  # 404/410 before the stream starts

        def events() -> Iterator[str]:
            first = True
            while True:
                try:
                    session, lock = workspace.session_entry(session_id)
                except ApiError as exc:
                    yield _sse_event("gone", {"code": exc.code, "message": exc.message})
                    return
                if not first and delay_ms > 0:
                    time.sleep(delay_ms / 1000.0)
                first = False
                with lock:
                    if session.status is SessionStatus.FINISHED:
                        yield _sse_event("done", _view_payload(session))
                        return
                    step_forward(session)
                    payload = _view_payload(session)
                yield _sse_event("tick", payload)

        return StreamingResponse(events(), media_type="text/event-stream")

    resolved_ui_dir = ui_dir if ui_dir is not None else os.environ.get("OFLAT_UI_DIR")
    if resolved_ui_dir and os.path.isdir(resolved_ui_dir):
        app.mount("/", StaticFiles(directory=resolved_ui_dir, html=True), name="ui")

    return app
