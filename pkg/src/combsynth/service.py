"""Session-oriented HTTP facade over the engine.

Backend for the web IDE and for scripted use: load a repository into a
session, run inhabitation requests against it, then fetch result graphs,
step graphs, reports, enumerated terms and the repository view.  Sessions
live in memory only, with LRU eviction beyond a configurable cap.
"""

from __future__ import annotations

import concurrent.futures
import threading
import time
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .cli import result_document
from .grammar import enumerate_terms
from .hypergraph import filter_unproductive, from_grammar, to_document
from .inhabitation import DebugTrace, InhabitationError, inhabit_type, replay
from .reports import report_for, report_to_document
from .repository import Repository, RepositoryError, load_repository, repository_to_document
from .types import TypeSyntaxError, parse_type

DEFAULT_SESSION_CAP = 64
DEFAULT_TIMEOUT_SECONDS = 30.0
DEFAULT_TERMS_CAP = 1000


@dataclass
class Session:
    id: str
    repository: Repository
    document: dict
    traces: list[DebugTrace] = field(default_factory=list)
    created_at: float = field(default_factory=time.time)


class SessionStore:
    def __init__(self, cap: int = DEFAULT_SESSION_CAP):
        self.cap = cap
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()

    def create(self, repo: Repository, document: dict) -> Session:
        session = Session(id=uuid.uuid4().hex, repository=repo, document=document)
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self.cap:
                self._sessions.popitem(last=False)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            self._sessions.move_to_end(session_id)
            return session

    def add_trace(self, session: Session, trace: DebugTrace) -> int:
        with self._lock:
            session.traces.append(trace)
            return len(session.traces) - 1


class RequestBody(BaseModel):
    target: str


def create_app(
    timeout_seconds: float = DEFAULT_TIMEOUT_SECONDS,
    static_dir: str | None = None,
    session_cap: int = DEFAULT_SESSION_CAP,
    terms_cap: int = DEFAULT_TERMS_CAP,
) -> FastAPI:
    app = FastAPI(title="combsynth")
    store = SessionStore(cap=session_cap)
    pool = concurrent.futures.ThreadPoolExecutor(max_workers=4)

    def get_trace(session_id: str, ordinal: int) -> DebugTrace:
        session = store.get(session_id)
        if not 0 <= ordinal < len(session.traces):
            raise HTTPException(status_code=404, detail="unknown request ordinal")
        return session.traces[ordinal]

    @app.post("/sessions", status_code=201)
    def create_session(document: dict):
        try:
            repo = load_repository(document)
        except RepositoryError as e:
            raise HTTPException(status_code=400, detail=[str(e)])
        session = store.create(repo, document)
        return {"id": session.id}

    @app.post("/sessions/{session_id}/requests", status_code=201)
    def request_inhabitation(session_id: str, body: RequestBody):
        session = store.get(session_id)
        try:
            target = parse_type(body.target)
        except TypeSyntaxError as e:
            raise HTTPException(status_code=400, detail=str(e))
        future = pool.submit(inhabit_type, session.repository, target)
        try:
            trace = future.result(timeout=timeout_seconds)
        except concurrent.futures.TimeoutError:
            raise HTTPException(status_code=503, detail="inhabitation timed out")
        except InhabitationError as e:
            raise HTTPException(status_code=400, detail=str(e))
        ordinal = store.add_trace(session, trace)
        return {"ordinal": ordinal}

    @app.get("/sessions/{session_id}/requests/{ordinal}/result")
    def get_result_graph(session_id: str, ordinal: int, unproductive: bool = True):
        trace = get_trace(session_id, ordinal)
        return JSONResponse(result_document(trace, include_unproductive=unproductive))

    @app.get("/sessions/{session_id}/requests/{ordinal}/steps/{step}")
    def get_step_graph(
        session_id: str, ordinal: int, step: int, unproductive: bool = True
    ):
        trace = get_trace(session_id, ordinal)
        if not 0 <= step <= len(trace.steps):
            raise HTTPException(status_code=416, detail="step out of range")
        grammar, todo = replay(trace, step)
        graph = from_grammar(grammar, todo)
        if not unproductive:
            graph = filter_unproductive(graph)
        return JSONResponse(to_document(graph))

    @app.get("/sessions/{session_id}/requests/{ordinal}/reports")
    def get_reports(session_id: str, ordinal: int):
        trace = get_trace(session_id, ordinal)
        return JSONResponse(report_to_document(report_for(trace)))

    @app.get("/sessions/{session_id}/requests/{ordinal}/terms")
    def get_terms(session_id: str, ordinal: int, max: int = 100):
        trace = get_trace(session_id, ordinal)
        if max > terms_cap:
            raise HTTPException(
                status_code=400, detail=f"max exceeds server cap of {terms_cap}"
            )
        terms = enumerate_terms(trace.pruned, trace.pruned.start, max)
        return {"terms": [str(t) for t in terms]}

    @app.get("/sessions/{session_id}/requests/{ordinal}/trace")
    def get_step_count(session_id: str, ordinal: int):
        trace = get_trace(session_id, ordinal)
        return {"steps": len(trace.steps)}

    @app.get("/sessions/{session_id}/repository")
    def get_repository_view(session_id: str):
        session = store.get(session_id)
        return JSONResponse(repository_to_document(session.repository))

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
