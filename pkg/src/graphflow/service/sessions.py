"""In-memory workflow sessions with per-session write serialization."""
from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from graphflow.engine import WorkflowGraph, from_json, to_json
from graphflow.orchestrator import GenerationOutcome
from graphflow.registry.model import Registry

ORIGINS = ("prompt", "script", "file")


class UnknownSession(KeyError):
    def __init__(self, session_id: str):
        super().__init__(session_id)
        self.session_id = session_id


@dataclass
class Session:
    session_id: str
    graph: WorkflowGraph
    origin: str
    outcome: GenerationOutcome | None = None
    revision: int = 0
    lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise ValueError(f"bad origin {self.origin!r}")

    def bump(self) -> int:
        self.revision += 1
        return self.revision


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, graph: WorkflowGraph, origin: str,
               outcome: GenerationOutcome | None = None) -> Session:
        session = Session(uuid.uuid4().hex[:12], graph, origin, outcome)
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise UnknownSession(session_id) from None

    def drop(self, session_id: str) -> None:
        with self._lock:
            if self._sessions.pop(session_id, None) is None:
                raise UnknownSession(session_id)

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def save_workflow(session: Session, path: str | Path) -> None:
    with session.lock:
        Path(path).write_text(to_json(session.graph))


def load_workflow(path: str | Path, registry: Registry,
                  store: SessionStore | None = None) -> Session:
    graph = from_json(Path(path).read_text(), registry)
    if store is not None:
        return store.create(graph, "file")
    return Session(uuid.uuid4().hex[:12], graph, "file")


__all__ = [
    "ORIGINS",
    "Session",
    "SessionStore",
    "UnknownSession",
    "load_workflow",
    "save_workflow",
]
