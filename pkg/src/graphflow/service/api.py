"""HTTP surface: create workflows from scripts or prompts, read documents,
patch slider values, fetch previewed meshes, browse the component catalog."""
from __future__ import annotations

import os
from importlib import resources
from typing import Any, Callable

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from graphflow.dsl import Diagnostic, errors_only, execute, parse_script, validate
from graphflow.dsl.parser import ScriptParseError
from graphflow.engine import (
    EngineError,
    EvaluationError,
    NotEvaluated,
    evaluate,
    reevaluate_dirty,
    to_document,
)
from graphflow.geometry.types import GeometryError, NonPositiveTolerance
from graphflow.orchestrator import (
    Exhausted,
    HttpProvider,
    Provider,
    ProviderConfig,
    ReplayProvider,
    generate_workflow,
)
from graphflow.registry.builtins import builtin_registry
from graphflow.registry.docs import catalog_json, export_docs
from graphflow.registry.model import Registry

from .meshio import meshes_payload
from .sessions import Session, SessionStore, UnknownSession

ProviderFactory = Callable[[dict], Provider]


def _diag_json(d: Diagnostic) -> dict:
    return {
        "severity": d.severity,
        "code": d.code,
        "message": d.message,
        "line": d.line,
        "column": d.column,
        "ident": d.ident,
    }


def replay_path(name: str) -> str:
    """Resolve a transcript argument: a real path wins, else a bundled name."""
    if os.path.exists(name):
        return name
    bundled = resources.files("graphflow.orchestrator").joinpath(f"replays/{name}.json")
    if bundled.is_file():
        return str(bundled)
    raise FileNotFoundError(f"no transcript file or bundled replay named {name!r}")


def default_provider_factory(cfg: dict) -> Provider:
    if "replay" in cfg:
        return ReplayProvider.from_file(replay_path(cfg["replay"]))
    if "endpoint" in cfg:
        return HttpProvider(
            endpoint=cfg["endpoint"],
            model=cfg.get("model", "default"),
            api_key_env=cfg.get("api_key_env", "GRAPHFLOW_API_KEY"),
            temperature=cfg.get("temperature", 0.0),
            timeout=cfg.get("timeout", 30.0),
        )
    raise ValueError("provider config needs either a 'replay' transcript or an 'endpoint'")


class CreateWorkflow(BaseModel):
    script: str | None = None
    prompt: str | None = None
    evaluate: bool = True
    provider: dict | None = None
    config: dict | None = None
    followups: list[str] = []


class PatchParams(BaseModel):
    node_id: str
    field: str
    value: Any
    revision: int | None = None


class PatchPreview(BaseModel):
    node_id: str
    shown: bool
    revision: int | None = None


def _slider_meta(session: Session) -> list[dict]:
    graph = session.graph
    out = []
    for node in graph.nodes():
        descriptor = graph.descriptor(node.node_id)
        if not descriptor.is_slider:
            continue
        st = node.state
        out.append(
            {
                "node_id": node.node_id,
                "type": node.type_id,
                "min": st["min"],
                "max": st["max"],
                "value": st["value"],
                "decimals": st.get("decimals", 0),
            }
        )
    return out


def _session_json(session: Session, outcome: bool = False) -> dict:
    body = {
        "session_id": session.session_id,
        "revision": session.revision,
        "origin": session.origin,
        "evaluated": session.graph.evaluated,
        "document": to_document(session.graph),
        "sliders": _slider_meta(session),
    }
    if outcome:
        body["outcome"] = None if session.outcome is None else session.outcome.to_dict()
    return body


def create_app(
    registry: Registry | None = None,
    store: SessionStore | None = None,
    provider_factory: ProviderFactory = default_provider_factory,
) -> FastAPI:
    registry = registry or builtin_registry()
    store = store or SessionStore()
    app = FastAPI(title="graphflow", version="1.0")
    # single-user local tool; the browser companion runs on its own origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store
    app.state.registry = registry

    def _get_session(session_id: str) -> Session:
        try:
            return store.get(session_id)
        except UnknownSession:
            raise HTTPException(404, {"error": f"no session {session_id!r}"})

    def _check_revision(session: Session, sent: int | None) -> None:
        if sent is not None and sent != session.revision:
            raise HTTPException(
                409,
                {
                    "error": "revision conflict",
                    "sent": sent,
                    "revision": session.revision,
                },
            )

    def _from_script(body: CreateWorkflow) -> Session:
        try:
            ast = parse_script(body.script)
        except ScriptParseError as exc:
            raise HTTPException(422, {"diagnostics": [_diag_json(d) for d in exc.diagnostics]})
        diagnostics = validate(ast, registry)
        if errors_only(diagnostics):
            raise HTTPException(422, {"diagnostics": [_diag_json(d) for d in diagnostics]})
        graph = execute(ast, registry)
        if body.evaluate:
            try:
                evaluate(graph)
            except EngineError as exc:
                raise HTTPException(422, {"error": str(exc), "code": type(exc).__name__})
        return store.create(graph, "script")

    def _from_prompt(body: CreateWorkflow) -> Session:
        if body.provider is None:
            raise HTTPException(422, {"error": "prompt mode needs a provider config"})
        try:
            provider = provider_factory(body.provider)
            config = ProviderConfig(**(body.config or {}))
        except (ValueError, FileNotFoundError, TypeError) as exc:
            raise HTTPException(422, {"error": str(exc)})
        try:
            outcome = generate_workflow(
                body.prompt, provider, registry, config, tuple(body.followups)
            )
        except Exhausted as exc:
            raise HTTPException(
                422, {"error": "exhausted", "outcome": exc.outcome.to_dict()}
            )
        return store.create(outcome.graph, "prompt", outcome)

    @app.post("/workflows", status_code=201)
    def create_workflow(body: CreateWorkflow) -> dict:
        if (body.script is None) == (body.prompt is None):
            raise HTTPException(422, {"error": "send exactly one of 'script' or 'prompt'"})
        session = _from_script(body) if body.script is not None else _from_prompt(body)
        return _session_json(session, outcome=True)

    @app.get("/workflows/{session_id}")
    def get_workflow(session_id: str) -> dict:
        session = _get_session(session_id)
        with session.lock:
            return _session_json(session, outcome=True)

    @app.patch("/workflows/{session_id}/params")
    def patch_params(session_id: str, body: PatchParams) -> dict:
        session = _get_session(session_id)
        with session.lock:
            _check_revision(session, body.revision)
            graph = session.graph
            try:
                graph.set_param(body.node_id, body.field, body.value)
            except EngineError as exc:
                raise HTTPException(422, {"error": str(exc), "code": type(exc).__name__})
            revision = session.bump()
            try:
                reevaluate_dirty(graph)
            except NotEvaluated:
                evaluate(graph)
            except EvaluationError as exc:
                raise HTTPException(
                    422,
                    {
                        "error": str(exc),
                        "code": "EvaluationError",
                        "node": exc.node_id,
                        "revision": revision,
                    },
                )
            return {
                "revision": revision,
                "node_id": body.node_id,
                "field": body.field,
                "value": graph.node(body.node_id).state.get(body.field),
            }

    @app.patch("/workflows/{session_id}/preview")
    def patch_preview(session_id: str, body: PatchPreview) -> dict:
        session = _get_session(session_id)
        with session.lock:
            _check_revision(session, body.revision)
            try:
                session.graph.set_preview(body.node_id, body.shown)
            except EngineError as exc:
                raise HTTPException(422, {"error": str(exc), "code": type(exc).__name__})
            return {"revision": session.bump(), "node_id": body.node_id, "shown": body.shown}

    @app.get("/workflows/{session_id}/meshes")
    def get_meshes(session_id: str, tol: float = 0.1) -> dict:
        session = _get_session(session_id)
        with session.lock:
            if not session.graph.evaluated:
                raise HTTPException(
                    409, {"error": "workflow has not been evaluated yet", "code": "NotEvaluated"}
                )
            try:
                meshes = meshes_payload(session.graph, tol)
            except (NonPositiveTolerance, GeometryError) as exc:
                raise HTTPException(422, {"error": str(exc), "code": type(exc).__name__})
            return {"revision": session.revision, "tol": tol, "meshes": meshes}

    @app.get("/components/docs")
    def components_docs(request: Request) -> Response:
        accept = request.headers.get("accept", "")
        if "application/json" in accept:
            return JSONResponse(catalog_json(registry))
        return PlainTextResponse(export_docs(registry), media_type="text/markdown")

    return app


__all__ = ["create_app", "default_provider_factory", "replay_path"]
