"""HTTP service, persistence, CLI, and the benchmark harness."""
from .api import create_app, default_provider_factory, replay_path
from .benchmarks import (
    CASE_NAMES,
    CASES,
    CaseResult,
    SliderSpec,
    TestCase,
    case_script,
    get_case,
    load_case_graph,
    render_report,
    run_benchmarks,
    run_case,
    shown_values,
)
from .meshio import merge_meshes, mesh_json, meshes_payload
from .sessions import (
    Session,
    SessionStore,
    UnknownSession,
    load_workflow,
    save_workflow,
)

__all__ = [
    "CASES",
    "CASE_NAMES",
    "CaseResult",
    "Session",
    "SessionStore",
    "SliderSpec",
    "TestCase",
    "UnknownSession",
    "case_script",
    "create_app",
    "default_provider_factory",
    "get_case",
    "load_case_graph",
    "load_workflow",
    "merge_meshes",
    "mesh_json",
    "meshes_payload",
    "render_report",
    "replay_path",
    "run_benchmarks",
    "run_case",
    "save_workflow",
    "shown_values",
]
