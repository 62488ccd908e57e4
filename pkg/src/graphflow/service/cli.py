"""Command line entry points: serve, run, generate, docs, bench."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from graphflow.dsl import errors_only, execute, parse_script, validate
from graphflow.dsl.parser import ScriptParseError
from graphflow.engine import EngineError, evaluate, preview_geometry, to_json
from graphflow.geometry.tessellation import to_ascii_stl
from graphflow.orchestrator import Exhausted, ProviderConfig, ReplayProvider
from graphflow.registry.builtins import builtin_registry
from graphflow.registry.docs import catalog_json, export_docs

from .benchmarks import CASE_NAMES, render_report, run_benchmarks
from .meshio import faceted, mesh_json, merge_meshes


def _fail(message: str) -> None:
    click.echo(message, err=True)
    sys.exit(1)


def _print_diagnostics(diagnostics) -> None:
    for d in diagnostics:
        click.echo(d.render(), err=True)


def _parse_set(raw: str) -> tuple[str, str, object]:
    head, eq, text = raw.partition("=")
    node, dot, fld = head.partition(".")
    if not (eq and dot and node and fld):
        raise click.BadParameter(f"{raw!r} is not NODE.FIELD=VALUE")
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        value = text
    return node, fld, value


@click.group()
def main() -> None:
    """Parametric workflow toolkit."""


@main.command()
@click.option("--port", default=7878, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port: int, host: str) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(), host=host, port=port)


@main.command()
@click.argument("script", type=click.Path(exists=True, dir_okay=False))
@click.option("--set", "overrides", multiple=True, metavar="NODE.FIELD=VALUE",
              help="Override node state before evaluating; repeatable.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write previewed meshes (.json or .stl).")
@click.option("--tol", default=0.1, show_default=True)
def run(script: str, overrides: tuple[str, ...], out_path: str | None, tol: float) -> None:
    """Execute a workflow script and evaluate it once."""
    registry = builtin_registry()
    try:
        ast = parse_script(Path(script).read_text())
    except ScriptParseError as exc:
        _print_diagnostics(exc.diagnostics)
        sys.exit(1)
    diagnostics = validate(ast, registry)
    if errors_only(diagnostics):
        _print_diagnostics(diagnostics)
        sys.exit(1)
    try:
        graph = execute(ast, registry)
        for raw in overrides:
            node, fld, value = _parse_set(raw)
            graph.set_param(node, fld, value)
        evaluate(graph)
        meshes = preview_geometry(graph, tol)
    except EngineError as exc:
        _fail(str(exc))
    click.echo(f"{len(graph.node_ids())} nodes evaluated, {len(meshes)} meshes on display")
    if out_path is None:
        return
    if out_path.endswith(".stl"):
        Path(out_path).write_text(to_ascii_stl(merge_meshes([faceted(m) for _, m in meshes])))
    else:
        payload = [{"node_id": node_id, **mesh_json(mesh)} for node_id, mesh in meshes]
        Path(out_path).write_text(json.dumps({"tol": tol, "meshes": payload}, indent=2) + "\n")
    click.echo(f"wrote {out_path}")


@main.command()
@click.option("--prompt-file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--provider", "provider_path", type=click.Path(exists=True), default=None,
              help="JSON file with endpoint/model/api_key_env settings.")
@click.option("--replay", "replay_name", default=None,
              help="Transcript file or bundled replay name.")
@click.option("--followup", "followups", multiple=True,
              help="Queued user revision applied after a structurally valid attempt.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the generated workflow document here.")
def generate(prompt_file: str, provider_path: str | None, replay_name: str | None,
             followups: tuple[str, ...], out_path: str | None) -> None:
    """Generate a workflow from a plain-text request."""
    from graphflow.orchestrator import HttpProvider, generate_workflow

    from .api import replay_path

    request = Path(prompt_file).read_text().strip()
    config = ProviderConfig()
    if replay_name is not None:
        try:
            provider = ReplayProvider.from_file(replay_path(replay_name))
        except FileNotFoundError as exc:
            _fail(str(exc))
    elif provider_path is not None:
        cfg = json.loads(Path(provider_path).read_text())
        config = ProviderConfig(**{k: v for k, v in cfg.items() if k in ProviderConfig.__dataclass_fields__})
        provider = HttpProvider(
            endpoint=config.endpoint,
            model=config.model,
            api_key_env=config.api_key_env,
            temperature=config.temperature,
            timeout=config.timeout,
        )
    else:
        _fail("need --provider or --replay")
    try:
        outcome = generate_workflow(request, provider, builtin_registry(), config,
                                    tuple(followups))
    except Exhausted as exc:
        for i, attempt in enumerate(exc.outcome.attempts, start=1):
            for d in errors_only(attempt.diagnostics):
                click.echo(f"attempt {i}: {d.render()}", err=True)
        _fail(f"failed: attempts={len(exc.outcome.attempts)}")
    for i, attempt in enumerate(outcome.attempts, start=1):
        codes = sorted({d.code for d in errors_only(attempt.diagnostics)})
        note = f" ({', '.join(codes)})" if codes else ""
        click.echo(f"attempt {i}: {attempt.verdict}{note}")
    click.echo(f"success: attempts={len(outcome.attempts)}")
    if out_path is not None:
        Path(out_path).write_text(to_json(outcome.graph))
        click.echo(f"wrote {out_path}")


@main.group()
def docs() -> None:
    """Component catalog exports."""


@docs.command("export")
@click.option("--format", "fmt", type=click.Choice(["md", "json"]), default="md",
              show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None)
def docs_export(fmt: str, out_path: str | None) -> None:
    registry = builtin_registry()
    text = export_docs(registry) if fmt == "md" else json.dumps(catalog_json(registry), indent=2) + "\n"
    if out_path is None:
        click.echo(text, nl=False)
    else:
        Path(out_path).write_text(text)
        click.echo(f"wrote {out_path}")


@main.command()
@click.option("--case", "case_name", type=click.Choice(list(CASE_NAMES)), default=None,
              help="Run a single case instead of the whole suite.")
def bench(case_name: str | None) -> None:
    """Run the reference modeling tasks against their oracles."""
    results = run_benchmarks(None if case_name is None else (case_name,))
    click.echo(render_report(results))
    if not all(r.passed for r in results):
        sys.exit(1)


__all__ = ["main"]
