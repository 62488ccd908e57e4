"""Request-to-workflow loop: prompt, call, validate, retry, give up."""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field

from graphflow.dsl import (
    Diagnostic,
    ScriptExecutionError,
    ScriptParseError,
    errors_only,
    execute,
    parse_script,
    validate,
)
from graphflow.engine import EngineError, WorkflowGraph, evaluate, to_document
from graphflow.registry.docs import DocChunk
from graphflow.registry.model import Registry
from graphflow.registry.search import SearchIndex, build_index

from .fewshot import FEWSHOT_PAIRS
from .prompts import PromptBundle, assemble_prompt
from .providers import Provider, ProviderError


class EmptyResponse(ValueError):
    """The model returned nothing usable."""


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str = "http://localhost:8801/v1/chat"
    model: str = "workflow-writer"
    api_key_env: str = "GRAPHFLOW_API_KEY"
    temperature: float = 0.0
    timeout: float = 30.0
    max_attempts: int = 3
    feedback: str = "diagnostics"
    retry_context: str = "conversation"
    context_chunks: int = 8
    budget_tokens: int = 20000

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")
        if self.feedback not in ("diagnostics", "none"):
            raise ValueError(f"bad feedback mode {self.feedback!r}")
        if self.retry_context not in ("conversation", "fresh"):
            raise ValueError(f"bad retry_context {self.retry_context!r}")


@dataclass
class AttemptRecord:
    script: str
    diagnostics: list[Diagnostic]
    graph: WorkflowGraph | None
    verdict: str  # accepted | rejected | superseded
    wall_clock: float


@dataclass
class GenerationOutcome:
    status: str  # success | failed
    request: str
    attempts: list[AttemptRecord] = field(default_factory=list)
    graph: WorkflowGraph | None = None

    def to_dict(self) -> dict:
        """Replay-comparable form: everything except wall-clock times."""
        return {
            "status": self.status,
            "request": self.request,
            "attempts": [
                {
                    "script": a.script,
                    "verdict": a.verdict,
                    "diagnostics": [
                        {
                            "severity": d.severity,
                            "code": d.code,
                            "message": d.message,
                            "line": d.line,
                            "column": d.column,
                            "ident": d.ident,
                        }
                        for d in a.diagnostics
                    ],
                    "workflow": None if a.graph is None else to_document(a.graph),
                }
                for a in self.attempts
            ],
            "workflow": None if self.graph is None else to_document(self.graph),
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


class Exhausted(Exception):
    """Every allowed attempt failed; the partial record rides along."""

    def __init__(self, outcome: GenerationOutcome):
        codes = sorted({d.code for a in outcome.attempts for d in errors_only(a.diagnostics)})
        super().__init__(
            f"no valid workflow after {len(outcome.attempts)} attempts"
            + (f" (codes: {', '.join(codes)})" if codes else "")
        )
        self.outcome = outcome


_FENCE = re.compile(r"```[^\n]*\n(.*?)```", re.DOTALL)


def extract_script(response: str) -> str:
    """First fenced block if any, else the whole trimmed response."""
    if not response.strip():
        raise EmptyResponse("the response is empty")
    match = _FENCE.search(response)
    if match:
        return match.group(1)
    return response.strip() + "\n"


def retrieve_context(request: str, index: SearchIndex, k: int) -> list[DocChunk]:
    return index.search(request, k)


def _attempt_diagnostics(script: str, registry: Registry):
    """Parse and statically check one script; (diagnostics, ast-or-none)."""
    try:
        ast = parse_script(script)
    except ScriptParseError as exc:
        return exc.diagnostics, None
    return validate(ast, registry), ast


def _feedback_message(config: ProviderConfig, record: AttemptRecord) -> str:
    if config.feedback == "none":
        return "That attempt was not accepted. Reply with a corrected script."
    lines = ["The script was rejected. Diagnostics:"]
    lines += [f"- {d.render()}" for d in errors_only(record.diagnostics)]
    lines += ["", "The rejected script was:", "```", record.script.rstrip("\n"), "```", "",
              "Reply with a corrected script that resolves every diagnostic."]
    return "\n".join(lines)


def build_prompt(
    request: str, registry: Registry, config: ProviderConfig, index: SearchIndex | None = None
) -> PromptBundle:
    index = index or build_index(registry)
    context = retrieve_context(request, index, config.context_chunks)
    return assemble_prompt(request, context, FEWSHOT_PAIRS, config.budget_tokens)


def generate_workflow(
    request: str,
    provider: Provider,
    registry: Registry,
    config: ProviderConfig = ProviderConfig(),
    followups: tuple[str, ...] = (),
    index: SearchIndex | None = None,
) -> GenerationOutcome:
    """Run the retry loop until a validated, evaluated graph exists.

    `followups` are queued user revisions: a structurally valid attempt
    is superseded (not accepted) while any follow-up remains, and the
    follow-up becomes the next user turn.
    """
    bundle = build_prompt(request, registry, config, index)
    base_messages = bundle.messages()
    conversation = list(base_messages)
    pending_followups = list(followups)
    outcome = GenerationOutcome("failed", request)
    for attempt_no in range(1, config.max_attempts + 1):
        messages = conversation if config.retry_context == "conversation" else list(base_messages)
        started = time.perf_counter()
        try:
            response = provider.complete(messages)
        except ProviderError as exc:
            raise ProviderError(f"attempt {attempt_no}: {exc}") from exc
        try:
            script = extract_script(response)
            diagnostics, ast = _attempt_diagnostics(script, registry)
        except EmptyResponse:
            script = ""
            diagnostics, ast = (
                [Diagnostic("error", "ParseError", "the response was empty", 1)],
                None,
            )
        graph = None
        if ast is not None and not errors_only(diagnostics):
            try:
                graph = execute(ast, registry)
                evaluate(graph)
            except (ScriptExecutionError, EngineError) as exc:
                line = exc.line if isinstance(exc, ScriptExecutionError) else 1
                diagnostics = diagnostics + [
                    Diagnostic("error", "EvaluationError", str(exc), line)
                ]
                graph = None
        clean = graph is not None
        if clean and pending_followups:
            verdict = "superseded"
        elif clean:
            verdict = "accepted"
        else:
            verdict = "rejected"
        record = AttemptRecord(
            script, diagnostics, graph, verdict, time.perf_counter() - started
        )
        outcome.attempts.append(record)
        if verdict == "accepted":
            outcome.status = "success"
            outcome.graph = graph
            return outcome
        if attempt_no == config.max_attempts:
            break
        conversation.append({"role": "assistant", "content": response})
        if verdict == "superseded":
            conversation.append({"role": "user", "content": pending_followups.pop(0)})
        else:
            conversation.append({"role": "user", "content": _feedback_message(config, record)})
    raise Exhausted(outcome)


__all__ = [
    "AttemptRecord",
    "EmptyResponse",
    "Exhausted",
    "GenerationOutcome",
    "ProviderConfig",
    "build_prompt",
    "extract_script",
    "generate_workflow",
    "retrieve_context",
]
