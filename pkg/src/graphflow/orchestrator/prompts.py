"""Prompt assembly: system instructions, few-shot pairs, retrieved
component docs, and the user request, under a token budget."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from graphflow.registry.docs import DocChunk


class BudgetExceeded(ValueError):
    """The parts that cannot be dropped already exceed the budget."""


SYSTEM_TEXT = """\
## Identity

You are a workflow author for a node-based parametric modeling canvas.
You turn a plain-language modeling request into a script that builds a
workflow of components connected by wires. You reply with exactly one
script and nothing else.

## Workflow and output requirements

- Reply with a single fenced code block containing the script; no prose
  before or after the fence.
- The workflow must expose every parameter the request names as a
  slider with the requested range, default, and step accuracy; use
  `decimals` to express the accuracy (tenth = 1, hundredth = 2,
  thousandth = 3, integer slider for whole numbers).
- Build geometry so the final shapes are previewed; keep intermediate
  construction geometry hidden.

## Using the reference entries

Component documentation is supplied with each request. Rely solely on
the provided reference entries: take type ids, port order, port kinds,
defaults, and state fields from them, never from memory. If the
request needs a capability with no matching entry, compose it from the
entries that do exist.

## Component creation and scripting standards

- One statement per line, in dependency order: declare a node with
  `add` before any wire or assignment touches it.
- `add TYPE_ID name { field: value, ... }` creates a node; slider state
  (min, max, value, decimals) and input literals are both set in the
  block or with `set name.INDEX = literal`.
- `connect a.OUT -> b.IN` wires ports by index; annotate indices with
  `:name` when it helps readability, e.g. `connect r.0:value -> c.1:radius`.
- Sliders are sources only: never `connect` into a slider and never
  `set` a slider port. Configure them entirely in their add block.
- Literals: numbers, true/false, "text", (x, y, z) triples, and the
  world planes plane.xy, plane.yz, plane.xz.
- Comment every logical step with `#` lines.

## Canvas layout and display

- End scripts with `layout auto` unless the request fixes positions.
- Use `show`/`hide` so only the shapes the user asked for are visible.

## Forbidden

- No statements outside the grammar: add, connect, set, show, hide,
  layout auto. No loops, no conditionals, no expressions outside the
  formula component.
- No component type ids that do not appear in the reference entries.
- No output besides the one fenced script.

## Examples

The example exchanges that follow show the expected format: each user
request is answered by one commented script. Match their style.
"""


def _estimate(text: str) -> int:
    return max(1, len(text) // 4)


@dataclass(frozen=True)
class PromptBundle:
    system: str
    examples: tuple[tuple[str, str], ...]
    context: tuple[DocChunk, ...]
    request: str

    def messages(self) -> list[dict[str, str]]:
        out = [{"role": "system", "content": self.system}]
        for user, assistant in self.examples:
            out.append({"role": "user", "content": user})
            out.append({"role": "assistant", "content": assistant})
        if self.context:
            body = "\n\n".join(chunk.text for chunk in self.context)
            out.append(
                {"role": "user", "content": "Reference entries for this request:\n\n" + body}
            )
        out.append({"role": "user", "content": self.request})
        return out

    def token_estimate(self) -> int:
        return sum(_estimate(m["content"]) for m in self.messages())


def prompt_hash(messages: list[dict[str, str]]) -> str:
    canonical = json.dumps(messages, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def assemble_prompt(
    request: str,
    context: list[DocChunk],
    examples: tuple[tuple[str, str], ...],
    budget_tokens: int,
    system: str = SYSTEM_TEXT,
) -> PromptBundle:
    """Bundle the messages, dropping lowest-ranked context to fit."""
    fixed = _estimate(system) + _estimate(request)
    fixed += sum(_estimate(u) + _estimate(a) for u, a in examples)
    if fixed > budget_tokens:
        raise BudgetExceeded(
            f"system, examples, and request need ~{fixed} tokens; budget is {budget_tokens}"
        )
    kept = list(context)
    while kept and fixed + sum(c.token_estimate for c in kept) > budget_tokens:
        kept.pop()
    return PromptBundle(system, tuple(examples), tuple(kept), request)


__all__ = ["BudgetExceeded", "PromptBundle", "SYSTEM_TEXT", "assemble_prompt", "prompt_hash"]
