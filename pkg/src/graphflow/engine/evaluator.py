"""Dataflow evaluation: trees in, trees out, incremental on demand.

Branch alignment follows the longest-list rule: inputs line up path by
path (single-branch trees broadcast, missing paths carry the nearest
earlier branch forward) and within a branch shorter item lists repeat
their last value. A list returned from one evaluation becomes a branch;
several list returns under one path fan out into child paths.
"""
from __future__ import annotations

from graphflow.registry.model import PortDescriptor
from graphflow.registry.values import KindError, coerce_value

from .datatree import DataTree, Path
from .errors import EvaluationError, MissingRequiredInput, NotEvaluated
from .graph import WorkflowGraph

NodeOutputs = dict[str, tuple[DataTree, ...]]


def _aligned_paths(trees: list[DataTree]) -> list[Path]:
    universe: set[Path] = set()
    for tree in trees:
        universe.update(tree.paths())
    return sorted(universe) or [(0,)]


def _branch_at(tree: DataTree, path: Path) -> tuple:
    """Branch for a path, carrying the nearest earlier branch forward."""
    paths = tree.paths()
    if not paths:
        return ()
    chosen = paths[0]
    for candidate in paths:
        if candidate > path:
            break
        chosen = candidate
    return tree.branch(chosen)


def _fail(graph: WorkflowGraph, node_id: str, cause: str) -> EvaluationError:
    return EvaluationError(node_id, cause, graph.upstream_chain(node_id))


def _coerce_items(graph: WorkflowGraph, node_id: str, values, port: PortDescriptor):
    try:
        return [coerce_value(v, port.kind) for v in values]
    except KindError as exc:
        raise _fail(graph, node_id, str(exc)) from None


def _input_trees(graph: WorkflowGraph, node_id: str, outputs: NodeOutputs) -> list[DataTree]:
    node = graph.node(node_id)
    descriptor = graph.descriptor(node_id)
    trees = []
    for port in descriptor.inputs:
        wire = graph.wire_into(node_id, port.index)
        if wire is not None:
            src_id, out_index = wire
            trees.append(outputs[src_id][out_index])
        elif port.index in node.literal_inputs:
            trees.append(DataTree.item(node.literal_inputs[port.index]))
        elif port.default is not None:
            trees.append(DataTree.item(port.default))
        elif port.optional:
            trees.append(DataTree({(0,): ()}))
        else:
            raise MissingRequiredInput(node_id, port.index, port.name)
    return trees


def _run_item_node(graph: WorkflowGraph, node_id: str, trees: list[DataTree]) -> tuple[DataTree, ...]:
    descriptor = graph.descriptor(node_id)
    fn = graph.registry.evaluator(descriptor.type_id).fn
    inputs = descriptor.inputs
    n_out = len(descriptor.outputs)
    out_branches: list[dict[Path, tuple]] = [{} for _ in range(n_out)]
    for path in _aligned_paths(trees):
        branches = [
            _coerce_items(graph, node_id, _branch_at(tree, path), port)
            for tree, port in zip(trees, inputs)
        ]
        item_lengths = [
            len(b) for b, port in zip(branches, inputs) if port.access == "item"
        ]
        if any(length == 0 for length in item_lengths):
            for j in range(n_out):
                out_branches[j][path] = ()
            continue
        count = max(item_lengths) if item_lengths else 1
        per_eval: list[tuple] = []
        for i in range(count):
            args = [
                branch[min(i, len(branch) - 1)] if port.access == "item" else list(branch)
                for branch, port in zip(branches, inputs)
            ]
            try:
                result = fn(*args)
            except Exception as exc:
                raise _fail(graph, node_id, str(exc)) from None
            if not isinstance(result, tuple) or len(result) != n_out:
                raise _fail(graph, node_id, "evaluator returned a malformed result")
            per_eval.append(result)
        for j in range(n_out):
            values = [result[j] for result in per_eval]
            if count == 1:
                only = values[0]
                out_branches[j][path] = tuple(only) if isinstance(only, list) else (only,)
            elif any(isinstance(v, list) for v in values):
                for i, v in enumerate(values):
                    out_branches[j][path + (i,)] = tuple(v) if isinstance(v, list) else (v,)
            else:
                out_branches[j][path] = tuple(values)
    return tuple(DataTree(b) for b in out_branches)


def _run_node(graph: WorkflowGraph, node_id: str, outputs: NodeOutputs) -> tuple[DataTree, ...]:
    descriptor = graph.descriptor(node_id)
    evaluator = graph.registry.evaluator(descriptor.type_id)
    node = graph.node(node_id)
    if evaluator.mode == "source":
        try:
            values = evaluator.fn(dict(node.state))
        except Exception as exc:
            raise _fail(graph, node_id, str(exc)) from None
        return tuple(DataTree.item(v) for v in values)
    trees = _input_trees(graph, node_id, outputs)
    if evaluator.mode == "tree":
        try:
            result = evaluator.fn(*trees)
        except Exception as exc:
            raise _fail(graph, node_id, str(exc)) from None
        return tuple(result)
    return _run_item_node(graph, node_id, trees)


def evaluate(graph: WorkflowGraph) -> NodeOutputs:
    """Full evaluation of every node, in topological order."""
    outputs: NodeOutputs = {}
    for node_id in graph.evaluation_order():
        outputs[node_id] = _run_node(graph, node_id, outputs)
        graph.recompute_count += 1
    graph._cache = dict(outputs)
    graph._dirty.clear()
    graph._evaluated = True
    return outputs


def reevaluate_dirty(graph: WorkflowGraph) -> NodeOutputs:
    """Recompute only dirty nodes; equivalent to evaluate, cheaper."""
    if not graph._evaluated:
        raise NotEvaluated("no prior full evaluation to update")
    outputs: NodeOutputs = dict(graph._cache)
    for node_id in graph.evaluation_order():
        if node_id not in graph._dirty:
            continue
        outputs[node_id] = _run_node(graph, node_id, outputs)
        graph.recompute_count += 1
    graph._cache = dict(outputs)
    graph._dirty.clear()
    return outputs


__all__ = ["NodeOutputs", "evaluate", "reevaluate_dirty"]
