"""Reference modeling tasks with analytic oracles, runnable as a suite.

Each case carries the request a user would type, the reference script
that fulfils it, the slider layout the request demands, and a table of
parameter combinations whose expected geometry is computed here from
closed-form formulas rather than by the engine under test.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from graphflow.dsl import errors_only, execute, parse_script, validate
from graphflow.engine import WorkflowGraph, evaluate
from graphflow.geometry.ops import volume
from graphflow.geometry.types import Circle, Extrusion, Loft, Polyline
from graphflow.registry.builtins import builtin_registry
from graphflow.registry.model import Registry


@dataclass(frozen=True)
class SliderSpec:
    node_id: str
    min: float
    max: float
    default: float
    decimals: int


@dataclass(frozen=True)
class TestCase:
    name: str
    prompt: str
    sliders: tuple[SliderSpec, ...]
    combinations: tuple[tuple[float, ...], ...]
    oracle: Callable[[WorkflowGraph, tuple[float, ...]], list[str]]

    def __post_init__(self):
        for row in self.combinations:
            if len(row) != len(self.sliders):
                raise ValueError(f"{self.name}: row {row} does not match the sliders")
            for spec, value in zip(self.sliders, row):
                if not spec.min <= value <= spec.max:
                    raise ValueError(f"{self.name}: {spec.node_id}={value} is out of range")


@dataclass
class CaseResult:
    name: str
    passed: bool
    failures: list[str]
    rows_checked: int
    elapsed: float


def case_script(name: str) -> str:
    return resources.files("graphflow.service").joinpath(f"cases/{name}.gfs").read_text()


def load_case_graph(name: str, registry: Registry | None = None) -> WorkflowGraph:
    registry = registry or builtin_registry()
    ast = parse_script(case_script(name))
    diagnostics = errors_only(validate(ast, registry))
    if diagnostics:
        raise ValueError(f"{name}: reference script is invalid: {diagnostics[0].render()}")
    return execute(ast, registry)


def shown_values(graph: WorkflowGraph) -> list:
    """Every value produced by preview-enabled nodes, in insertion order."""
    out = []
    for node in graph.nodes():
        if not node.preview:
            continue
        for tree in graph.cached_outputs(node.node_id):
            out.extend(tree.all_values())
    return out


def _delta(got: float, want: float) -> str:
    return f"got {got!r}, wanted {want!r} (delta {abs(got - want):.3e})"


def _check_circle_case(graph: WorkflowGraph, values: tuple[float, ...]) -> list[str]:
    r, z = values
    shown = shown_values(graph)
    if len(shown) != 1 or not isinstance(shown[0], Circle):
        return [f"expected one circle on display, found {shown!r}"]
    c = shown[0]
    bad = []
    o = c.plane.origin
    if math.hypot(o.x, o.y) > 1e-9 or abs(o.z - z) > 1e-9:
        bad.append(f"center: got ({o.x}, {o.y}, {o.z}), wanted (0, 0, {z})")
    if abs(c.radius - r) > 1e-9:
        bad.append("radius: " + _delta(c.radius, r))
    return bad


def _check_frustum_case(graph: WorkflowGraph, values: tuple[float, ...]) -> list[str]:
    r1, r2, h = values
    shown = shown_values(graph)
    if len(shown) != 1 or not isinstance(shown[0], Loft):
        return [f"expected one lofted solid on display, found {shown!r}"]
    solid = shown[0]
    bad = []
    if not solid.capped:
        bad.append("solid is not capped")
    want = math.pi * h / 3.0 * (r1 * r1 + r1 * r2 + r2 * r2)
    got = volume(solid)
    if abs(got - want) > 1e-9 * abs(want):
        bad.append("volume: " + _delta(got, want))
    return bad


def _check_tower_case(graph: WorkflowGraph, values: tuple[float, ...]) -> list[str]:
    r0, h, n, f = values
    n = int(n)
    shown = shown_values(graph)
    if len(shown) != n:
        return [f"expected {n} solids on display, found {len(shown)}"]
    bad = []
    for k, solid in enumerate(shown):
        if not (isinstance(solid, Extrusion) and solid.capped and isinstance(solid.base, Circle)):
            bad.append(f"layer {k}: expected a capped extruded circle, found {solid!r}")
            continue
        want_r = r0 * f**k
        if abs(solid.base.radius - want_r) > 1e-9:
            bad.append(f"layer {k} radius: " + _delta(solid.base.radius, want_r))
        if abs(solid.base.plane.origin.z - k * h) > 1e-9:
            bad.append(f"layer {k} base height: " + _delta(solid.base.plane.origin.z, k * h))
        if abs(solid.direction.z - h) > 1e-9 or math.hypot(solid.direction.x, solid.direction.y) > 1e-9:
            bad.append(f"layer {k}: extrusion direction {solid.direction!r} is not (0, 0, {h})")
        want_v = math.pi * want_r * want_r * h
        got_v = volume(solid)
        if abs(got_v - want_v) > 1e-9 * abs(want_v):
            bad.append(f"layer {k} volume: " + _delta(got_v, want_v))
    if not bad and shown:
        top = shown[-1].base.plane.origin.z + shown[-1].direction.z
        if abs(top - n * h) > 1e-9:
            bad.append("total height: " + _delta(top, n * h))
    return bad


def _vertex_on_square_edge(p, square: Polyline, tol: float = 1e-9) -> bool:
    """Plan-view test: does (p.x, p.y) sit on one of the square's segments?"""
    for a, b in square.segments():
        dx, dy = b.x - a.x, b.y - a.y
        length_sq = dx * dx + dy * dy
        if length_sq == 0.0:
            continue
        t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / length_sq
        if -1e-12 <= t <= 1.0 + 1e-12:
            if math.hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy)) <= tol:
                return True
    return False


def _check_nested_squares_case(graph: WorkflowGraph, values: tuple[float, ...]) -> list[str]:
    r0, h, n, rot = values
    n = int(n)
    theta = rot * math.pi
    shrink = 1.0 / (math.cos(theta) + math.sin(theta))
    shown = shown_values(graph)
    if len(shown) != n:
        return [f"expected {n} solids on display, found {len(shown)}"]
    bad = []
    for k, solid in enumerate(shown):
        if not (isinstance(solid, Extrusion) and solid.capped and isinstance(solid.base, Polyline)):
            bad.append(f"layer {k}: expected a capped extruded polyline, found {solid!r}")
            continue
        base = solid.base
        if not base.closed or len(base.vertices) != 4:
            bad.append(f"layer {k}: base is not a closed quad")
            continue
        want_r = r0 * shrink**k
        for v in base.vertices:
            if abs(math.hypot(v.x, v.y) - want_r) > 1e-9:
                bad.append(f"layer {k} circumradius: " + _delta(math.hypot(v.x, v.y), want_r))
                break
            if abs(v.z - k * h) > 1e-9:
                bad.append(f"layer {k} base height: " + _delta(v.z, k * h))
                break
    if bad:
        return bad
    for k in range(n - 1):
        outer, inner = shown[k].base, shown[k + 1].base
        for v in inner.vertices:
            if not _vertex_on_square_edge(v, outer):
                bad.append(
                    f"layer {k + 1} vertex ({v.x}, {v.y}) misses every edge of layer {k}"
                )
    if theta == 0.0:
        first = [(v.x, v.y) for v in shown[0].base.vertices]
        for k, solid in enumerate(shown[1:], start=1):
            same = all(
                math.hypot(a.x - x, a.y - y) <= 1e-9
                for a, (x, y) in zip(solid.base.vertices, first)
            )
            if not same:
                bad.append(f"zero rotation: layer {k} footprint differs from layer 0")
    return bad


CASES: tuple[TestCase, ...] = (
    TestCase(
        name="single_object_2d",
        prompt=(
            "I need a workflow to draw a circle on the XY plane and create a slider "
            "that controls the radius (2 to 20, default 20), and components with a "
            "slider to move the circle on the z-axis (-10 to 10, default 0)."
        ),
        sliders=(
            SliderSpec("radius", 2, 20, 20, 0),
            SliderSpec("z", -10, 10, 0, 0),
        ),
        combinations=((20, 0), (10, 10), (2, -10), (15, 8)),
        oracle=_check_circle_case,
    ),
    TestCase(
        name="single_object_3d",
        prompt=(
            "I need a workflow to draw a closed flattop cone. Include number sliders "
            "to control the bottom circle's radius (1 to 20, default 20, accuracy to "
            "the hundredth), the top circle's radius (1 to 20, default 10, accuracy "
            "to the thousandth), the height (5 to 10, default 7, accuracy to the tenth)."
        ),
        sliders=(
            SliderSpec("bottom_radius", 1, 20, 20, 2),
            SliderSpec("top_radius", 1, 20, 10, 3),
            SliderSpec("height", 5, 10, 7, 1),
        ),
        combinations=((20.0, 10.0, 7.0), (20.0, 1.0, 9.5), (4.0, 15.0, 9.5), (10.0, 10.0, 5.0)),
        oracle=_check_frustum_case,
    ),
    TestCase(
        name="multi_object_3d",
        prompt=(
            "I need a workflow to draw a closed round tower with each layer as a "
            "closed cylinder at a constant height. Each layer's base circle reduces "
            "the radius by a continuous reduction factor compared to the layer below. "
            "Include number sliders for the bottom circle radius (20 to 200, default "
            "100, accuracy to the tenth), the height of each layer (1 to 20, default "
            "10, accuracy to the hundredth), the total number of layers (1 to 20, "
            "default 10), and the reduction factor (0.1 to 1.0, default 0.75, "
            "accuracy to the thousandth)."
        ),
        sliders=(
            SliderSpec("radius", 20, 200, 100, 1),
            SliderSpec("layer_height", 1, 20, 10, 2),
            SliderSpec("layers", 1, 20, 10, 0),
            SliderSpec("reduction", 0.1, 1.0, 0.75, 3),
        ),
        combinations=(
            (100.0, 10.0, 10, 0.75),
            (35.7, 20.0, 4, 1.0),
            (200.0, 20.0, 20, 0.9),
            (200.0, 1.0, 10, 0.55),
        ),
        oracle=_check_tower_case,
    ),
    TestCase(
        name="recursive_multi_object_3d",
        prompt=(
            "I need a workflow to draw a multilayer tower. Each layer is a closed, "
            "regular square prism with a constant height. The layers are based on a "
            "series of concentric squares, each rotated at constant angles and "
            "decreasing in size from the nearest outer square, with vertices always "
            "positioned at the edges of the nearest outer square. (Nested Squares) "
            "Include number sliders to control the bottom square's radius (20 to 200, "
            "default 100, accuracy to the tenth), layer height (1 to 20, default 10, "
            "accuracy to the hundredth), total layers (1 to 20, default 10), and "
            "control layer rotation (0 to 0.5, default 0.25, thousandth accuracy) "
            "for degrees between 0 and 90."
        ),
        sliders=(
            SliderSpec("radius", 20, 200, 100, 1),
            SliderSpec("layer_height", 1, 20, 10, 2),
            SliderSpec("layers", 1, 20, 10, 0),
            SliderSpec("rotation", 0, 0.5, 0.25, 3),
        ),
        combinations=(
            (100.0, 10.0, 10, 0.25),
            (50.0, 20.0, 4, 0.0),
            (200.0, 15.0, 20, 0.01),
            (200.0, 1.0, 20, 0.36),
        ),
        oracle=_check_nested_squares_case,
    ),
)

CASE_NAMES = tuple(c.name for c in CASES)


def get_case(name: str) -> TestCase:
    for case in CASES:
        if case.name == name:
            return case
    raise KeyError(f"no benchmark case named {name!r} (have {', '.join(CASE_NAMES)})")


def _check_sliders(graph: WorkflowGraph, case: TestCase) -> list[str]:
    bad = []
    for spec in case.sliders:
        try:
            node = graph.node(spec.node_id)
        except Exception:
            bad.append(f"slider {spec.node_id!r} is missing")
            continue
        if not graph.descriptor(node.node_id).is_slider:
            bad.append(f"{spec.node_id!r} is not a slider")
            continue
        st = node.state
        for key, want in (
            ("min", spec.min), ("max", spec.max),
            ("value", spec.default), ("decimals", spec.decimals),
        ):
            if key not in st or abs(float(st[key]) - float(want)) > 1e-12:
                bad.append(f"slider {spec.node_id}.{key}: got {st.get(key)!r}, wanted {want!r}")
    return bad


def run_case(case: TestCase, registry: Registry | None = None) -> CaseResult:
    registry = registry or builtin_registry()
    started = time.perf_counter()
    failures: list[str] = []
    try:
        graph = load_case_graph(case.name, registry)
    except Exception as exc:
        return CaseResult(case.name, False, [f"script failed to build: {exc}"], 0,
                          time.perf_counter() - started)
    failures += _check_sliders(graph, case)
    rows = 0
    for row in case.combinations:
        try:
            for spec, value in zip(case.sliders, row):
                graph.set_param(spec.node_id, "value", value)
            evaluate(graph)
        except Exception as exc:
            failures.append(f"row {row}: evaluation failed: {exc}")
            continue
        rows += 1
        failures += [f"row {row}: {msg}" for msg in case.oracle(graph, row)]
    return CaseResult(case.name, not failures, failures, rows, time.perf_counter() - started)


def run_benchmarks(names: tuple[str, ...] | None = None,
                   registry: Registry | None = None) -> list[CaseResult]:
    registry = registry or builtin_registry()
    picked = CASES if names is None else tuple(get_case(n) for n in names)
    return [run_case(case, registry) for case in picked]


def render_report(results: list[CaseResult]) -> str:
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name}  ({r.rows_checked} rows, {r.elapsed:.3f}s)")
        lines.extend(f"      {msg}" for msg in r.failures)
    total = sum(1 for r in results if r.passed)
    lines.append(f"{total}/{len(results)} cases passed")
    return "\n".join(lines)


__all__ = [
    "CASES",
    "CASE_NAMES",
    "CaseResult",
    "SliderSpec",
    "TestCase",
    "case_script",
    "get_case",
    "load_case_graph",
    "render_report",
    "run_benchmarks",
    "run_case",
    "shown_values",
]
