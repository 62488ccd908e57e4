"""Branch-addressed value collections flowing along wires.

A tree maps integer-tuple paths to ordered branches. Paths are kept in
lexicographic order and every branch holds values of one kind (ints and
floats may mix; ints read as numbers).
"""
from __future__ import annotations

from typing import Iterable, Iterator

from graphflow.registry.values import KindError, ValueKind, kind_of

from .errors import TreeError

Path = tuple[int, ...]


def format_path(path: Path) -> str:
    return "{" + ";".join(str(i) for i in path) + "}"


def _branch_kind(values: tuple) -> ValueKind | None:
    """Shared kind of a branch, widening Integer to Number as needed."""
    kind: ValueKind | None = None
    for v in values:
        try:
            k = kind_of(v)
        except KindError as exc:
            raise TreeError(str(exc)) from None
        if kind is None or kind == k:
            kind = k
        elif {kind, k} == {ValueKind.INTEGER, ValueKind.NUMBER}:
            kind = ValueKind.NUMBER
        else:
            raise TreeError(
                f"branch mixes {kind.value} and {k.value} values"
            )
    return kind


class DataTree:
    """Immutable after construction; equality is structural."""

    __slots__ = ("_branches",)

    def __init__(self, branches: dict[Path, Iterable] | None = None):
        normalized: dict[Path, tuple] = {}
        for path, values in (branches or {}).items():
            if not isinstance(path, tuple) or not all(
                isinstance(i, int) and not isinstance(i, bool) and i >= 0 for i in path
            ):
                raise TreeError(f"path must be a tuple of non-negative ints, got {path!r}")
            if path in normalized:
                raise TreeError(f"duplicate path {format_path(path)}")
            items = tuple(values)
            _branch_kind(items)
            normalized[path] = items
        self._branches = dict(sorted(normalized.items()))

    @classmethod
    def single(cls, values: Iterable, path: Path = (0,)) -> "DataTree":
        return cls({path: values})

    @classmethod
    def item(cls, value) -> "DataTree":
        return cls({(0,): (value,)})

    def paths(self) -> list[Path]:
        return list(self._branches)

    def branch(self, path: Path) -> tuple:
        return self._branches[path]

    def branches(self) -> Iterator[tuple[Path, tuple]]:
        return iter(self._branches.items())

    def all_values(self) -> list:
        out = []
        for values in self._branches.values():
            out.extend(values)
        return out

    def item_count(self) -> int:
        return sum(len(v) for v in self._branches.values())

    @property
    def is_empty(self) -> bool:
        return self.item_count() == 0

    def first_value(self):
        for values in self._branches.values():
            if values:
                return values[0]
        raise TreeError("tree has no values")

    def flattened(self) -> "DataTree":
        return DataTree({(0,): self.all_values()})

    def __eq__(self, other) -> bool:
        return isinstance(other, DataTree) and self._branches == other._branches

    def __hash__(self):
        raise TypeError("DataTree is not hashable")

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{format_path(p)}: [{', '.join(map(repr, vs))}]" for p, vs in self._branches.items()
        )
        return f"DataTree({parts})"


__all__ = ["DataTree", "Path", "TreeError", "format_path"]
