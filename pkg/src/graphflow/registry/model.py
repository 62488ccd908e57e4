"""Component catalog records and the registry that holds them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .values import KindError, ValueKind, accepts_value


class RegistryError(Exception):
    pass


class DuplicateTypeId(RegistryError):
    pass


@dataclass(frozen=True)
class PortDescriptor:
    """One indexed, typed port. Inputs may be optional and carry defaults."""

    index: int
    name: str
    description: str
    kind: ValueKind
    optional: bool = False
    default: object = None
    access: str = "item"  # item: one value per evaluation; list: a whole branch
    data_structure_note: str = ""  # outputs only

    def __post_init__(self) -> None:
        if self.index < 0:
            raise RegistryError(f"port index must be >= 0, got {self.index}")
        if self.access not in ("item", "list"):
            raise RegistryError(f"port access must be item or list, got {self.access!r}")
        if self.default is not None and not accepts_value(self.kind, self.default):
            raise KindError(
                f"default {self.default!r} does not fit {self.kind.value} port {self.name!r}"
            )


@dataclass(frozen=True)
class StateField:
    """A persisted, user-editable field of a stateful component."""

    name: str
    kind: ValueKind
    default: object
    description: str = ""


@dataclass(frozen=True)
class ComponentDescriptor:
    type_id: str
    name: str
    nickname: str
    category: str
    description: str
    default_preview: bool
    inputs: tuple[PortDescriptor, ...]
    outputs: tuple[PortDescriptor, ...]
    state_schema: tuple[StateField, ...] = ()

    def __post_init__(self) -> None:
        if not self.nickname:
            raise RegistryError(f"{self.type_id}: nickname must be nonempty")
        for direction, ports in (("input", self.inputs), ("output", self.outputs)):
            for expected, port in enumerate(ports):
                if port.index != expected:
                    raise RegistryError(
                        f"{self.type_id}: {direction} indices must be contiguous from 0"
                    )
        for port in self.outputs:
            if port.access != "item":
                raise RegistryError(f"{self.type_id}: outputs always have item access")
        if self.state_schema:
            names = [f.name for f in self.state_schema]
            if len(set(names)) != len(names):
                raise RegistryError(f"{self.type_id}: duplicate state field")

    @property
    def is_slider(self) -> bool:
        return bool(self.state_schema) and not self.inputs

    def state_field(self, name: str) -> StateField | None:
        for f in self.state_schema:
            if f.name == name:
                return f
        return None

    def default_state(self) -> dict:
        return {f.name: f.default for f in self.state_schema}


# Evaluation behavior attached at registration time.
#   source: fn(state) -> tuple of per-output values
#   item:   fn(*inputs) -> tuple of per-output values; a list value fills a branch
#   tree:   fn(*input DataTrees) -> tuple of per-output DataTrees
@dataclass(frozen=True)
class Evaluator:
    mode: str
    fn: Callable

    def __post_init__(self) -> None:
        if self.mode not in ("source", "item", "tree"):
            raise RegistryError(f"unknown evaluator mode {self.mode!r}")


_SLIDER_STATE = ("min", "max", "value", "decimals")


@dataclass
class Registry:
    _components: dict[str, ComponentDescriptor] = field(default_factory=dict)
    _evaluators: dict[str, Evaluator] = field(default_factory=dict)

    def register(self, descriptor: ComponentDescriptor, evaluator: Evaluator) -> None:
        if descriptor.type_id in self._components:
            raise DuplicateTypeId(descriptor.type_id)
        if descriptor.is_slider:
            if tuple(f.name for f in descriptor.state_schema) != _SLIDER_STATE:
                raise RegistryError(f"{descriptor.type_id}: slider state must be {_SLIDER_STATE}")
            if len(descriptor.outputs) != 1:
                raise RegistryError(f"{descriptor.type_id}: slider must have exactly 1 output")
        self._components[descriptor.type_id] = descriptor
        self._evaluators[descriptor.type_id] = evaluator

    def get(self, type_id: str) -> ComponentDescriptor | None:
        return self._components.get(type_id)

    def evaluator(self, type_id: str) -> Evaluator:
        return self._evaluators[type_id]

    def type_ids(self) -> list[str]:
        return sorted(self._components)

    def __contains__(self, type_id: str) -> bool:
        return type_id in self._components

    def __len__(self) -> int:
        return len(self._components)

    def __iter__(self):
        return iter(self._components[t] for t in self.type_ids())


__all__ = [
    "ComponentDescriptor",
    "DuplicateTypeId",
    "Evaluator",
    "PortDescriptor",
    "Registry",
    "RegistryError",
    "StateField",
]
