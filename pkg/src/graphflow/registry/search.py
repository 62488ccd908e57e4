"""Lexical retrieval over the component catalog.

Scoring is deliberately simple: weighted term frequency over the fields
a user's request would mention, with deterministic type_id tie-breaks.
The scorer is injectable so a semantic backend can slot in unchanged.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Protocol

from .docs import DocChunk, build_chunks
from .model import ComponentDescriptor, Registry

_TOKEN = re.compile(r"[a-z0-9]+")

NAME_WEIGHT = 3.0


class EmptyQuery(ValueError):
    pass


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


@dataclass(frozen=True)
class IndexEntry:
    descriptor: ComponentDescriptor
    chunk: DocChunk
    term_weights: dict


def _weights(c: ComponentDescriptor) -> dict:
    weights: dict[str, float] = {}

    def bump(text: str, weight: float) -> None:
        for token in tokenize(text):
            weights[token] = weights.get(token, 0.0) + weight

    bump(c.name, NAME_WEIGHT)
    bump(c.nickname, NAME_WEIGHT)
    bump(c.category, 1.0)
    bump(c.description, 1.0)
    for port in list(c.inputs) + list(c.outputs):
        bump(port.name, 1.0)
    return weights


class Scorer(Protocol):
    def __call__(self, query: str, entry: IndexEntry) -> float: ...


def lexical_scorer(query: str, entry: IndexEntry) -> float:
    return sum(entry.term_weights.get(token, 0.0) for token in tokenize(query))


class SearchIndex:
    def __init__(self, entries: list[IndexEntry], scorer: Scorer = lexical_scorer):
        self.entries = sorted(entries, key=lambda e: e.descriptor.type_id)
        self.scorer: Callable[[str, IndexEntry], float] = scorer

    def search(self, query: str, k: int) -> list[DocChunk]:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if not tokenize(query):
            raise EmptyQuery("query has no searchable terms")
        scored = [(-self.scorer(query, entry), entry.descriptor.type_id, entry) for entry in self.entries]
        scored.sort(key=lambda t: (t[0], t[1]))
        return [entry.chunk for _, _, entry in scored[:k]]


def build_index(registry: Registry, scorer: Scorer = lexical_scorer) -> SearchIndex:
    chunks = {chunk.type_id: chunk for chunk in build_chunks(registry)}
    entries = [
        IndexEntry(descriptor, chunks[descriptor.type_id], _weights(descriptor))
        for descriptor in registry
    ]
    return SearchIndex(entries, scorer)


__all__ = [
    "EmptyQuery",
    "IndexEntry",
    "NAME_WEIGHT",
    "Scorer",
    "SearchIndex",
    "build_index",
    "lexical_scorer",
    "tokenize",
]
