"""Component catalog: descriptors, builtins, doc export, retrieval index."""
from .builtins import builtin_registry
from .docs import (
    DocChunk,
    DocFormatError,
    build_chunks,
    catalog_json,
    export_docs,
    parse_docs,
    render_component,
)
from .model import (
    ComponentDescriptor,
    DuplicateTypeId,
    Evaluator,
    PortDescriptor,
    Registry,
    RegistryError,
    StateField,
)
from .search import EmptyQuery, IndexEntry, SearchIndex, build_index, lexical_scorer, tokenize
from .values import (
    KindError,
    ValueKind,
    accepts_value,
    coerce_value,
    format_literal,
    kind_of,
    parse_literal,
    wire_compatible,
)

__all__ = [
    "ComponentDescriptor",
    "DocChunk",
    "DocFormatError",
    "DuplicateTypeId",
    "EmptyQuery",
    "Evaluator",
    "IndexEntry",
    "KindError",
    "PortDescriptor",
    "Registry",
    "RegistryError",
    "SearchIndex",
    "StateField",
    "ValueKind",
    "accepts_value",
    "build_chunks",
    "build_index",
    "builtin_registry",
    "catalog_json",
    "coerce_value",
    "export_docs",
    "format_literal",
    "kind_of",
    "lexical_scorer",
    "parse_docs",
    "parse_literal",
    "render_component",
    "tokenize",
    "wire_compatible",
]
