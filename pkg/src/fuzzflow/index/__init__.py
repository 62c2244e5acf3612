from .callgraph import CallEdge, CallGraph, ReachableResult
from .core import (
    CodeIndex,
    FunctionRecord,
    Param,
    TypeRecord,
    build_index,
    load_index,
    lookup_function,
    reachable_set,
    resolve_type,
    save_index,
)
from .tokenizer import TOKENIZER_IMPL, tokenize

__all__ = [
    "CallEdge",
    "CallGraph",
    "CodeIndex",
    "FunctionRecord",
    "Param",
    "ReachableResult",
    "TypeRecord",
    "TOKENIZER_IMPL",
    "build_index",
    "load_index",
    "lookup_function",
    "reachable_set",
    "resolve_type",
    "save_index",
    "tokenize",
]
