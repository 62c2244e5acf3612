"""Tokenizer selection: compiled extension when built, pure Python otherwise.

``tokenize`` is the only entry point the rest of the indexer uses; callers
never import the twins directly.  ``TOKENIZER_IMPL`` reports which one is
active ("cython" or "python") so the benchmark and CLI can show it.
"""

from .ctokens import CHAR, COMMENT, IDENT, KIND_NAMES, NUMBER, PREPROC, PUNCT, STRING

try:
    from ._ctokenizer import tokenize

    TOKENIZER_IMPL = "cython"
except ImportError:
    from .ctokens import tokenize

    TOKENIZER_IMPL = "python"

__all__ = [
    "tokenize",
    "TOKENIZER_IMPL",
    "IDENT",
    "NUMBER",
    "STRING",
    "CHAR",
    "PUNCT",
    "COMMENT",
    "PREPROC",
    "KIND_NAMES",
]
