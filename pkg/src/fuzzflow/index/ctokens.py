"""Pure-Python C tokenizer.

This is the fallback twin of the Cython extension ``_ctokenizer``; both must
produce byte-identical token streams (enforced by tests).  Tokens are
``(kind, start, end, line)`` tuples with byte offsets into the source and the
1-based line number of the token's first byte.

The scanner is deliberately a lexer, not a parser: it never needs a compile
command to run, it keeps comments and preprocessor lines as first-class
tokens, and every token slices back out of the original bytes verbatim.
"""

IDENT = 1
NUMBER = 2
STRING = 3
CHAR = 4
PUNCT = 5
COMMENT = 6
PREPROC = 7

KIND_NAMES = {
    IDENT: "ident",
    NUMBER: "number",
    STRING: "string",
    CHAR: "char",
    PUNCT: "punct",
    COMMENT: "comment",
    PREPROC: "preproc",
}

_PUNCT3 = frozenset([b"<<=", b">>=", b"..."])
_PUNCT2 = frozenset(
    [
        b"->", b"++", b"--", b"<<", b">>", b"<=", b">=", b"==", b"!=",
        b"&&", b"||", b"+=", b"-=", b"*=", b"/=", b"%=", b"&=", b"^=",
        b"|=", b"##",
    ]
)


def tokenize(src: bytes) -> list[tuple[int, int, int, int]]:
    """Split C source bytes into tokens, skipping only whitespace."""
    toks = []
    append = toks.append
    i = 0
    n = len(src)
    line = 1
    at_line_start = True
    while i < n:
        c = src[i]
        if c == 0x0A:
            line += 1
            i += 1
            at_line_start = True
            continue
        if c == 0x20 or c == 0x09 or c == 0x0D or c == 0x0B or c == 0x0C:
            i += 1
            continue
        start = i
        start_line = line
        if c == 0x23 and at_line_start:
            # Directive runs to end of line; backslash-newline continues it.
            while i < n:
                if src[i] == 0x0A:
                    j = i - 1
                    if j >= start and src[j] == 0x0D:
                        j -= 1
                    if j >= start and src[j] == 0x5C:
                        line += 1
                        i += 1
                        continue
                    break
                i += 1
            append((PREPROC, start, i, start_line))
            continue
        at_line_start = False
        if c == 0x2F and i + 1 < n:
            nxt = src[i + 1]
            if nxt == 0x2F:
                i += 2
                while i < n and src[i] != 0x0A:
                    i += 1
                append((COMMENT, start, i, start_line))
                continue
            if nxt == 0x2A:
                i += 2
                while i < n:
                    if src[i] == 0x2A and i + 1 < n and src[i + 1] == 0x2F:
                        i += 2
                        break
                    if src[i] == 0x0A:
                        line += 1
                    i += 1
                append((COMMENT, start, i, start_line))
                continue
        if c == 0x22 or c == 0x27:
            quote = c
            i += 1
            while i < n:
                d = src[i]
                if d == 0x5C and i + 1 < n:
                    if src[i + 1] == 0x0A:
                        line += 1
                    i += 2
                    continue
                if d == quote:
                    i += 1
                    break
                if d == 0x0A:
                    break  # unterminated literal: newline stays outside
                i += 1
            append((STRING if quote == 0x22 else CHAR, start, i, start_line))
            continue
        if (0x30 <= c <= 0x39) or (
            c == 0x2E and i + 1 < n and 0x30 <= src[i + 1] <= 0x39
        ):
            i += 1
            while i < n:
                d = src[i]
                if (
                    (0x30 <= d <= 0x39)
                    or (0x41 <= d <= 0x5A)
                    or (0x61 <= d <= 0x7A)
                    or d == 0x5F
                    or d == 0x2E
                ):
                    i += 1
                    continue
                if (d == 0x2B or d == 0x2D) and src[i - 1] in (0x65, 0x45, 0x70, 0x50):
                    i += 1
                    continue
                break
            append((NUMBER, start, i, start_line))
            continue
        if (0x41 <= c <= 0x5A) or (0x61 <= c <= 0x7A) or c == 0x5F:
            i += 1
            while i < n:
                d = src[i]
                if (
                    (0x30 <= d <= 0x39)
                    or (0x41 <= d <= 0x5A)
                    or (0x61 <= d <= 0x7A)
                    or d == 0x5F
                ):
                    i += 1
                    continue
                break
            append((IDENT, start, i, start_line))
            continue
        if i + 2 < n and src[i : i + 3] in _PUNCT3:
            i += 3
        elif i + 1 < n and src[i : i + 2] in _PUNCT2:
            i += 2
        else:
            i += 1
        append((PUNCT, start, i, start_line))
    return toks
