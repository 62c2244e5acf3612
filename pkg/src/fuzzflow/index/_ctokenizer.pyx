# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython twin of ``fuzzflow.index.ctokens``.

Same algorithm, same token tuples, compiled for throughput.  Any behavioural
change here must be mirrored in the pure-Python module; the test suite
compares both token streams on real and randomized inputs.
"""

IDENT = 1
NUMBER = 2
STRING = 3
CHAR = 4
PUNCT = 5
COMMENT = 6
PREPROC = 7

cdef set _PUNCT3 = {b"<<=", b">>=", b"..."}
cdef set _PUNCT2 = {
    b"->", b"++", b"--", b"<<", b">>", b"<=", b">=", b"==", b"!=",
    b"&&", b"||", b"+=", b"-=", b"*=", b"/=", b"%=", b"&=", b"^=",
    b"|=", b"##",
}


def tokenize(bytes src):
    """Split C source bytes into (kind, start, end, line) tuples."""
    cdef const unsigned char *s = src
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t n = len(src)
    cdef Py_ssize_t start, j
    cdef int line = 1
    cdef int start_line
    cdef bint at_line_start = True
    cdef unsigned char c, d, nxt, quote
    toks = []
    append = toks.append
    while i < n:
        c = s[i]
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
            while i < n:
                if s[i] == 0x0A:
                    j = i - 1
                    if j >= start and s[j] == 0x0D:
                        j -= 1
                    if j >= start and s[j] == 0x5C:
                        line += 1
                        i += 1
                        continue
                    break
                i += 1
            append((PREPROC, start, i, start_line))
            continue
        at_line_start = False
        if c == 0x2F and i + 1 < n:
            nxt = s[i + 1]
            if nxt == 0x2F:
                i += 2
                while i < n and s[i] != 0x0A:
                    i += 1
                append((COMMENT, start, i, start_line))
                continue
            if nxt == 0x2A:
                i += 2
                while i < n:
                    if s[i] == 0x2A and i + 1 < n and s[i + 1] == 0x2F:
                        i += 2
                        break
                    if s[i] == 0x0A:
                        line += 1
                    i += 1
                append((COMMENT, start, i, start_line))
                continue
        if c == 0x22 or c == 0x27:
            quote = c
            i += 1
            while i < n:
                d = s[i]
                if d == 0x5C and i + 1 < n:
                    if s[i + 1] == 0x0A:
                        line += 1
                    i += 2
                    continue
                if d == quote:
                    i += 1
                    break
                if d == 0x0A:
                    break
                i += 1
            append((STRING if quote == 0x22 else CHAR, start, i, start_line))
            continue
        if (0x30 <= c <= 0x39) or (
            c == 0x2E and i + 1 < n and 0x30 <= s[i + 1] <= 0x39
        ):
            i += 1
            while i < n:
                d = s[i]
                if (
                    (0x30 <= d <= 0x39)
                    or (0x41 <= d <= 0x5A)
                    or (0x61 <= d <= 0x7A)
                    or d == 0x5F
                    or d == 0x2E
                ):
                    i += 1
                    continue
                if (d == 0x2B or d == 0x2D) and (
                    s[i - 1] == 0x65 or s[i - 1] == 0x45
                    or s[i - 1] == 0x70 or s[i - 1] == 0x50
                ):
                    i += 1
                    continue
                break
            append((NUMBER, start, i, start_line))
            continue
        if (0x41 <= c <= 0x5A) or (0x61 <= c <= 0x7A) or c == 0x5F:
            i += 1
            while i < n:
                d = s[i]
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
