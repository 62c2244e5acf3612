"""Extract functions, types, includes, and call sites from C token streams.

Works on pre-expansion source text: boundaries and spans are byte offsets so
every extracted slice round-trips verbatim.  This is a boundary scanner, not
a semantic frontend; it recognises the common ANSI-C shapes (definitions,
prototypes, struct/enum/union/typedef blocks, call expressions) and leaves
anything it cannot place as a diagnostic rather than guessing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .tokenizer import CHAR, COMMENT, IDENT, NUMBER, PREPROC, PUNCT, STRING, tokenize

# Keywords that can never be a function name or a callee.
C_KEYWORDS = frozenset(
    """
    auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile while
    _Bool _Complex _Static_assert _Alignas _Alignof _Noreturn _Thread_local
    """.split()
)

# Tokens that add one linearly independent path when they appear in a body.
DECISION_KEYWORDS = frozenset(["if", "while", "for", "case"])
DECISION_OPERATORS = frozenset([b"&&", b"||", b"?"])

_INCLUDE_RE = re.compile(rb'#\s*include\s+(?:"([^"]+)"|<([^>]+)>)')


@dataclass
class ParsedParam:
    name: str
    type_text: str


@dataclass
class ParsedFunction:
    name: str
    start: int            # byte offset of the first declaration token
    end: int              # byte offset one past the closing brace
    start_line: int
    end_line: int
    body_start: int       # offset of the opening brace
    return_type: str
    params: list[ParsedParam]
    is_static: bool
    is_variadic: bool
    leading_comment: str | None
    calls: list[ParsedCall] = field(default_factory=list)
    decision_points: int = 0


@dataclass
class ParsedCall:
    callee: str           # identifier text, or "<indirect>" when unnamed
    offset: int
    line: int
    syntax: str           # "name" | "member" | "deref"


@dataclass
class ParsedPrototype:
    name: str
    line: int


@dataclass
class ParsedType:
    name: str
    kind: str             # struct | enum | union | typedef
    start: int
    end: int
    start_line: int


@dataclass
class ParsedFile:
    functions: list[ParsedFunction]
    prototypes: list[ParsedPrototype]
    types: list[ParsedType]
    includes: list[str]
    diagnostics: list[str]


def parse_source(src: bytes) -> ParsedFile:
    toks = tokenize(src)
    functions: list[ParsedFunction] = []
    prototypes: list[ParsedPrototype] = []
    types: list[ParsedType] = []
    includes: list[str] = []
    diagnostics: list[str] = []

    # Structural stream: everything except comments, which are tracked
    # separately so a function can pick up the comment block above it.
    struct_toks = [t for t in toks if t[0] != COMMENT]
    comments = [t for t in toks if t[0] == COMMENT]

    for kind, start, end, _line in struct_toks:
        if kind == PREPROC:
            m = _INCLUDE_RE.match(src[start:end])
            if m:
                name = m.group(1) or m.group(2)
                includes.append(name.decode("utf-8", "replace"))

    i = 0
    n = len(struct_toks)
    decl_start = _next_decl_start(struct_toks, 0)
    while i < n:
        kind, start, end, line = struct_toks[i]
        if kind == PREPROC:
            i += 1
            if decl_start == i - 1:
                decl_start = i
            continue
        text = src[start:end]
        if kind == PUNCT and text == b"{":
            close = _match_brace(struct_toks, i, src)
            if close is None:
                diagnostics.append(f"unbalanced brace at line {line}")
                break
            matched = _classify_block(
                src, struct_toks, decl_start, i, close, comments,
                functions, types, diagnostics,
            )
            if matched is None:
                diagnostics.append(f"unrecognized top-level block at line {line}")
            i = close + 1
            if matched == "type":
                # struct/enum/union/typedef blocks run on to a ';' that may
                # carry the typedef'd name.
                while i < n and not (
                    struct_toks[i][0] == PUNCT
                    and src[struct_toks[i][1]:struct_toks[i][2]] == b";"
                ):
                    if (
                        struct_toks[i][0] == PUNCT
                        and src[struct_toks[i][1]:struct_toks[i][2]] == b"{"
                    ):
                        break
                    i += 1
                if i < n and struct_toks[i][0] == PUNCT and src[struct_toks[i][1]:struct_toks[i][2]] == b";":
                    if types and types[-1].end <= struct_toks[i][2]:
                        maybe = _typedef_tail_name(src, struct_toks, close + 1, i)
                        if maybe and types[-1].name == "":
                            types[-1].name = maybe
                        types[-1].end = struct_toks[i][2]
                    i += 1
            decl_start = _next_decl_start(struct_toks, i)
            continue
        if kind == PUNCT and text == b";":
            _classify_statement(
                src, struct_toks, decl_start, i, prototypes, types, diagnostics
            )
            i += 1
            decl_start = _next_decl_start(struct_toks, i)
            continue
        i += 1

    return ParsedFile(functions, prototypes, types, includes, diagnostics)


def _next_decl_start(struct_toks, i):
    while i < len(struct_toks) and struct_toks[i][0] == PREPROC:
        i += 1
    return i


def _match_brace(struct_toks, open_idx, src):
    depth = 0
    for j in range(open_idx, len(struct_toks)):
        kind, start, end, _ = struct_toks[j]
        if kind != PUNCT:
            continue
        t = src[start:end]
        if t == b"{":
            depth += 1
        elif t == b"}":
            depth -= 1
            if depth == 0:
                return j
    return None


def _match_paren_back(struct_toks, close_idx, src):
    depth = 0
    for j in range(close_idx, -1, -1):
        kind, start, end, _ = struct_toks[j]
        if kind != PUNCT:
            continue
        t = src[start:end]
        if t == b")":
            depth += 1
        elif t == b"(":
            depth -= 1
            if depth == 0:
                return j
    return None


def _token_text(src, tok) -> str:
    return src[tok[1]:tok[2]].decode("utf-8", "replace")


def _classify_block(
    src, struct_toks, decl_start, open_idx, close_idx, comments,
    functions, types, diagnostics,
) -> str | None:
    """Decide what the '{' at open_idx belongs to and record it.

    Returns "function", "type", or None when the block matched nothing.
    """
    if decl_start >= open_idx:
        return None
    head = struct_toks[decl_start:open_idx]
    head_texts = [_token_text(src, t) for t in head]

    # Function definition: ...) {   with an identifier naming the paren group.
    if head and head[-1][0] == PUNCT and src[head[-1][1]:head[-1][2]] == b")":
        open_paren = _match_paren_back(struct_toks, decl_start + len(head) - 1, src)
        if open_paren is not None and open_paren > decl_start:
            name_tok = struct_toks[open_paren - 1]
            name = _token_text(src, name_tok)
            if name_tok[0] == IDENT and name not in C_KEYWORDS:
                fn = _build_function(
                    src, struct_toks, decl_start, open_paren, name,
                    open_idx, close_idx, comments,
                )
                functions.append(fn)
                return "function"

    # Type definition: struct/enum/union [name] { ... }  (optionally typedef'd)
    kw = None
    kw_pos = None
    for pos, txt in enumerate(head_texts):
        if txt in ("struct", "enum", "union"):
            kw = txt
            kw_pos = pos
            break
    if kw is not None:
        is_typedef = "typedef" in head_texts[:kw_pos]
        name = ""
        if kw_pos + 1 < len(head_texts) and head[kw_pos + 1][0] == IDENT:
            name = head_texts[kw_pos + 1]
        types.append(
            ParsedType(
                name=name,
                kind="typedef" if is_typedef and not name else kw,
                start=head[0][1],
                end=struct_toks[close_idx][2],
                start_line=head[0][3],
            )
        )
        return "type"
    return None


def _typedef_tail_name(src, struct_toks, start_idx, semi_idx) -> str | None:
    for j in range(semi_idx - 1, start_idx - 1, -1):
        if struct_toks[j][0] == IDENT:
            return _token_text(src, struct_toks[j])
    return None


def _classify_statement(src, struct_toks, decl_start, semi_idx, prototypes, types, diagnostics):
    if decl_start >= semi_idx:
        return
    head = struct_toks[decl_start:semi_idx]
    head_texts = [_token_text(src, t) for t in head]
    if not head_texts:
        return
    if head_texts[0] == "typedef":
        name = None
        for j in range(len(head) - 1, -1, -1):
            if head[j][0] == IDENT and head_texts[j] not in C_KEYWORDS:
                name = head_texts[j]
                break
        if name:
            types.append(
                ParsedType(
                    name=name,
                    kind="typedef",
                    start=head[0][1],
                    end=struct_toks[semi_idx][2],
                    start_line=head[0][3],
                )
            )
        return
    # Prototype: declaration ending in (...) with a named identifier.
    if head and head[-1][0] == PUNCT and src[head[-1][1]:head[-1][2]] == b")":
        open_paren = _match_paren_back(struct_toks, decl_start + len(head) - 1, src)
        if open_paren is not None and open_paren > decl_start:
            name_tok = struct_toks[open_paren - 1]
            name = _token_text(src, name_tok)
            if name_tok[0] == IDENT and name not in C_KEYWORDS:
                prototypes.append(ParsedPrototype(name=name, line=name_tok[3]))


def _build_function(
    src, struct_toks, decl_start, open_paren, name,
    open_brace, close_brace, comments,
) -> ParsedFunction:
    head = struct_toks[decl_start:open_paren]  # specifiers + name trail
    name_tok = struct_toks[open_paren - 1]
    spec_toks = [t for t in head if t is not name_tok]
    spec_texts = [_token_text(src, t) for t in spec_toks]
    is_static = "static" in spec_texts
    return_type = " ".join(
        t for t in spec_texts if t not in ("static", "extern", "inline")
    )
    return_type = _normalize_type(return_type)

    params, variadic = _parse_params(src, struct_toks, open_paren)

    start_tok = struct_toks[decl_start]
    end_tok = struct_toks[close_brace]

    fn = ParsedFunction(
        name=name,
        start=start_tok[1],
        end=end_tok[2],
        start_line=start_tok[3],
        end_line=end_tok[3],
        body_start=struct_toks[open_brace][1],
        return_type=return_type,
        params=params,
        is_static=is_static,
        is_variadic=variadic,
        leading_comment=_leading_comment(src, comments, start_tok[3]),
    )
    _scan_body(src, struct_toks, open_brace, close_brace, fn)
    return fn


def _normalize_type(text: str) -> str:
    return text.replace(" *", "*").replace("* ", "*").replace("*", " *").strip()


def _parse_params(src, struct_toks, open_paren) -> tuple[list[ParsedParam], bool]:
    close = None
    depth = 0
    for j in range(open_paren, len(struct_toks)):
        kind, start, end, _ = struct_toks[j]
        if kind != PUNCT:
            continue
        t = src[start:end]
        if t == b"(":
            depth += 1
        elif t == b")":
            depth -= 1
            if depth == 0:
                close = j
                break
    if close is None:
        return [], False

    groups: list[list] = [[]]
    depth = 0
    for j in range(open_paren + 1, close):
        tok = struct_toks[j]
        t = src[tok[1]:tok[2]] if tok[0] == PUNCT else b""
        if t == b"(":
            depth += 1
        elif t == b")":
            depth -= 1
        if t == b"," and depth == 0:
            groups.append([])
        else:
            groups[-1].append(tok)

    params: list[ParsedParam] = []
    variadic = False
    for group in groups:
        if not group:
            continue
        texts = [_token_text(src, t) for t in group]
        if texts == ["void"]:
            continue
        if texts == ["..."]:
            variadic = True
            continue
        name_idx = None
        if any(t == "(" for t in texts):
            # Function-pointer parameter: name sits inside the first group.
            for j, t in enumerate(texts):
                if t == "(":
                    for k in range(j + 1, len(texts)):
                        if group[k][0] == IDENT:
                            name_idx = k
                        if texts[k] == ")":
                            break
                    break
        else:
            for j in range(len(group) - 1, -1, -1):
                if group[j][0] == IDENT and texts[j] not in C_KEYWORDS:
                    # Skip array extents: ident immediately inside [ ]
                    if j > 0 and texts[j - 1] == "[":
                        continue
                    name_idx = j
                    break
        if name_idx is None:
            params.append(ParsedParam(name="", type_text=_normalize_type(" ".join(texts))))
        else:
            type_text = " ".join(texts[:name_idx] + texts[name_idx + 1:])
            params.append(
                ParsedParam(name=texts[name_idx], type_text=_normalize_type(type_text))
            )
    return params, variadic


def _leading_comment(src, comments, decl_line) -> str | None:
    """The contiguous comment run ending on the line directly above the decl."""
    run: list[tuple[int, bytes]] = []  # (end_line, text)
    for _kind, start, end, line in comments:
        end_line = line + src[start:end].count(b"\n")
        if end_line >= decl_line:
            break
        if run and line > run[-1][0] + 1:
            run = []
        run.append((end_line, src[start:end]))
    if run and run[-1][0] == decl_line - 1:
        return b"\n".join(text for _, text in run).decode("utf-8", "replace")
    return None


def _scan_body(src, struct_toks, open_brace, close_brace, fn: ParsedFunction):
    decisions = 0
    calls: list[ParsedCall] = []
    for j in range(open_brace + 1, close_brace):
        kind, start, end, line = struct_toks[j]
        text = src[start:end]
        if kind == IDENT:
            ident = text.decode("utf-8", "replace")
            if ident in DECISION_KEYWORDS:
                decisions += 1
                continue
            if ident in C_KEYWORDS:
                continue
            nxt = struct_toks[j + 1] if j + 1 < close_brace + 1 else None
            if nxt and nxt[0] == PUNCT and src[nxt[1]:nxt[2]] == b"(":
                prev = struct_toks[j - 1]
                prev_text = src[prev[1]:prev[2]] if prev[0] == PUNCT else b""
                if prev_text in (b".", b"->"):
                    calls.append(ParsedCall(ident, start, line, "member"))
                else:
                    calls.append(ParsedCall(ident, start, line, "name"))
        elif kind == PUNCT:
            if text in DECISION_OPERATORS:
                decisions += 1
            elif text == b"(":
                # (*fp)(args): a call through an explicitly dereferenced pointer.
                prev = struct_toks[j - 1]
                if prev[0] == PUNCT and src[prev[1]:prev[2]] == b")":
                    inner_open = _match_paren_back(struct_toks, j - 1, src)
                    if inner_open is not None and inner_open > open_brace:
                        first = struct_toks[inner_open + 1]
                        if first[0] == PUNCT and src[first[1]:first[2]] == b"*":
                            name = "<indirect>"
                            for k in range(inner_open + 1, j - 1):
                                if struct_toks[k][0] == IDENT:
                                    name = _token_text(src, struct_toks[k])
                                    break
                            calls.append(ParsedCall(name, start, line, "deref"))
    fn.decision_points = decisions
    fn.calls = calls
