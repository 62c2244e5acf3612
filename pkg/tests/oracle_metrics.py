"""Independent brute-force metrics oracle for the fixture corpora.

Deliberately shares no code with the package: plain text processing over a
constrained fixture style (one statement per line, K&R braces, no macros in
bodies, no decision tokens inside comments or literals).  Used to compute
the frozen expected-values table before the real implementation runs, and
re-run by tests to keep the frozen table honest.

Run as a script to print the table for a corpus root:

    python tests/oracle_metrics.py tests/fixtures/pktlib
"""

from __future__ import annotations

import json
import re
import sys
from collections import deque
from pathlib import Path

_DECISION_WORDS = re.compile(r"\b(?:if|while|for|case)\b")
_NAME_BEFORE_PAREN = re.compile(r"([A-Za-z_]\w*)\s*\(")


def _blank_comments_and_literals(text: str) -> str:
    """Replace comments and string/char contents with spaces, keeping newlines."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            j = text.find("*/", i + 2)
            j = n if j == -1 else j + 2
            out.append("".join("\n" if ch == "\n" else " " for ch in text[i:j]))
            i = j
        elif c == "/" and i + 1 < n and text[i + 1] == "/":
            j = text.find("\n", i)
            j = n if j == -1 else j
            out.append(" " * (j - i))
            i = j
        elif c in ("'", '"'):
            quote = c
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == quote or text[j] == "\n":
                    j += 1
                    break
                j += 1
            out.append(quote + " " * max(0, j - i - 2) + quote)
            i = j
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _functions_in_file(text: str) -> list[dict]:
    """Locate top-level function definitions via brace counting."""
    clean = _blank_comments_and_literals(text)
    lines = clean.split("\n")
    # Offsets of each line start for offset->line conversion.
    line_starts = [0]
    for line in lines[:-1]:
        line_starts.append(line_starts[-1] + len(line) + 1)

    def line_of(offset: int) -> int:
        lo, hi = 0, len(line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1

    functions = []
    depth = 0
    decl_anchor = 0  # offset just after the previous top-level terminator
    i = 0
    n = len(clean)
    while i < n:
        c = clean[i]
        if c == "{":
            if depth == 0:
                j = i - 1
                while j >= 0 and clean[j] in " \t\n\r":
                    j -= 1
                if j >= 0 and clean[j] == ")":
                    # Function definition: find matching close brace.
                    d = 0
                    k = i
                    while k < n:
                        if clean[k] == "{":
                            d += 1
                        elif clean[k] == "}":
                            d -= 1
                            if d == 0:
                                break
                        k += 1
                    header = clean[decl_anchor:i]
                    m = _NAME_BEFORE_PAREN.search(header)
                    body = clean[i : k + 1]
                    if m:
                        functions.append(
                            {
                                "name": m.group(1),
                                "start_line": line_of(decl_anchor + _leading_ws(header)),
                                "end_line": line_of(k),
                                "static": bool(re.search(r"\bstatic\b", header)),
                                "body": body,
                            }
                        )
                    i = k + 1
                    decl_anchor = i
                    continue
            depth += 1
        elif c == "}":
            depth = max(0, depth - 1)
            if depth == 0:
                decl_anchor = i + 1
        elif c == ";" and depth == 0:
            decl_anchor = i + 1
        elif c == "#" and (i == 0 or clean[i - 1] == "\n"):
            j = clean.find("\n", i)
            i = n if j == -1 else j
            decl_anchor = i + 1
        i += 1
    return functions


def _leading_ws(text: str) -> int:
    return len(text) - len(text.lstrip(" \t\n\r"))


def oracle_metrics(root: str | Path) -> dict[str, dict[str, int]]:
    """Compute loc/cyclomatic/internal_calls/callgraph_size per function uid."""
    root = Path(root)
    per_file: dict[str, list[dict]] = {}
    for path in sorted(root.rglob("*.c")) + sorted(root.rglob("*.h")):
        rel = str(path.relative_to(root))
        per_file[rel] = _functions_in_file(path.read_text(encoding="utf-8"))

    names: dict[str, list[tuple[str, dict]]] = {}
    for rel, fns in per_file.items():
        for fn in fns:
            names.setdefault(fn["name"], []).append((rel, fn))

    def uid_of(rel: str, fn: dict) -> str:
        if fn["static"] or len(names[fn["name"]]) > 1:
            return f"{fn['name']}@{rel}"
        return fn["name"]

    uids: dict[str, tuple[str, dict]] = {}
    for rel, fns in per_file.items():
        for fn in fns:
            uids[uid_of(rel, fn)] = (rel, fn)

    # Call sites: every NAME( occurrence inside another function's body.
    calls: dict[str, list[str]] = {u: [] for u in uids}  # caller -> callee uids
    incoming: dict[str, int] = {u: 0 for u in uids}
    for caller_uid, (rel, fn) in uids.items():
        body = fn["body"]
        for m in _NAME_BEFORE_PAREN.finditer(body):
            name = m.group(1)
            if name not in names:
                continue
            candidates = names[name]
            if len(candidates) == 1:
                callee_rel, callee_fn = candidates[0]
            else:
                same = [c for c in candidates if c[0] == rel]
                callee_rel, callee_fn = same[0] if same else sorted(candidates)[0]
            callee_uid = uid_of(callee_rel, callee_fn)
            calls[caller_uid].append(callee_uid)
            incoming[callee_uid] += 1

    result = {}
    for uid, (rel, fn) in uids.items():
        reachable = set()
        queue = deque(calls[uid])
        while queue:
            cur = queue.popleft()
            if cur in reachable or cur == uid:
                if cur == uid and cur not in reachable:
                    pass
                continue
            reachable.add(cur)
            queue.extend(calls[cur])
        reachable.discard(uid)
        decisions = len(_DECISION_WORDS.findall(fn["body"]))
        decisions += fn["body"].count("&&") + fn["body"].count("||") + fn["body"].count("?")
        result[uid] = {
            "loc": fn["end_line"] - fn["start_line"] + 1,
            "cyclomatic": decisions + 1,
            "internal_calls": incoming[uid],
            "callgraph_size": len(reachable),
        }
    return dict(sorted(result.items()))


if __name__ == "__main__":
    table = oracle_metrics(sys.argv[1])
    print(json.dumps(table, indent=2))
