"""Codebase index: the queryable knowledge base behind every later stage.

Construction is single-writer; the finished index is immutable by
convention (queries never mutate) and safe to share across threads.  The
serialized form is a single versioned JSON document whose bytes are stable
for a fixed corpus, so reruns can be compared byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..build import BuildConfig
from ..errors import AmbiguousFunctionError, IndexError_
from .callgraph import (
    RESOLUTION_DIRECT,
    RESOLUTION_POINTER,
    CallEdge,
    CallGraph,
    ReachableResult,
)
from .cparse import ParsedFunction, parse_source

INDEX_VERSION = 1

# Types resolvable without a corpus definition.
SYSTEM_TYPES = frozenset(
    """
    void char short int long float double signed unsigned _Bool
    size_t ssize_t ptrdiff_t wchar_t intptr_t uintptr_t intmax_t uintmax_t
    int8_t int16_t int32_t int64_t uint8_t uint16_t uint32_t uint64_t
    FILE va_list time_t off_t mode_t pid_t bool
    """.split()
)


@dataclass
class Param:
    name: str
    type_text: str

    def to_dict(self):
        return {"name": self.name, "type": self.type_text}


@dataclass
class FunctionRecord:
    name: str
    uid: str
    file: str                  # path relative to the corpus root
    start_line: int
    end_line: int
    start_offset: int
    end_offset: int
    return_type: str
    params: list[Param]
    body_text: str
    scope: str                 # exported | file-local
    declared_in_headers: list[str]
    leading_comment: str | None = None
    preprocessed_body: str | None = None
    is_variadic: bool = False
    decision_points: int = 0

    @property
    def signature(self) -> str:
        rendered = ", ".join(
            f"{p.type_text} {p.name}".strip() for p in self.params
        ) or "void"
        return f"{self.return_type} {self.name}({rendered})"

    @property
    def line_count(self) -> int:
        return self.end_line - self.start_line + 1

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "uid": self.uid,
            "file": self.file,
            "start_line": self.start_line,
            "end_line": self.end_line,
            "start_offset": self.start_offset,
            "end_offset": self.end_offset,
            "return_type": self.return_type,
            "params": [p.to_dict() for p in self.params],
            "body_text": self.body_text,
            "scope": self.scope,
            "declared_in_headers": list(self.declared_in_headers),
            "leading_comment": self.leading_comment,
            "preprocessed_body": self.preprocessed_body,
            "is_variadic": self.is_variadic,
            "decision_points": self.decision_points,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FunctionRecord":
        return cls(
            name=data["name"],
            uid=data["uid"],
            file=data["file"],
            start_line=data["start_line"],
            end_line=data["end_line"],
            start_offset=data["start_offset"],
            end_offset=data["end_offset"],
            return_type=data["return_type"],
            params=[Param(p["name"], p["type"]) for p in data["params"]],
            body_text=data["body_text"],
            scope=data["scope"],
            declared_in_headers=list(data["declared_in_headers"]),
            leading_comment=data.get("leading_comment"),
            preprocessed_body=data.get("preprocessed_body"),
            is_variadic=data.get("is_variadic", False),
            decision_points=data.get("decision_points", 0),
        )


@dataclass
class TypeRecord:
    type_name: str
    defining_header: str       # corpus path, or "<system>" for primitives
    definition_text: str
    kind: str                  # struct | enum | union | typedef | primitive-alias
    system_header: bool = False

    def to_dict(self) -> dict:
        return {
            "type_name": self.type_name,
            "defining_header": self.defining_header,
            "definition_text": self.definition_text,
            "kind": self.kind,
            "system_header": self.system_header,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TypeRecord":
        return cls(
            type_name=data["type_name"],
            defining_header=data["defining_header"],
            definition_text=data["definition_text"],
            kind=data["kind"],
            system_header=data.get("system_header", False),
        )


@dataclass
class CodeIndex:
    root: Path
    functions: dict[str, FunctionRecord]            # uid -> record
    by_name: dict[str, list[str]]                   # name -> uids
    call_graph: CallGraph
    types: dict[str, TypeRecord]
    header_contents: dict[str, str]
    includes: dict[str, list[str]]                  # file -> included names
    build_config: BuildConfig
    diagnostics: list[str] = field(default_factory=list)

    def function(self, uid: str) -> FunctionRecord | None:
        return self.functions.get(uid)

    def source_path(self, record: FunctionRecord) -> Path:
        return self.root / record.file


def build_index(source_root: str | Path, build_config: BuildConfig | None = None) -> CodeIndex:
    root = Path(source_root)
    if not root.is_dir():
        raise IndexError_(f"source root unreadable or not a directory: {root}")
    root = root.resolve()
    if build_config is None:
        build_config = BuildConfig.discover(root)

    c_files = sorted(p for p in root.rglob("*.c") if p.is_file())
    h_files = sorted(p for p in root.rglob("*.h") if p.is_file())
    if not c_files:
        raise IndexError_(f"no translation units under {root}")

    diagnostics: list[str] = []
    parsed: dict[str, tuple[bytes, object]] = {}   # relpath -> (source, ParsedFile)
    for path in c_files + h_files:
        rel = str(path.relative_to(root))
        try:
            src = path.read_bytes()
            parsed[rel] = (src, parse_source(src))
        except Exception as exc:  # single bad file never kills the index
            diagnostics.append(f"{rel}: parse failed: {exc}")
            continue
        parse_diags = parsed[rel][1].diagnostics
        diagnostics.extend(f"{rel}: {d}" for d in parse_diags)

    header_set = {str(p.relative_to(root)) for p in h_files}
    prototype_map: dict[str, list[str]] = {}
    for rel, (_src, pf) in parsed.items():
        if rel in header_set:
            for proto in pf.prototypes:
                prototype_map.setdefault(proto.name, []).append(rel)

    # First pass: collect definitions and decide uids.
    definitions: list[tuple[str, bytes, ParsedFunction]] = []
    for rel in sorted(parsed):
        src, pf = parsed[rel]
        for fn in pf.functions:
            definitions.append((rel, src, fn))
    name_counts: dict[str, int] = {}
    for rel, _src, fn in definitions:
        name_counts[fn.name] = name_counts.get(fn.name, 0) + 1

    functions: dict[str, FunctionRecord] = {}
    by_name: dict[str, list[str]] = {}
    fn_payload: dict[str, ParsedFunction] = {}
    for rel, src, fn in definitions:
        if fn.is_static or name_counts[fn.name] > 1:
            uid = f"{fn.name}@{rel}"
            if not fn.is_static:
                diagnostics.append(
                    f"{rel}: duplicate exported definition of {fn.name}; qualified as {uid}"
                )
        else:
            uid = fn.name
        record = FunctionRecord(
            name=fn.name,
            uid=uid,
            file=rel,
            start_line=fn.start_line,
            end_line=fn.end_line,
            start_offset=fn.start,
            end_offset=fn.end,
            return_type=fn.return_type,
            params=[Param(p.name, p.type_text) for p in fn.params],
            body_text=src[fn.start:fn.end].decode("utf-8", "replace"),
            scope="file-local" if fn.is_static else "exported",
            declared_in_headers=sorted(prototype_map.get(fn.name, [])),
            leading_comment=fn.leading_comment,
            is_variadic=fn.is_variadic,
            decision_points=fn.decision_points,
        )
        functions[uid] = record
        by_name.setdefault(fn.name, []).append(uid)
        fn_payload[uid] = fn

    if build_config.store_preprocessed:
        for uid, record in functions.items():
            pre = build_config.preprocess(root / record.file)
            if pre is None:
                continue
            body = _find_preprocessed_body(pre.encode(), record.name)
            if body is not None:
                record.preprocessed_body = body

    # Second pass: resolve call edges.
    edges: list[CallEdge] = []
    for uid, record in sorted(functions.items()):
        fn = fn_payload[uid]
        for call in fn.calls:
            if call.syntax == "name":
                callee_uid, external = _resolve_callee(
                    call.callee, record.file, by_name, functions
                )
                edges.append(
                    CallEdge(
                        caller=uid,
                        callee=callee_uid,
                        file=record.file,
                        line=call.line,
                        offset=call.offset,
                        resolution=RESOLUTION_DIRECT,
                        external=external,
                    )
                )
            else:
                edges.append(
                    CallEdge(
                        caller=uid,
                        callee=call.callee,
                        file=record.file,
                        line=call.line,
                        offset=call.offset,
                        resolution=RESOLUTION_POINTER,
                        external=call.callee not in by_name,
                    )
                )
    edges.sort(key=lambda e: (e.caller, e.file, e.offset))
    graph = CallGraph(nodes=sorted(functions), edges=edges)

    types: dict[str, TypeRecord] = {}
    for rel in sorted(parsed):
        src, pf = parsed[rel]
        for pt in pf.types:
            if not pt.name:
                continue
            if pt.name in types:
                continue
            types[pt.name] = TypeRecord(
                type_name=pt.name,
                defining_header=rel,
                definition_text=src[pt.start:pt.end].decode("utf-8", "replace"),
                kind=pt.kind,
            )

    header_contents = {
        rel: parsed[rel][0].decode("utf-8", "replace")
        for rel in sorted(header_set)
        if rel in parsed
    }
    includes = {rel: list(pf.includes) for rel, (_s, pf) in sorted(parsed.items())}

    return CodeIndex(
        root=root,
        functions=functions,
        by_name=by_name,
        call_graph=graph,
        types=types,
        header_contents=header_contents,
        includes=includes,
        build_config=build_config,
        diagnostics=diagnostics,
    )


def _resolve_callee(name, caller_file, by_name, functions):
    uids = by_name.get(name, [])
    if not uids:
        return name, True
    if len(uids) == 1:
        return uids[0], False
    same_file = [u for u in uids if functions[u].file == caller_file]
    if same_file:
        return same_file[0], False
    exported = [u for u in uids if functions[u].scope == "exported"]
    if len(exported) == 1:
        return exported[0], False
    return sorted(uids)[0], False


def _find_preprocessed_body(pre_src: bytes, name: str) -> str | None:
    try:
        pf = parse_source(pre_src)
    except Exception:
        return None
    for fn in pf.functions:
        if fn.name == name:
            return pre_src[fn.start:fn.end].decode("utf-8", "replace")
    return None


def lookup_function(index: CodeIndex, name: str, file: str | None = None) -> FunctionRecord | None:
    """Exact-name lookup; file-local duplicates need the file qualifier."""
    if "@" in name and name in index.functions:
        return index.functions[name]
    uids = index.by_name.get(name, [])
    if not uids:
        return None
    if file is not None:
        for uid in uids:
            if index.functions[uid].file == file:
                return index.functions[uid]
        return None
    if len(uids) > 1:
        raise AmbiguousFunctionError(name, sorted(uids))
    return index.functions[uids[0]]


def reachable_set(
    index: CodeIndex, root: str, max_depth: int | None = None
) -> ReachableResult:
    """Functions reachable from root (root excluded), breadth-first."""
    record = lookup_function(index, root) if root not in index.functions else index.functions[root]
    if record is None:
        raise KeyError(f"unknown function: {root}")
    return index.call_graph.reachable(record.uid, max_depth)


def resolve_type(index: CodeIndex, type_name: str) -> TypeRecord | None:
    if type_name in index.types:
        return index.types[type_name]
    bare = type_name.split()[-1] if type_name.split() else type_name
    if bare in index.types:
        return index.types[bare]
    if bare in SYSTEM_TYPES or type_name in SYSTEM_TYPES:
        return TypeRecord(
            type_name=type_name,
            defining_header="<system>",
            definition_text=type_name,
            kind="primitive-alias",
            system_header=True,
        )
    return None


def save_index(index: CodeIndex, path: str | Path) -> None:
    doc = {
        "version": INDEX_VERSION,
        "root": str(index.root),
        "functions": [index.functions[u].to_dict() for u in sorted(index.functions)],
        "types": [index.types[t].to_dict() for t in sorted(index.types)],
        "edges": [
            {
                "caller": e.caller,
                "callee": e.callee,
                "file": e.file,
                "line": e.line,
                "offset": e.offset,
                "resolution": e.resolution,
                "external": e.external,
            }
            for e in index.call_graph.edges
        ],
        "header_contents": dict(sorted(index.header_contents.items())),
        "includes": dict(sorted(index.includes.items())),
        "build_config": index.build_config.to_dict(),
        "diagnostics": list(index.diagnostics),
    }
    text = json.dumps(doc, indent=1, sort_keys=True)
    Path(path).write_text(text, encoding="utf-8")


def load_index(path: str | Path) -> CodeIndex:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("version") != INDEX_VERSION:
        raise IndexError_(f"unsupported index version: {doc.get('version')}")
    functions = {}
    by_name: dict[str, list[str]] = {}
    for item in doc["functions"]:
        record = FunctionRecord.from_dict(item)
        functions[record.uid] = record
        by_name.setdefault(record.name, []).append(record.uid)
    edges = [
        CallEdge(
            caller=e["caller"],
            callee=e["callee"],
            file=e["file"],
            line=e["line"],
            offset=e["offset"],
            resolution=e["resolution"],
            external=e["external"],
        )
        for e in doc["edges"]
    ]
    types = {t["type_name"]: TypeRecord.from_dict(t) for t in doc["types"]}
    return CodeIndex(
        root=Path(doc["root"]),
        functions=functions,
        by_name=by_name,
        call_graph=CallGraph(nodes=sorted(functions), edges=edges),
        types=types,
        header_contents=doc["header_contents"],
        includes=doc["includes"],
        build_config=BuildConfig.from_dict(doc["build_config"]),
        diagnostics=doc["diagnostics"],
    )
