"""Call graph over indexed functions.

Nodes are function uids (plain name for unique exported functions,
``name@relpath`` for file-local or colliding ones).  Edges keep their call
site and a resolution note; calls through pointers or struct members are
retained but never traversed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

RESOLUTION_DIRECT = "direct"
RESOLUTION_POINTER = "via-pointer-unresolved"


@dataclass(frozen=True)
class CallEdge:
    caller: str
    callee: str           # uid when resolved, bare identifier otherwise
    file: str
    line: int
    offset: int
    resolution: str       # direct | via-pointer-unresolved
    external: bool        # callee not defined in the corpus


@dataclass
class ReachableResult:
    """Breadth-first reachable set, root excluded, each function once."""

    order: list[str]
    unresolved_skipped: int = 0

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)


@dataclass
class CallGraph:
    nodes: list[str] = field(default_factory=list)
    edges: list[CallEdge] = field(default_factory=list)

    def __post_init__(self):
        self._out: dict[str, list[CallEdge]] = {}
        self._in: dict[str, list[CallEdge]] = {}
        for edge in self.edges:
            self._out.setdefault(edge.caller, []).append(edge)
            self._in.setdefault(edge.callee, []).append(edge)
        for lst in self._out.values():
            lst.sort(key=lambda e: (e.file, e.offset))
        for lst in self._in.values():
            lst.sort(key=lambda e: (e.file, e.offset))

    def callees_of(self, uid: str) -> list[CallEdge]:
        return list(self._out.get(uid, []))

    def callers_of(self, uid: str) -> list[CallEdge]:
        return list(self._in.get(uid, []))

    def call_sites_of(self, uid: str) -> list[tuple[str, int]]:
        """Distinct (file, offset) locations from which uid is invoked."""
        seen = []
        for edge in self._in.get(uid, []):
            loc = (edge.file, edge.offset)
            if loc not in seen:
                seen.append(loc)
        return seen

    def reachable(self, root: str, max_depth: int | None = None) -> ReachableResult:
        """BFS over resolved internal edges; pointer edges counted, not walked."""
        order: list[str] = []
        skipped = 0
        visited = {root}
        queue: deque[tuple[str, int]] = deque([(root, 0)])
        while queue:
            uid, depth = queue.popleft()
            if max_depth is not None and depth >= max_depth:
                continue
            for edge in self._out.get(uid, []):
                if edge.resolution != RESOLUTION_DIRECT or edge.external:
                    if edge.resolution != RESOLUTION_DIRECT:
                        skipped += 1
                    continue
                if edge.callee in visited:
                    continue
                visited.add(edge.callee)
                order.append(edge.callee)
                queue.append((edge.callee, depth + 1))
        return ReachableResult(order=order, unresolved_skipped=skipped)
