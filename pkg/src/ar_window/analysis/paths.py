"""
Paths in a translation quiver: enumeration, intervals and sectional paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from ar_window.analysis.graph import reachable
from ar_window.errors import QuiverError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver


@dataclass(frozen=True, order=True)
class PathInQuiver:
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def check(self, q: ValuedTranslationQuiver) -> "PathInQuiver":
        if not self.vertices:
            raise QuiverError("A path needs at least one vertex")
        for v in self.vertices:
            q.require(v)
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not q.has_arrow(a, b):
                raise QuiverError(f"{a}->{b} is not an arrow")
        return self

    def __str__(self) -> str:
        return "->".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class IntervalResult:
    """Vertices on some a⇝b path; ``complete`` is False when the window may hide more"""

    vertices: FrozenSet[int]
    complete: bool


@dataclass(frozen=True)
class SectionalSearch:
    paths: Tuple[PathInQuiver, ...]
    cap: int
    cap_hit: bool


def enumerate_paths(
    q: ValuedTranslationQuiver, a: int, b: int, max_len: int
) -> List[PathInQuiver]:
    """All paths a⇝b of length <= max_len, in lexicographic order of vertex ids"""
    q.require(a)
    q.require(b)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")

    found: List[PathInQuiver] = []
    stack: List[Tuple[int, ...]] = [(a,)]
    while stack:
        path = stack.pop()
        if path[-1] == b:
            found.append(PathInQuiver(path))
        if len(path) - 1 < max_len:
            for w in reversed(q.successors(path[-1])):
                stack.append(path + (w,))
    return sorted(found)


def count_paths(q: ValuedTranslationQuiver, a: int, b: int, max_len: int) -> int:
    """Number of a⇝b paths of length <= max_len, by dynamic programming over lengths"""
    q.require(a)
    q.require(b)
    current = {a: 1}
    total = 1 if a == b else 0
    for _ in range(max_len):
        nxt: dict = {}
        for v, count in current.items():
            for w in q.successors(v):
                nxt[w] = nxt.get(w, 0) + count
        current = nxt
        total += current.get(b, 0)
        if not current:
            break
    return total


def interval(q: ValuedTranslationQuiver, a: int, b: int) -> IntervalResult:
    """
    [a, b]: vertices lying on some path a⇝b. Incomplete when a path could leave
    the window through a boundary vertex reachable from a and come back through
    a boundary vertex from which b is reachable.
    """
    q.require(a)
    q.require(b)
    down = reachable([a], q.successors)
    up = reachable([b], q.predecessors)
    vertices = frozenset(down & up)
    exits = {u for u in down if q.is_boundary(u)}
    entries = {w for w in up if q.is_boundary(w)}
    return IntervalResult(vertices, complete=not (exits and entries))


def is_sectional(q: ValuedTranslationQuiver, path: PathInQuiver) -> bool:
    """No 0 < i < n with v_{i-1} = τ v_{i+1}"""
    path.check(q)
    v = path.vertices
    for i in range(1, len(v) - 1):
        if q.tau(v[i + 1]) == v[i - 1]:
            return False
    return True


def sectional_paths(
    q: ValuedTranslationQuiver, a: int, b: int, cap: Optional[int] = None
) -> SectionalSearch:
    """
    All sectional paths a⇝b of length <= cap (default: number of vertices).
    ``cap_hit`` reports a sectional path that reached the cap and could be extended.
    """
    q.require(a)
    q.require(b)
    cap = len(q) if cap is None else cap

    found: List[PathInQuiver] = []
    cap_hit = False
    stack: List[Tuple[int, ...]] = [(a,)]
    while stack:
        path = stack.pop()
        if path[-1] == b:
            found.append(PathInQuiver(path))
        extensions = [
            w
            for w in q.successors(path[-1])
            if len(path) < 2 or q.tau(w) != path[-2]
        ]
        if len(path) - 1 >= cap:
            if extensions:
                cap_hit = True
            continue
        for w in reversed(extensions):
            stack.append(path + (w,))
    return SectionalSearch(tuple(sorted(found)), cap, cap_hit)
