"""
Generators for the standard infinite translation quivers, cut to finite windows:
ℤΔ for a finite connected acyclic quiver Δ, and stable tubes ℤA∞/⟨τ^r⟩.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ar_window.errors import GeneratorError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, build


@dataclass(frozen=True)
class Delta:
    """A finite quiver used as the section of ℤΔ; vertices keep their order"""

    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str], ...]

    def check(self):
        names = set(self.vertices)
        if len(names) != len(self.vertices):
            raise GeneratorError("Delta has duplicate vertices")
        if not self.vertices:
            raise GeneratorError("Delta must have at least one vertex")
        for x, y in self.arrows:
            if x not in names or y not in names:
                raise GeneratorError(f"Delta arrow {x}->{y} has an unknown endpoint")
            if x == y:
                raise GeneratorError(f"Delta has a loop at {x}")

        # connected (undirected)
        adjacency: Dict[str, set] = {v: set() for v in self.vertices}
        for x, y in self.arrows:
            adjacency[x].add(y)
            adjacency[y].add(x)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.vertices):
            raise GeneratorError("Delta is not connected")

        # acyclic: Kahn
        indegree = {v: 0 for v in self.vertices}
        for _, y in self.arrows:
            indegree[y] += 1
        queue = [v for v in self.vertices if indegree[v] == 0]
        removed = 0
        while queue:
            v = queue.pop()
            removed += 1
            for x, y in self.arrows:
                if x == v:
                    indegree[y] -= 1
                    if indegree[y] == 0:
                        queue.append(y)
        if removed != len(self.vertices):
            raise GeneratorError("Delta has an oriented cycle")


def _tree_edges(kind: str, n: int) -> List[Tuple[int, int]]:
    if kind == "A":
        if n < 1:
            raise GeneratorError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        if n < 4:
            raise GeneratorError("D_n needs n >= 4")
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise GeneratorError("E_n needs n in 6, 7, 8")
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise GeneratorError(f"Unknown Dynkin type {kind}")


def dynkin(name: str, orientation: Sequence[bool] = ()) -> Delta:
    """
    Dynkin quiver ``A<n>``, ``D<n>`` or ``E<n>``. Edges are oriented from the
    smaller to the larger label unless ``orientation[k]`` is False for edge k.
    """
    match = re.fullmatch(r"([ADE])(\d+)", name.strip().upper())
    if not match:
        raise GeneratorError(f"Not a Dynkin type: {name!r}")
    kind, n = match.group(1), int(match.group(2))
    edges = _tree_edges(kind, n)
    arrows = []
    for k, (i, j) in enumerate(edges):
        forward = orientation[k] if k < len(orientation) else True
        arrows.append((f"x{i}", f"x{j}") if forward else (f"x{j}", f"x{i}"))
    delta = Delta(tuple(f"x{i}" for i in range(1, n + 1)), tuple(arrows))
    delta.check()
    return delta


def parse_delta(text: str) -> Delta:
    """``A3``-style names, or explicit arrows ``a->b,b->c`` (isolated vertex: ``a``)"""
    text = text.strip()
    if re.fullmatch(r"[ADEade]\d+", text):
        return dynkin(text)
    vertices: List[str] = []
    arrows: List[Tuple[str, str]] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        names = [s.strip() for s in part.split("->")]
        if any(not s for s in names):
            raise GeneratorError(f"Malformed delta fragment: {part!r}")
        for s in names:
            if s not in vertices:
                vertices.append(s)
        arrows.extend(zip(names, names[1:]))
    delta = Delta(tuple(vertices), tuple(arrows))
    delta.check()
    return delta


def z_delta_window(delta: Delta, n_min: int, n_max: int) -> ValuedTranslationQuiver:
    """
    Window of ℤΔ on layers ``n_min..n_max``: vertices (n, x), arrows
    (n,x)→(n,y) for x→y in Δ and (n,y)→(n+1,x), τ(n+1,x) = (n,x).
    The two outermost layers are marked truncated.
    """
    delta.check()
    if n_min > n_max:
        raise GeneratorError(f"Empty window [{n_min}, {n_max}]")

    ids: Dict[Tuple[int, str], int] = {}
    vertices = []
    for n in range(n_min, n_max + 1):
        for x in delta.vertices:
            ids[(n, x)] = len(ids)
            vertices.append((ids[(n, x)], f"({n},{x})"))

    arrows = []
    for n in range(n_min, n_max + 1):
        for x, y in delta.arrows:
            arrows.append((ids[(n, x)], ids[(n, y)]))
            if n + 1 <= n_max:
                arrows.append((ids[(n, y)], ids[(n + 1, x)]))

    tau = [
        (ids[(n, x)], ids[(n - 1, x)])
        for n in range(n_min + 1, n_max + 1)
        for x in delta.vertices
    ]
    boundary = [ids[(n, x)] for n in {n_min, n_max} for x in delta.vertices]
    return build(vertices, arrows, tau, boundary)


def stable_tube(rank: int, depth: int) -> ValuedTranslationQuiver:
    """
    Stable tube of rank ``r`` cut at level ``d``: vertices (i, k) with i in ℤ/r
    and 1 <= k <= d, arrows (i,k)→(i,k+1) and (i,k+1)→(i+1,k), τ(i,k) = (i-1,k).
    The top level is truncated.
    """
    if rank < 1 or depth < 1:
        raise GeneratorError("Tube rank and depth must be positive")

    ids: Dict[Tuple[int, int], int] = {}
    vertices = []
    for k in range(1, depth + 1):
        for i in range(rank):
            ids[(i, k)] = len(ids)
            vertices.append((ids[(i, k)], f"[{i}:{k}]"))

    arrows = []
    for k in range(1, depth):
        for i in range(rank):
            arrows.append((ids[(i, k)], ids[(i, k + 1)]))
            arrows.append((ids[(i, k + 1)], ids[((i + 1) % rank, k)]))

    tau = [(ids[(i, k)], ids[((i - 1) % rank, k)]) for (i, k) in ids]
    boundary = [ids[(i, depth)] for i in range(rank)]
    return build(vertices, arrows, tau, boundary)
