"""
τ-orbits, left/right stability, semi-stable components and the stabilization
shift of a stable vertex.

A τ-chain that stops at a window-truncated vertex is treated as continuing
beyond the window; such vertices are recorded in ``*_assumed``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Set, Tuple

from ar_window.analysis.graph import cyclic_components, reachable, undirected_components
from ar_window.errors import QuiverError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class SemiStableComponent:
    side: str
    vertices: FrozenSet[int]
    acyclic: bool
    tau_periodic: bool
    infinite_beyond_window: bool


@dataclass(frozen=True)
class StabilityPartition:
    left_stable: FrozenSet[int]
    right_stable: FrozenSet[int]
    stable: FrozenSet[int]
    left_assumed: FrozenSet[int]
    right_assumed: FrozenSet[int]
    components: Tuple[SemiStableComponent, ...]


@dataclass(frozen=True)
class ShiftResult:
    shift: Optional[int]
    window_exceeded: bool


def _chain_status(q: ValuedTranslationQuiver, v: int, side: str) -> str:
    """'periodic', 'assumed' (chain leaves through the boundary) or 'unstable'"""
    step = q.tau if side == LEFT else q.tau_inverse
    seen = {v}
    current = v
    while True:
        nxt = step(current)
        if nxt is None:
            return "assumed" if q.is_boundary(current) else "unstable"
        if nxt in seen:
            return "periodic"
        seen.add(nxt)
        current = nxt


def tau_orbits(q: ValuedTranslationQuiver) -> List[FrozenSet[int]]:
    """τ-orbits ordered by their smallest vertex"""
    orbits = undirected_components(
        q.vertices,
        lambda v: [w for w in (q.tau(v), q.tau_inverse(v)) if w is not None],
    )
    return sorted(orbits, key=min)


def is_tau_periodic(q: ValuedTranslationQuiver, v: int) -> bool:
    q.require(v)
    return _chain_status(q, v, LEFT) == "periodic"


def stability(q: ValuedTranslationQuiver) -> StabilityPartition:
    left: Set[int] = set()
    right: Set[int] = set()
    left_assumed: Set[int] = set()
    right_assumed: Set[int] = set()
    periodic: Set[int] = set()

    for v in q.vertices:
        status = _chain_status(q, v, LEFT)
        if status != "unstable":
            left.add(v)
        if status == "assumed":
            left_assumed.add(v)
        if status == "periodic":
            periodic.add(v)
        status = _chain_status(q, v, RIGHT)
        if status != "unstable":
            right.add(v)
        if status == "assumed":
            right_assumed.add(v)

    def neighbours(v: int):
        return q.successors(v) + q.predecessors(v)

    components: List[SemiStableComponent] = []
    for side, members, assumed in ((LEFT, left, left_assumed), (RIGHT, right, right_assumed)):
        ordered = [v for v in q.vertices if v in members]
        for comp in sorted(undirected_components(ordered, neighbours), key=min):
            inside = sorted(comp)
            cyclic = cyclic_components(inside, lambda v: [w for w in q.successors(v) if w in comp])
            components.append(
                SemiStableComponent(
                    side=side,
                    vertices=comp,
                    acyclic=not cyclic,
                    tau_periodic=bool(comp & periodic),
                    infinite_beyond_window=bool(comp & (assumed | q.boundary)),
                )
            )

    return StabilityPartition(
        left_stable=frozenset(left),
        right_stable=frozenset(right),
        stable=frozenset(left & right),
        left_assumed=frozenset(left_assumed),
        right_assumed=frozenset(right_assumed),
        components=tuple(components),
    )


def stabilization_shift(
    q: ValuedTranslationQuiver,
    x: int,
    direction: str = LEFT,
    partition: Optional[StabilityPartition] = None,
) -> ShiftResult:
    """
    Least s >= 0 such that every predecessor of τ^s x is left stable
    (``direction='right'``: every successor of τ^{-s} x is right stable).
    """
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    q.require(x)
    if is_tau_periodic(q, x):
        raise QuiverError(f"Vertex {x} is tau-periodic")
    partition = partition or stability(q)
    stable = partition.left_stable if direction == LEFT else partition.right_stable
    if x not in stable:
        raise QuiverError(f"Vertex {x} is not {direction} stable")

    step = q.tau if direction == LEFT else q.tau_inverse
    neighbours = q.predecessors if direction == LEFT else q.successors
    current: Optional[int] = x
    s = 0
    while current is not None:
        around = reachable([current], neighbours, include_starts=False)
        if around <= stable:
            return ShiftResult(s, False)
        current = step(current)
        s += 1
    return ShiftResult(None, True)


def not_left_stable_predecessors(q: ValuedTranslationQuiver, m: int) -> FrozenSet[int]:
    q.require(m)
    partition = stability(q)
    preds = reachable([m], q.predecessors, include_starts=False)
    return frozenset(preds - partition.left_stable)
