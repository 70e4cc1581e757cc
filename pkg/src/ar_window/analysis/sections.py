"""
Subquiver predicates: convexity, closure, sections and cuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, List, Optional, Set, Tuple

from ar_window.analysis.graph import cyclic_components, reachable, undirected_components
from ar_window.analysis.stability import tau_orbits
from ar_window.errors import QuiverError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver


@dataclass(frozen=True)
class SubquiverCheck:
    ok: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _as_set(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> FrozenSet[int]:
    members = frozenset(sigma)
    if not members:
        raise QuiverError("Subquiver must be non-empty")
    for v in members:
        q.require(v)
    return members


def _connected(q: ValuedTranslationQuiver, members: FrozenSet[int]) -> bool:
    parts = undirected_components(
        sorted(members), lambda v: q.successors(v) + q.predecessors(v)
    )
    return len(parts) == 1


def convexity_witness(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> Optional[int]:
    """A vertex outside sigma lying on a path between two vertices of sigma"""
    members = _as_set(q, sigma)
    below = reachable(members, q.successors, include_starts=False)
    above = reachable(members, q.predecessors, include_starts=False)
    outside = sorted((below & above) - members)
    return outside[0] if outside else None


def is_convex(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> bool:
    return convexity_witness(q, sigma) is None


def predecessor_closure(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> FrozenSet[int]:
    return frozenset(reachable(_as_set(q, sigma), q.predecessors))


def successor_closure(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> FrozenSet[int]:
    return frozenset(reachable(_as_set(q, sigma), q.successors))


def is_predecessor_closed(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> bool:
    members = _as_set(q, sigma)
    return predecessor_closure(q, members) == members


def is_successor_closed(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> bool:
    members = _as_set(q, sigma)
    return successor_closure(q, members) == members


def is_section(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> SubquiverCheck:
    """Connected, acyclic, convex and meeting every τ-orbit exactly once"""
    members = _as_set(q, sigma)
    if not _connected(q, members):
        return SubquiverCheck(False, "subquiver is not connected")
    cycles = cyclic_components(
        sorted(members), lambda v: [w for w in q.successors(v) if w in members]
    )
    if cycles:
        return SubquiverCheck(False, f"oriented cycle through {sorted(cycles[0])}")
    outside = convexity_witness(q, members)
    if outside is not None:
        return SubquiverCheck(False, f"not convex: path passes through {outside}")
    for orbit in tau_orbits(q):
        hits = sorted(orbit & members)
        if len(hits) != 1:
            return SubquiverCheck(
                False, f"tau-orbit of {min(orbit)} meets the subquiver {len(hits)} times"
            )
    return SubquiverCheck(True)


def is_cut(q: ValuedTranslationQuiver, sigma: Iterable[int]) -> SubquiverCheck:
    """
    For a→b with a in Σ exactly one of b, τb lies in Σ; for a→b with b in Σ
    exactly one of a, τ⁻a lies in Σ.
    """
    members = _as_set(q, sigma)
    if not _connected(q, members):
        return SubquiverCheck(False, "subquiver is not connected")
    for (a, b) in sorted(q.arrows):
        if a in members:
            hits = (b in members) + (q.tau(b) in members)
            if hits != 1:
                return SubquiverCheck(
                    False, f"arrow {a}->{b}: {hits} of b, tau(b) lie in the subquiver"
                )
        if b in members:
            hits = (a in members) + (q.tau_inverse(a) in members)
            if hits != 1:
                return SubquiverCheck(
                    False, f"arrow {a}->{b}: {hits} of a, tau^-1(a) lie in the subquiver"
                )
    return SubquiverCheck(True)


def is_cut_with_sincerity_hook(
    q: ValuedTranslationQuiver,
    sigma: Iterable[int],
    sincere: Callable[[FrozenSet[int]], bool],
) -> SubquiverCheck:
    members = _as_set(q, sigma)
    cut = is_cut(q, members)
    if not cut:
        return cut
    if not sincere(members):
        return SubquiverCheck(False, "subquiver is not sincere")
    return SubquiverCheck(True)


def sectional_predecessors(q: ValuedTranslationQuiver, s: int) -> FrozenSet[int]:
    """Starting points of sectional paths ending in s (s included)"""
    q.require(s)
    cap = len(q)
    starts: Set[int] = {s}
    stack: List[Tuple[int, ...]] = [(s,)]
    while stack:
        path = stack.pop()
        if len(path) - 1 >= cap:
            continue
        head = path[0]
        for w in q.predecessors(head):
            if len(path) >= 2 and q.tau(path[1]) == w:
                continue
            starts.add(w)
            stack.append((w,) + path)
    return frozenset(starts)


def section_with_unique_sink(
    q: ValuedTranslationQuiver,
) -> Optional[Tuple[FrozenSet[int], int]]:
    """
    First vertex s (by id) whose sectional-predecessor cone is a section with s
    as its only sink.
    """
    for s in q.vertices:
        cone = sectional_predecessors(q, s)
        if not is_section(q, cone):
            continue
        sinks = [v for v in cone if not any(w in cone for w in q.successors(v))]
        if sinks == [s]:
            return cone, s
    return None


def translate_set(q: ValuedTranslationQuiver, sigma: Iterable[int], k: int) -> FrozenSet[int]:
    """τ^k applied vertex-wise (negative k for τ⁻)"""
    result = set()
    for v in _as_set(q, sigma):
        w = q.tau_power(v, k)
        if w is None:
            raise QuiverError(f"tau^{k} is not defined at {v} inside the window")
        result.add(w)
    return frozenset(result)
