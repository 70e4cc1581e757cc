"""
Core, oriented cycles and the four-condition report for components with
finitely many cycles.

Conditions:
    (1) almost acyclic
    (2) interval-finite
    (3) finite core containing every oriented cycle
    (4) no infinite semi-stable component carries an oriented cycle

On a quiver without truncated vertices every verdict is decided. On a window
a verdict is FALSE only when the window refutes it and UNKNOWN when a
truncated vertex could change the answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Set

from ar_window.analysis.graph import cyclic_components, reachable
from ar_window.analysis.paths import interval
from ar_window.analysis.stability import StabilityPartition, stability, tau_orbits
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver
from ar_window.utils.logger import logger


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @property
    def decided(self) -> bool:
        return self is not Verdict.UNKNOWN


@dataclass(frozen=True)
class CoreResult:
    vertices: FrozenSet[int]
    unknown: FrozenSet[int]


@dataclass
class TheoremReport:
    almost_acyclic: Verdict
    interval_finite: Verdict
    finite_core_with_cycles: Verdict
    no_cyclic_infinite_semistable: Verdict
    consistent: bool
    mode: str
    core: FrozenSet[int] = frozenset()
    core_unknown: FrozenSet[int] = frozenset()
    cycle_vertices: FrozenSet[int] = frozenset()
    orbit_count: int = 0
    acyclic_outside_core: bool = True
    notes: List[str] = field(default_factory=list)

    @property
    def verdicts(self) -> Dict[str, Verdict]:
        return {
            "almost_acyclic": self.almost_acyclic,
            "interval_finite": self.interval_finite,
            "finite_core_with_cycles": self.finite_core_with_cycles,
            "no_cyclic_infinite_semistable": self.no_cyclic_infinite_semistable,
        }

    def as_dict(self) -> Dict[str, object]:
        return {
            "verdicts": {k: v.value for k, v in self.verdicts.items()},
            "consistent": self.consistent,
            "mode": self.mode,
            "core": sorted(self.core),
            "core_unknown": sorted(self.core_unknown),
            "cycle_vertices": sorted(self.cycle_vertices),
            "orbit_count": self.orbit_count,
            "acyclic_outside_core": self.acyclic_outside_core,
            "notes": list(self.notes),
        }


def core(q: ValuedTranslationQuiver) -> CoreResult:
    """
    Vertices on some path from a projective to an injective. ``unknown`` holds
    vertices that could join the core through a path leaving the window.
    """
    projectives = q.projectives()
    injectives = q.injectives()
    below_p = reachable(projectives, q.successors)
    above_i = reachable(injectives, q.predecessors)
    members = frozenset(below_p & above_i)

    boundary = q.boundary
    below_b = reachable(boundary, q.successors)
    above_b = reachable(boundary, q.predecessors)
    unknown = ((below_p & above_b) | (below_b & above_i)) - members
    return CoreResult(members, frozenset(unknown))


def oriented_cycle_vertices(q: ValuedTranslationQuiver) -> FrozenSet[int]:
    vertices: Set[int] = set()
    for component in cyclic_components(q.vertices, q.successors):
        vertices |= component
    return frozenset(vertices)


def _neighbours(q: ValuedTranslationQuiver, vertices: FrozenSet[int]) -> Set[int]:
    around: Set[int] = set()
    for v in vertices:
        around.update(q.successors(v))
        around.update(q.predecessors(v))
    return around


def _almost_acyclic(q: ValuedTranslationQuiver, cyclic: List[FrozenSet[int]]) -> Verdict:
    if any(c & q.boundary for c in cyclic):
        return Verdict.FALSE
    if any(_neighbours(q, c) & q.boundary for c in cyclic):
        return Verdict.UNKNOWN
    return Verdict.TRUE


def _interval_finite(q: ValuedTranslationQuiver, cycles: FrozenSet[int]) -> Verdict:
    verdict = Verdict.TRUE
    for v in sorted(cycles):
        span = interval(q, v, v)
        if span.vertices & q.boundary:
            return Verdict.FALSE
        if not span.complete:
            verdict = Verdict.UNKNOWN
    return verdict


def _core_condition(
    q: ValuedTranslationQuiver, found: CoreResult, cycles: FrozenSet[int]
) -> Verdict:
    if found.vertices & q.boundary:
        return Verdict.UNKNOWN
    missing = cycles - found.vertices
    if not missing:
        return Verdict.TRUE
    if missing <= found.unknown:
        return Verdict.UNKNOWN
    return Verdict.FALSE


def _semistable_condition(q: ValuedTranslationQuiver, partition: StabilityPartition) -> Verdict:
    verdict = Verdict.TRUE
    for component in partition.components:
        if component.acyclic:
            continue
        if component.infinite_beyond_window:
            return Verdict.FALSE
        if _neighbours(q, component.vertices) & q.boundary:
            verdict = Verdict.UNKNOWN
    return verdict


def theorem_equivalence_report(
    q: ValuedTranslationQuiver, partition: Optional[StabilityPartition] = None
) -> TheoremReport:
    partition = partition or stability(q)
    cyclic = cyclic_components(q.vertices, q.successors)
    cycles = frozenset().union(*cyclic) if cyclic else frozenset()
    found = core(q)

    report = TheoremReport(
        almost_acyclic=_almost_acyclic(q, cyclic),
        interval_finite=_interval_finite(q, cycles),
        finite_core_with_cycles=_core_condition(q, found, cycles),
        no_cyclic_infinite_semistable=_semistable_condition(q, partition),
        consistent=True,
        mode="window" if q.boundary else "exact",
        core=found.vertices,
        core_unknown=found.unknown,
        cycle_vertices=cycles,
        orbit_count=len(tau_orbits(q)),
    )

    outside = [v for v in q.vertices if v not in found.vertices]
    report.acyclic_outside_core = not cyclic_components(
        outside, lambda v: [w for w in q.successors(v) if w not in found.vertices]
    )

    decided = {v for v in report.verdicts.values() if v.decided}
    if len(decided) > 1:
        report.consistent = False
        report.notes.append("decided verdicts disagree")
        logger.warning(
            "Theorem conditions disagree: "
            + ", ".join(f"{k}={v.value}" for k, v in report.verdicts.items())
        )
    undecided = [k for k, v in report.verdicts.items() if not v.decided]
    if undecided:
        report.notes.append("undecided at window: " + ", ".join(undecided))
        logger.warning(f"Window-limited verdicts: {', '.join(undecided)}")
    return report


def is_acyclic(q: ValuedTranslationQuiver) -> bool:
    return not cyclic_components(q.vertices, q.successors)


def is_almost_acyclic(q: ValuedTranslationQuiver) -> Verdict:
    """Finitely many vertices on oriented cycles; decided exactly without truncation"""
    return _almost_acyclic(q, cyclic_components(q.vertices, q.successors))
