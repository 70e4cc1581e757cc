"""
Slice evidence for a finite connected subquiver Δ of a knitted window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ar_window.analysis.graph import reachable
from ar_window.analysis.sections import SubquiverCheck, is_cut, predecessor_closure
from ar_window.analysis.theorem import Verdict
from ar_window.errors import QuiverError
from ar_window.modcat.annihilator import IdealInAlgebra, annihilator
from ar_window.modcat.representation import is_sincere
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver
from ar_window.radical.cycles import hom_digraph_successors
from ar_window.radical.filtration import RadicalFiltration


@dataclass
class SliceReport:
    delta: FrozenSet[int]
    mode: str
    cut: SubquiverCheck
    sincere: bool
    convex: Verdict
    convexity_witness: Optional[Tuple[int, int, int]]
    hom_to_translate: Dict[Tuple[int, int], int]
    annihilator: IdealInAlgebra
    predecessors: FrozenSet[int]
    unannihilated_predecessors: List[int] = field(default_factory=list)

    @property
    def hom_to_translate_vanishes(self) -> bool:
        return not any(self.hom_to_translate.values())

    @property
    def faithful(self) -> bool:
        return self.annihilator.is_zero()

    @property
    def predecessors_annihilated(self) -> bool:
        return not self.unannihilated_predecessors

    def as_dict(self, labels: Optional[Dict[int, str]] = None) -> Dict[str, object]:
        name = (lambda v: labels.get(v, str(v))) if labels else str
        return {
            "delta": sorted(name(v) for v in self.delta),
            "mode": self.mode,
            "cut": bool(self.cut),
            "cut_witness": self.cut.witness,
            "sincere": self.sincere,
            "convex": self.convex.value,
            "convexity_witness": [name(v) for v in self.convexity_witness]
            if self.convexity_witness
            else None,
            "hom_to_translate": {
                f"{name(x)}->{name(y)}": d for (x, y), d in sorted(self.hom_to_translate.items())
            },
            "annihilator_dim": self.annihilator.dim,
            "faithful": self.faithful,
            "predecessors": sorted(name(v) for v in self.predecessors),
            "unannihilated_predecessors": [name(v) for v in self.unannihilated_predecessors],
        }


def _convexity_witness(
    filtration: RadicalFiltration, delta: FrozenSet[int]
) -> Optional[Tuple[int, int, int]]:
    """(start, outside, end): a Hom-digraph path leaving Δ at start and re-entering at end"""
    successors = hom_digraph_successors(filtration)
    for start in sorted(delta):
        outside = sorted(w for w in successors(start) if w not in delta)
        for w in outside:
            hits = reachable([w], successors) & delta
            if hits:
                return start, w, min(hits)
    return None


def slice_report(
    filtration: RadicalFiltration, q: ValuedTranslationQuiver, delta: Iterable[int]
) -> SliceReport:
    """
    Cut conditions, sincerity, convexity in ind A, Hom(Δ, τΔ), ann(Δ) and
    whether ann(Δ) kills every predecessor of Δ in the window.
    """
    delta_set = frozenset(delta)
    table = filtration.table
    missing = sorted(v for v in delta_set if v not in q or v >= len(table))
    if missing:
        raise QuiverError(f"Vertices {missing} are not in the window")
    if not delta_set:
        raise QuiverError("Empty subquiver")

    spaces = filtration.spaces
    cut = is_cut(q, delta_set)
    sincere = is_sincere(table[v].module for v in delta_set)

    witness = _convexity_witness(filtration, delta_set)
    if witness is not None:
        convex = Verdict.FALSE
    else:
        convex = Verdict.TRUE if filtration.exact else Verdict.UNKNOWN

    hom_to_translate = {}
    for x in sorted(delta_set):
        for y in sorted(delta_set):
            t = q.tau(y)
            if t is not None:
                hom_to_translate[(x, t)] = spaces.hom_dim(x, t)

    ideal = annihilator(table.algebra, [table[v].module for v in sorted(delta_set)])
    predecessors = predecessor_closure(q, delta_set) - delta_set
    unannihilated = [v for v in sorted(predecessors) if not ideal.annihilates(table[v].module)]
    return SliceReport(
        delta_set,
        filtration.mode,
        cut,
        sincere,
        convex,
        witness,
        hom_to_translate,
        ideal,
        frozenset(predecessors),
        unannihilated,
    )
