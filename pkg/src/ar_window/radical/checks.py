"""
Generalized standardness of a set of table entries and the Harada-Sai
vanishing check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ar_window.analysis.theorem import Verdict
from ar_window.modcat.radical_spaces import span
from ar_window.radical.filtration import RadicalFiltration
from ar_window.utils.logger import logger

Pair = Tuple[int, int]


@dataclass
class StandardnessReport:
    verdict: Verdict
    mode: str
    power: int
    obstructions: List[Pair] = field(default_factory=list)
    note: str = ""

    def as_dict(self) -> Dict[str, object]:
        return {
            "verdict": self.verdict.value,
            "mode": self.mode,
            "power": self.power,
            "obstructions": [list(p) for p in self.obstructions],
            "note": self.note,
        }


def is_generalized_standard(
    filtration: RadicalFiltration, component: Optional[Iterable[int]] = None
) -> StandardnessReport:
    """
    rad^∞ = 0 between all entries of ``component`` (default: the whole table).

    A nonzero stabilized power is a genuine rad^∞ witness in either mode,
    because the computed powers are subspaces of the true ones.
    """
    members = sorted(set(range(filtration.size) if component is None else component))
    power = filtration.computed
    if not filtration.stabilized:
        return StandardnessReport(
            Verdict.UNKNOWN,
            filtration.mode,
            power,
            note=f"filtration did not stabilize within {filtration.max_power} powers",
        )
    obstructions = [
        (i, j) for i in members for j in members if filtration.stable_dim(i, j)
    ]
    if obstructions:
        return StandardnessReport(Verdict.FALSE, filtration.mode, power, obstructions)
    if filtration.exact:
        return StandardnessReport(Verdict.TRUE, filtration.mode, power)
    return StandardnessReport(
        Verdict.UNKNOWN,
        filtration.mode,
        power,
        note=f"no obstruction up to power {power}",
    )


@dataclass
class HaradaSaiReport:
    verdict: Verdict
    length_bound: int
    chain_length: int
    modules: List[int]
    vanished_at: Optional[int]
    witness: Optional[Pair] = None

    def as_dict(self) -> Dict[str, object]:
        return {
            "verdict": self.verdict.value,
            "length_bound": self.length_bound,
            "chain_length": self.chain_length,
            "modules": list(self.modules),
            "vanished_at": self.vanished_at,
            "witness": list(self.witness) if self.witness else None,
        }


def harada_sai_check(filtration: RadicalFiltration, b: int) -> HaradaSaiReport:
    """
    Composites of 2^b - 1 radical maps between table entries of dimension
    at most b must vanish. All chains are covered: the span of composites
    of length k+1 is built from the span for length k.
    """
    if b < 1:
        raise ValueError("Length bound must be positive")
    spaces = filtration.spaces
    chain_length = 2**b - 1
    small = [e.index for e in filtration.table if e.module.total_dim <= b]
    current: Dict[Pair, np.ndarray] = {(i, j): spaces.rad(i, j) for i in small for j in small}

    length = 1
    while length < chain_length:
        if not any(basis.shape[1] for basis in current.values()):
            break
        following = {}
        for i in small:
            for j in small:
                parts = [
                    spaces.compose(current[(k, j)], spaces.rad(i, k), i, k, j)
                    for k in small
                    if spaces.rad_dim(i, k) and current[(k, j)].shape[1]
                ]
                following[(i, j)] = span(parts, spaces.ambient(i, j), spaces.p)
        length += 1
        unchanged = all(following[p].shape[1] == current[p].shape[1] for p in current)
        current = following
        if unchanged:
            # the spans are nested, so they stay put from here on
            break

    nonzero = sorted(p for p, basis in current.items() if basis.shape[1])
    if nonzero:
        logger.warning(f"Harada-Sai check failed for b={b} on {len(nonzero)} pairs")
        return HaradaSaiReport(Verdict.FALSE, b, chain_length, small, None, nonzero[0])
    vanished = length if small else 0
    return HaradaSaiReport(Verdict.TRUE, b, chain_length, small, vanished)
