"""
Short cycles, their depth bound and directing modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Union

from ar_window.analysis.graph import cyclic_components
from ar_window.radical.filtration import BEYOND_CAP, STABLE_NONZERO, RadicalFiltration

UNBOUNDED = "unbounded-at-window"
BEYOND_MAX_POWER = "beyond-max-power"

Bound = Union[int, None, str]


@dataclass(frozen=True)
class ShortCyclePair:
    """{first, second} with nonzero radical maps both ways; first == second for loops"""

    first: int
    second: int
    forward: int  # largest n with rad^n(first, second) ≠ 0, or a filtration marker
    backward: int

    @property
    def depth(self) -> int:
        sides = (self.forward, self.backward)
        if STABLE_NONZERO in sides:
            return STABLE_NONZERO
        if BEYOND_CAP in sides:
            return BEYOND_CAP
        return max(sides)

    @property
    def unbounded(self) -> bool:
        return self.depth == STABLE_NONZERO

    @property
    def capped(self) -> bool:
        return self.depth == BEYOND_CAP

    def depth_label(self) -> Union[int, str]:
        if self.unbounded:
            return "inf"
        if self.capped:
            return BEYOND_MAX_POWER
        return self.depth


@dataclass
class ShortCycleCatalog:
    pairs: List[ShortCyclePair]
    mode: str
    labels: Dict[int, str] = field(default_factory=dict)

    def _label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for p in self.pairs for v in (p.first, p.second))

    def as_dict(self) -> Dict[str, object]:
        return {
            "mode": self.mode,
            "bound": short_cycle_bound(self),
            "pairs": [
                {
                    "modules": [self._label(p.first), self._label(p.second)],
                    "depth": p.depth_label(),
                }
                for p in self.pairs
            ],
        }


def short_cycles(filtration: RadicalFiltration) -> ShortCycleCatalog:
    pairs = []
    size = filtration.size
    for i in range(size):
        for j in range(i, size):
            forward = filtration.max_nonzero_power(i, j)
            backward = filtration.max_nonzero_power(j, i)
            if forward is None or backward is None:
                continue
            pairs.append(ShortCyclePair(i, j, forward, backward))
    return ShortCycleCatalog(pairs, filtration.mode, filtration.table.labels())


def short_cycle_bound(catalog: ShortCycleCatalog) -> Bound:
    """
    Maximal witnessed depth over the catalog; None when empty. A pair with
    rad^∞ ≠ 0 gives ``UNBOUNDED``; a pair still nonzero at the power cap gives
    ``BEYOND_MAX_POWER``.
    """
    if not catalog.pairs:
        return None
    if any(p.unbounded for p in catalog.pairs):
        return UNBOUNDED
    if any(p.capped for p in catalog.pairs):
        return BEYOND_MAX_POWER
    return max(p.depth for p in catalog.pairs)


def hom_digraph_successors(filtration: RadicalFiltration) -> Callable[[int], List[int]]:
    """X -> Y iff rad(X, Y) ≠ 0"""
    size = filtration.size
    spaces = filtration.spaces

    def successors(i: int) -> List[int]:
        return [j for j in range(size) if spaces.rad_dim(i, j)]

    return successors


def directing_modules(filtration: RadicalFiltration) -> FrozenSet[int]:
    """Entries on no cycle of nonzero radical maps"""
    vertices = list(range(filtration.size))
    on_cycles = set()
    for component in cyclic_components(vertices, hom_digraph_successors(filtration)):
        on_cycles |= component
    return frozenset(v for v in vertices if v not in on_cycles)

