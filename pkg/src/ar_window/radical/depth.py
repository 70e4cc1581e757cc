"""
Depth of maps between table entries and composites along quiver paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from ar_window.errors import NotRadicalError, RepresentationError
from ar_window.modcat.homs import Morphism
from ar_window.radical.filtration import RadicalFiltration

MapLike = Union[Morphism, np.ndarray]


@dataclass(frozen=True)
class DepthReport:
    """``depth`` None means the map lies in every computed power (∞ within the window)"""

    source: int
    target: int
    depth: Optional[int]
    mode: str
    lower_bound: bool = False

    @property
    def infinite(self) -> bool:
        return self.depth is None

    def __str__(self) -> str:
        value = "inf" if self.depth is None else str(self.depth)
        if self.lower_bound:
            value = ">=" + value
        return f"depth({self.source}->{self.target}) = {value} [{self.mode}]"


def _flat(f: MapLike) -> np.ndarray:
    return f.flat() if isinstance(f, Morphism) else np.asarray(f, dtype=np.int64).reshape(-1)


def depth(filtration: RadicalFiltration, i: int, j: int, f: MapLike) -> DepthReport:
    """
    Largest n with f in rad^n(X_i, X_j). Maps outside the radical raise
    NotRadicalError; the zero map has infinite depth.
    """
    vec = _flat(f) % filtration.spaces.p
    if vec.shape[0] != filtration.spaces.ambient(i, j):
        raise RepresentationError("Map does not match the Hom space of the given entries")
    if not vec.any():
        return DepthReport(i, j, None, filtration.mode)
    if not filtration.contains(i, j, 1, vec):
        raise NotRadicalError(
            f"Map {filtration.table[i].label} -> {filtration.table[j].label} is not in the radical"
        )
    n = 1
    while n < filtration.computed and filtration.contains(i, j, n + 1, vec):
        n += 1
    if n == filtration.computed:
        if filtration.stabilized:
            return DepthReport(i, j, None, filtration.mode)
        return DepthReport(i, j, n, filtration.mode, lower_bound=True)
    return DepthReport(i, j, n, filtration.mode)


def path_composite(filtration: RadicalFiltration, vertices: Sequence[int]) -> np.ndarray:
    """
    Composite of irreducible lifts along X_0 -> X_1 -> ... -> X_s, taking the
    first lift of rad/rad² on every arrow.
    """
    if len(vertices) < 2:
        raise RepresentationError("A composite needs at least one arrow")
    spaces = filtration.spaces
    current: Optional[np.ndarray] = None
    for a, b in zip(vertices, vertices[1:]):
        lifts = spaces.irreducible_lifts(a, b)
        if lifts.shape[1] == 0:
            raise RepresentationError(
                f"No irreducible map {filtration.table[a].label} -> {filtration.table[b].label}"
            )
        step = lifts[:, :1]
        if current is None:
            current = step
        else:
            current = spaces.compose(step, current, vertices[0], a, b)
    assert current is not None
    return current[:, 0]
