"""
Morphisms of representations, Hom spaces and the radical of End(M).

Hom(M, N) is the solution space of N_a f_s = f_t M_a over all arrows a: s -> t.
The unknowns are the per-vertex blocks f_v (dim N_v x dim M_v) flattened row
by row and stacked in vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ar_window.errors import RepresentationError
from ar_window.modcat.linalg import (
    identity,
    is_invertible,
    kron_mod,
    matmul_mod,
    mod_p,
    nullspace_mod,
    solve_mod,
    zeros,
)
from ar_window.modcat.representation import Representation


class Morphism:
    def __init__(
        self,
        source: Representation,
        target: Representation,
        blocks: Mapping[int, np.ndarray],
        check: bool = False,
    ):
        if source.algebra is not target.algebra:
            raise RepresentationError("Morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.p = source.p
        self._blocks: Dict[int, np.ndarray] = {}
        for v in source.vertices:
            shape = (target.dim(v), source.dim(v))
            block = blocks.get(v)
            if block is None:
                block = zeros(*shape)
            else:
                block = mod_p(np.asarray(block).reshape(shape), self.p)
            self._blocks[v] = block
        if check and not self.is_homomorphism():
            raise RepresentationError("Blocks do not intertwine the arrow actions")

    @classmethod
    def identity(cls, m: Representation) -> "Morphism":
        return cls(m, m, {v: identity(m.dim(v)) for v in m.vertices})

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "Morphism":
        return cls(source, target, {})

    @classmethod
    def from_flat(
        cls, source: Representation, target: Representation, vec: np.ndarray
    ) -> "Morphism":
        blocks = {}
        start = 0
        for v in source.vertices:
            size = target.dim(v) * source.dim(v)
            blocks[v] = np.asarray(vec[start : start + size]).reshape(target.dim(v), source.dim(v))
            start += size
        return cls(source, target, blocks)

    def block(self, v: int) -> np.ndarray:
        return self._blocks[v]

    def flat(self) -> np.ndarray:
        parts = [self._blocks[v].reshape(-1) for v in self.source.vertices]
        return np.concatenate(parts) if parts else zeros(1, 0)[0]

    def is_zero(self) -> bool:
        return not any(b.any() for b in self._blocks.values())

    def is_homomorphism(self) -> bool:
        for arrow in self.source.algebra.arrows:
            left = matmul_mod(self.target.matrix(arrow.name), self._blocks[arrow.source], self.p)
            right = matmul_mod(self._blocks[arrow.target], self.source.matrix(arrow.name), self.p)
            if not np.array_equal(left, right):
                return False
        return True

    def is_isomorphism(self) -> bool:
        return all(is_invertible(b, self.p) for b in self._blocks.values())

    def compose(self, other: "Morphism") -> "Morphism":
        """self ∘ other"""
        if other.target is not self.source and other.target != self.source:
            raise RepresentationError("Morphisms are not composable")
        return Morphism(
            other.source,
            self.target,
            {v: matmul_mod(self._blocks[v], other.block(v), self.p) for v in self.source.vertices},
        )

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.source,
            self.target,
            {v: (self._blocks[v] + other.block(v)) % self.p for v in self.source.vertices},
        )

    def scale(self, c: int) -> "Morphism":
        return Morphism(
            self.source,
            self.target,
            {v: (b * (int(c) % self.p)) % self.p for v, b in self._blocks.items()},
        )

    def __repr__(self) -> str:
        return f"Morphism({self.source.describe()} -> {self.target.describe()})"


@dataclass(frozen=True)
class HomSpace:
    """Basis of Hom(source, target); ``matrix`` holds the flattened basis as columns"""

    source: Representation
    target: Representation
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def basis(self) -> Tuple[Morphism, ...]:
        return tuple(
            Morphism.from_flat(self.source, self.target, self.matrix[:, k]) for k in range(self.dim)
        )

    def element(self, coefficients: Sequence[int]) -> Morphism:
        coeffs = np.asarray(coefficients, dtype=np.int64).reshape(-1, 1)
        if coeffs.shape[0] != self.dim:
            raise RepresentationError(f"Expected {self.dim} coefficients")
        if self.dim == 0:
            return Morphism.zero(self.source, self.target)
        vec = matmul_mod(self.matrix, coeffs, self.source.p)[:, 0]
        return Morphism.from_flat(self.source, self.target, vec)

    def coordinates(self, f: Morphism) -> np.ndarray:
        try:
            return solve_mod(self.matrix, f.flat(), self.source.p)[:, 0]
        except ValueError:
            raise RepresentationError("Morphism does not lie in this Hom space") from None


def _layout(m: Representation, n: Representation) -> Dict[int, int]:
    start = 0
    offsets = {}
    for v in m.vertices:
        offsets[v] = start
        start += n.dim(v) * m.dim(v)
    return offsets


def intertwining_system(m: Representation, n: Representation) -> np.ndarray:
    """Matrix of the linear system whose kernel is Hom(m, n)"""
    p = m.p
    offsets = _layout(m, n)
    unknowns = sum(n.dim(v) * m.dim(v) for v in m.vertices)
    blocks = []
    for arrow in m.algebra.arrows:
        s, t = arrow.source, arrow.target
        rows = n.dim(t) * m.dim(s)
        if rows == 0:
            continue
        eq = zeros(rows, unknowns)
        if n.dim(s) * m.dim(s):
            eq[:, offsets[s] : offsets[s] + n.dim(s) * m.dim(s)] += kron_mod(
                n.matrix(arrow.name), identity(m.dim(s)), p
            )
        if n.dim(t) * m.dim(t):
            eq[:, offsets[t] : offsets[t] + n.dim(t) * m.dim(t)] -= kron_mod(
                identity(n.dim(t)), m.matrix(arrow.name).T, p
            )
        blocks.append(eq % p)
    if not blocks:
        return zeros(0, unknowns)
    return np.concatenate(blocks, axis=0)


def hom(m: Representation, n: Representation) -> HomSpace:
    """Basis of Hom(m, n), in the pivot order of the reduced intertwining system"""
    if m.algebra is not n.algebra:
        raise RepresentationError("Modules live over different algebras")
    return HomSpace(m, n, nullspace_mod(intertwining_system(m, n), m.p))


def end(m: Representation) -> HomSpace:
    return hom(m, m)


def _trace_vectors(space: HomSpace) -> Tuple[np.ndarray, np.ndarray]:
    flats = []
    transposed = []
    for f in space.basis:
        flats.append(f.flat())
        transposed.append(
            np.concatenate([f.block(v).T.reshape(-1) for v in space.source.vertices])
        )
    return np.array(flats, dtype=np.int64), np.array(transposed, dtype=np.int64)


def endomorphism_radical(m: Representation, space: Optional[HomSpace] = None) -> np.ndarray:
    """
    rad End(m) in coordinates of the End basis (columns), as the kernel of
    the trace form tr(xy). Exact whenever p exceeds dim m.
    """
    space = space or end(m)
    if space.dim == 0:
        return zeros(0, 0)
    if m.total_dim >= m.p:
        raise RepresentationError("Trace-form radical needs p larger than the module dimension")
    flats, transposed = _trace_vectors(space)
    gram = matmul_mod(flats, transposed.T, m.p)
    return nullspace_mod(gram, m.p)


def top_dimension_of_end(m: Representation) -> int:
    """dim End(m)/rad End(m)"""
    space = end(m)
    return space.dim - endomorphism_radical(m, space).shape[1]
