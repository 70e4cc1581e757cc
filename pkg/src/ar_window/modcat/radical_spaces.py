"""
Hom spaces and radical spaces between the members of a finite list of
indecomposable modules, with composition of whole subspaces.

Maps are handled as flat vectors in the ambient space of ``Morphism.flat``;
a subspace is a matrix whose columns span it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ar_window.modcat.homs import HomSpace, endomorphism_radical, hom
from ar_window.modcat.linalg import (
    accumulation_fits,
    column_basis,
    matmul_mod,
    rank_mod,
    zeros,
)
from ar_window.modcat.representation import Representation

Pair = Tuple[int, int]


def ambient_dim(source: Representation, target: Representation) -> int:
    return sum(target.dim(v) * source.dim(v) for v in source.vertices)


def _blocks(
    flat: np.ndarray, source: Representation, target: Representation
) -> Dict[int, np.ndarray]:
    """Columns of ``flat`` as stacks of per-vertex blocks, shape (k, dim target_v, dim source_v)"""
    k = flat.shape[1]
    out = {}
    start = 0
    for v in source.vertices:
        rows, cols = target.dim(v), source.dim(v)
        chunk = flat[start : start + rows * cols, :]
        out[v] = chunk.T.reshape(k, rows, cols)
        start += rows * cols
    return out


def compose_spans(
    second: np.ndarray,
    first: np.ndarray,
    x: Representation,
    z: Representation,
    y: Representation,
) -> np.ndarray:
    """All composites g∘f (f a column of ``first`` in Hom(x,z), g of ``second`` in Hom(z,y))"""
    k, l = first.shape[1], second.shape[1]
    size = ambient_dim(x, y)
    if k == 0 or l == 0 or size == 0:
        return zeros(size, 0)
    f_blocks = _blocks(first, x, z)
    g_blocks = _blocks(second, z, y)
    parts = []
    for v in x.vertices:
        dy, dx = y.dim(v), x.dim(v)
        if dy * dx == 0:
            continue
        if z.dim(v) == 0:
            parts.append(zeros(l * k, dy * dx))
            continue
        if accumulation_fits(z.dim(v), x.p):
            prod = np.einsum("lab,kbc->lkac", g_blocks[v], f_blocks[v]) % x.p
        else:
            prod = np.zeros((l, k, dy, dx), dtype=np.int64)
            for b in range(z.dim(v)):
                term = np.einsum("la,kc->lkac", g_blocks[v][:, :, b], f_blocks[v][:, b, :])
                prod = (prod + term % x.p) % x.p
        parts.append(prod.reshape(l * k, dy * dx))
    return np.concatenate(parts, axis=1).T.copy()


class RadicalSpaces:
    """
    Hom(X_i, X_j) and rad(X_i, X_j) for every ordered pair of a module list.

    rad(X, Y) = Hom(X, Y) for distinct entries (the list holds pairwise
    non-isomorphic indecomposables) and rad End(X) on the diagonal.
    """

    def __init__(self, modules: Sequence[Representation], workers: int = 1):
        self.modules: List[Representation] = list(modules)
        self.p = self.modules[0].p if self.modules else 0
        self._homs: Dict[Pair, HomSpace] = {}
        self._rad: Dict[Pair, np.ndarray] = {}
        self._tops: Dict[int, int] = {}
        self._squares: Dict[Pair, np.ndarray] = {}

        pairs = [(i, j) for i in range(len(self.modules)) for j in range(len(self.modules))]
        if workers > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(self._compute, pairs))
        else:
            results = [self._compute(pair) for pair in pairs]
        for pair, (space, rad) in zip(pairs, results):
            self._homs[pair] = space
            self._rad[pair] = rad
            if pair[0] == pair[1]:
                self._tops[pair[0]] = space.dim - rad.shape[1]

    def _compute(self, pair: Pair) -> Tuple[HomSpace, np.ndarray]:
        i, j = pair
        space = hom(self.modules[i], self.modules[j])
        if i != j or space.dim == 0:
            return space, space.matrix
        coords = endomorphism_radical(self.modules[i], space)
        return space, matmul_mod(space.matrix, coords, self.p)

    def __len__(self) -> int:
        return len(self.modules)

    def hom(self, i: int, j: int) -> HomSpace:
        return self._homs[(i, j)]

    def hom_dim(self, i: int, j: int) -> int:
        return self._homs[(i, j)].dim

    def rad(self, i: int, j: int) -> np.ndarray:
        return self._rad[(i, j)]

    def rad_dim(self, i: int, j: int) -> int:
        return int(self._rad[(i, j)].shape[1])

    def top_dim(self, i: int) -> int:
        """dim End(X_i)/rad End(X_i)"""
        return self._tops[i]

    def ambient(self, i: int, j: int) -> int:
        return ambient_dim(self.modules[i], self.modules[j])

    def compose(self, second: np.ndarray, first: np.ndarray, i: int, k: int, j: int) -> np.ndarray:
        """Span of second∘first with first ⊆ Hom(X_i, X_k) and second ⊆ Hom(X_k, X_j)"""
        return compose_spans(second, first, self.modules[i], self.modules[k], self.modules[j])

    def square(self, i: int, j: int, through: Optional[Sequence[int]] = None) -> np.ndarray:
        """Σ_k rad(X_k, X_j)∘rad(X_i, X_k) over the list (or over ``through``)"""
        if through is None and (i, j) in self._squares:
            return self._squares[(i, j)]
        spans = []
        for k in range(len(self.modules)) if through is None else through:
            if self.rad_dim(i, k) and self.rad_dim(k, j):
                spans.append(self.compose(self.rad(k, j), self.rad(i, k), i, k, j))
        result = span(spans, self.ambient(i, j), self.p)
        if through is None:
            self._squares[(i, j)] = result
        return result

    def irreducible_dim(self, i: int, j: int) -> int:
        """dim rad(X_i, X_j) / rad²(X_i, X_j), rad² taken through the list"""
        if not self.rad_dim(i, j):
            return 0
        return self.rad_dim(i, j) - rank_mod(self.square(i, j), self.p)

    def irreducible_lifts(self, i: int, j: int) -> np.ndarray:
        """Columns of rad(X_i, X_j) whose classes form a basis of rad/rad²"""
        square = self.square(i, j)
        chosen = square
        lifts = []
        rank = rank_mod(square, self.p)
        for column in self.rad(i, j).T:
            trial = np.concatenate([chosen, column.reshape(-1, 1)], axis=1)
            trial_rank = rank_mod(trial, self.p)
            if trial_rank > rank:
                chosen, rank = trial, trial_rank
                lifts.append(column)
        if not lifts:
            return zeros(self.ambient(i, j), 0)
        return np.stack(lifts, axis=1)


def span(parts: Sequence[np.ndarray], ambient: int, p: int) -> np.ndarray:
    """Column basis of the sum of the given subspaces"""
    parts = [s for s in parts if s.shape[1]]
    if not parts:
        return zeros(ambient, 0)
    return column_basis(np.concatenate(parts, axis=1), p)
