"""
Annihilators of families of modules as two-sided ideals of kQ/I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ar_window.errors import RepresentationError
from ar_window.modcat.algebra import AlgebraPresentation, QPath
from ar_window.modcat.linalg import in_column_span, matmul_mod, nullspace_mod, zeros
from ar_window.modcat.representation import Representation


@dataclass(frozen=True)
class IdealInAlgebra:
    """Subspace of kQ/I; columns of ``basis`` are coordinates over the algebra basis"""

    algebra: AlgebraPresentation
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, vector: np.ndarray) -> bool:
        return in_column_span(self.basis, vector, self.algebra.p)

    def contains_path(self, path: QPath) -> bool:
        return self.contains(element_vector(self.algebra, path))

    def annihilates(self, m: Representation) -> bool:
        if self.is_zero():
            return True
        return not matmul_mod(action_matrix(m), self.basis, m.p).any()

    def is_two_sided(self) -> bool:
        """Closed under multiplication by arrows and vertex idempotents on both sides"""
        a = self.algebra
        generators = [QPath(v, v) for v in a.vertices] + [
            QPath(arrow.source, arrow.target, (arrow.name,)) for arrow in a.arrows
        ]
        for g in generators:
            for side in ("left", "right"):
                moved = matmul_mod(multiplication_matrix(a, g, side), self.basis, a.p)
                for column in moved.T:
                    if column.any() and not self.contains(column):
                        return False
        return True


def element_vector(a: AlgebraPresentation, path: QPath) -> np.ndarray:
    alg = a.algebra
    vec = zeros(1, alg.dimension)[0]
    coords = alg.reduce(path.arrows, path.source) if path.arrows else {path: 1}
    for q, c in coords.items():
        vec[alg.coordinate_position(q)] = c
    return vec


def multiplication_matrix(a: AlgebraPresentation, g: QPath, side: str) -> np.ndarray:
    """x -> g·x (side='left') or x -> x·g (side='right') over the algebra basis"""
    alg = a.algebra
    out = zeros(alg.dimension, alg.dimension)
    for col, b in enumerate(alg.basis):
        product = alg.multiply(g, b) if side == "left" else alg.multiply(b, g)
        for q, c in product.items():
            out[alg.coordinate_position(q), col] = c
    return out


def action_matrix(m: Representation) -> np.ndarray:
    """Column k: the k-th algebra basis element acting on m, flattened"""
    alg = m.algebra.algebra
    columns = [m.action(q).reshape(-1) for q in alg.basis]
    if not columns:
        return zeros(0, 0)
    return np.stack(columns, axis=1)


def annihilator(a: AlgebraPresentation, modules: Iterable[Representation]) -> IdealInAlgebra:
    """ann of a family: the joint kernel of the action maps"""
    modules = list(modules)
    for m in modules:
        if m.algebra is not a:
            raise RepresentationError("Module does not live over this algebra")
    dim = a.algebra.dimension
    blocks = [action_matrix(m) for m in modules if m.total_dim]
    system = np.concatenate(blocks, axis=0) if blocks else zeros(0, dim)
    ideal = IdealInAlgebra(a, nullspace_mod(system, a.p))
    if not ideal.is_two_sided():
        raise RepresentationError("Annihilator failed the two-sided closure check")
    return ideal


def is_faithful(a: AlgebraPresentation, modules: Iterable[Representation]) -> bool:
    return annihilator(a, modules).is_zero()
