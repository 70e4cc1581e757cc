"""
Representations of a bound quiver over GF(p) and the standard modules.

An arrow a: s -> t acts by a (dim t x dim s) matrix on column vectors.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ar_window.errors import RepresentationError
from ar_window.modcat.algebra import AlgebraPresentation, QPath
from ar_window.modcat.linalg import block_diag, identity, matmul_mod, mod_p, zeros


class Representation:
    def __init__(
        self,
        algebra: AlgebraPresentation,
        dims: Mapping[int, int],
        matrices: Optional[Mapping[str, object]] = None,
        name: str = "",
        check: bool = True,
    ):
        self.algebra = algebra
        self.p = algebra.p
        self.name = name
        unknown = set(dims) - set(algebra.vertices)
        if unknown:
            raise RepresentationError(f"Dimensions given for unknown vertices {sorted(unknown)}")
        self._dims: Dict[int, int] = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if any(d < 0 for d in self._dims.values()):
            raise RepresentationError("Dimensions must be non-negative")

        matrices = matrices or {}
        unknown_arrows = set(matrices) - {a.name for a in algebra.arrows}
        if unknown_arrows:
            raise RepresentationError(f"Matrices given for unknown arrows {sorted(unknown_arrows)}")
        self._matrices: Dict[str, np.ndarray] = {}
        for arrow in algebra.arrows:
            shape = (self._dims[arrow.target], self._dims[arrow.source])
            given = matrices.get(arrow.name)
            if given is None:
                mat = zeros(*shape)
            else:
                mat = mod_p(np.array(given, dtype=np.int64).reshape(-1), self.p)
                if mat.size != shape[0] * shape[1]:
                    raise RepresentationError(
                        f"Matrix for arrow {arrow.name} has {mat.size} entries, "
                        f"expected shape {shape}"
                    )
                mat = mat.reshape(shape)
            self._matrices[arrow.name] = mat

        if check:
            self.check_relations()

    def check_relations(self) -> None:
        for relation in self.algebra.relations:
            s, t = self.algebra.path_endpoints(relation.terms[0][1])
            total = zeros(self._dims[t], self._dims[s])
            for coef, path in relation.terms:
                total = (total + coef * self.path_matrix(path)) % self.p
            if total.any():
                raise RepresentationError(
                    f"Relation {relation} does not vanish on {self.describe()}"
                )

    # structure

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.algebra.vertices

    def dim(self, v: int) -> int:
        return self._dims[v]

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self._dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def matrix(self, arrow: str) -> np.ndarray:
        return self._matrices[arrow]

    @property
    def matrices(self) -> Dict[str, np.ndarray]:
        return dict(self._matrices)

    def path_matrix(self, path: Sequence[str], source: Optional[int] = None) -> np.ndarray:
        if not path:
            if source is None:
                raise RepresentationError("Trivial path needs its vertex")
            return identity(self._dims[source])
        result = self._matrices[path[0]]
        for name in path[1:]:
            result = matmul_mod(self._matrices[name], result, self.p)
        return result

    def offsets(self) -> Dict[int, int]:
        start = 0
        offsets = {}
        for v in self.algebra.vertices:
            offsets[v] = start
            start += self._dims[v]
        return offsets

    def action(self, path: QPath) -> np.ndarray:
        """The element ``path`` acting on the whole space (total_dim x total_dim)"""
        out = zeros(self.total_dim, self.total_dim)
        off = self.offsets()
        block = self.path_matrix(path.arrows, path.source)
        s, t = path.source, path.target
        out[off[t] : off[t] + self._dims[t], off[s] : off[s] + self._dims[s]] = block
        return out

    def renamed(self, name: str) -> "Representation":
        return Representation(self.algebra, self._dims, self._matrices, name, check=False)

    def describe(self) -> str:
        return self.name or "(" + ",".join(str(d) for d in self.dim_vector) + ")"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self._dims == other._dims
            and all(np.array_equal(self._matrices[k], other._matrices[k]) for k in self._matrices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Representation({self.describe()}, dim={self.dim_vector})"


def simple(a: AlgebraPresentation, i: int) -> Representation:
    if i not in a.vertices:
        raise RepresentationError(f"Unknown vertex {i}")
    return Representation(a, {i: 1}, name=f"S{a.label(i)}", check=False)


def projective(a: AlgebraPresentation, i: int) -> Representation:
    """P_i: residue classes of paths starting at i"""
    if i not in a.vertices:
        raise RepresentationError(f"Unknown vertex {i}")
    alg = a.algebra
    bases = {j: alg.basis_paths(i, j) for j in a.vertices}
    position = {j: {path: k for k, path in enumerate(bases[j])} for j in a.vertices}
    matrices = {}
    for arrow in a.arrows:
        step = QPath(arrow.source, arrow.target, (arrow.name,))
        mat = zeros(len(bases[arrow.target]), len(bases[arrow.source]))
        for col, path in enumerate(bases[arrow.source]):
            for image, coef in alg.multiply(path, step).items():
                mat[position[arrow.target][image], col] = coef
        matrices[arrow.name] = mat
    dims = {j: len(bases[j]) for j in a.vertices}
    return Representation(a, dims, matrices, name=f"P{a.label(i)}", check=False)


def injective(a: AlgebraPresentation, i: int) -> Representation:
    """I_i: the dual of the residue classes of paths ending at i"""
    if i not in a.vertices:
        raise RepresentationError(f"Unknown vertex {i}")
    alg = a.algebra
    bases = {j: alg.basis_paths(j, i) for j in a.vertices}
    position = {j: {path: k for k, path in enumerate(bases[j])} for j in a.vertices}
    matrices = {}
    for arrow in a.arrows:
        step = QPath(arrow.source, arrow.target, (arrow.name,))
        mat = zeros(len(bases[arrow.target]), len(bases[arrow.source]))
        for row, path in enumerate(bases[arrow.target]):
            for image, coef in alg.multiply(step, path).items():
                mat[row, position[arrow.source][image]] = coef
        matrices[arrow.name] = mat
    dims = {j: len(bases[j]) for j in a.vertices}
    return Representation(a, dims, matrices, name=f"I{a.label(i)}", check=False)


def direct_sum(modules: Sequence[Representation], name: str = "") -> Representation:
    if not modules:
        raise RepresentationError("Direct sum of no modules")
    a = modules[0].algebra
    if any(m.algebra is not a for m in modules):
        raise RepresentationError("Modules live over different algebras")
    dims = {v: sum(m.dim(v) for m in modules) for v in a.vertices}
    matrices = {
        arrow.name: block_diag([m.matrix(arrow.name) for m in modules]) for arrow in a.arrows
    }
    name = name or " + ".join(m.describe() for m in modules)
    return Representation(a, dims, matrices, name=name, check=False)


def regular_module(a: AlgebraPresentation) -> Representation:
    return direct_sum([projective(a, i) for i in a.vertices], name="A")


def composition_factor_vector(m: Representation) -> Tuple[int, ...]:
    return m.dim_vector


def is_sincere(modules: Iterable[Representation]) -> bool:
    """Every simple module occurs as a composition factor of some module"""
    modules = list(modules)
    if not modules:
        return False
    totals = [sum(column) for column in zip(*(m.dim_vector for m in modules))]
    return all(t > 0 for t in totals)


def standard_modules(a: AlgebraPresentation) -> List[Representation]:
    """P_i then I_i for every vertex, in vertex order"""
    return [projective(a, i) for i in a.vertices] + [injective(a, i) for i in a.vertices]
