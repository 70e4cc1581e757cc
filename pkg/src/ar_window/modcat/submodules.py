"""
Submodules and quotients given by per-vertex bases; kernels, images,
radical, socle and top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

import numpy as np

from ar_window.errors import RepresentationError
from ar_window.modcat.homs import Morphism
from ar_window.modcat.linalg import (
    column_basis,
    extend_to_basis,
    inv_mod_mat,
    matmul_mod,
    nullspace_mod,
    solve_mod,
    zeros,
)
from ar_window.modcat.representation import Representation

Bases = Mapping[int, np.ndarray]


@dataclass(frozen=True)
class Subquotient:
    """A submodule with its inclusion, or a quotient with its projection"""

    module: Representation
    map: Morphism
    bases: Dict[int, np.ndarray]


def _normalise(m: Representation, bases: Bases) -> Dict[int, np.ndarray]:
    out = {}
    for v in m.vertices:
        b = bases.get(v)
        if b is None or b.size == 0:
            out[v] = zeros(m.dim(v), 0)
        else:
            out[v] = column_basis(np.asarray(b).reshape(m.dim(v), -1), m.p)
    return out


def submodule(m: Representation, bases: Bases, name: str = "") -> Subquotient:
    """The submodule spanned at each vertex v by the columns of ``bases[v]``"""
    spans = _normalise(m, bases)
    matrices = {}
    for arrow in m.algebra.arrows:
        image = matmul_mod(m.matrix(arrow.name), spans[arrow.source], m.p)
        try:
            matrices[arrow.name] = solve_mod(spans[arrow.target], image, m.p)
        except ValueError:
            raise RepresentationError(
                f"Subspace is not closed under arrow {arrow.name}"
            ) from None
    dims = {v: spans[v].shape[1] for v in m.vertices}
    sub = Representation(m.algebra, dims, matrices, name=name, check=False)
    return Subquotient(sub, Morphism(sub, m, spans), spans)


def quotient(m: Representation, bases: Bases, name: str = "") -> Subquotient:
    """m modulo the submodule spanned by ``bases``; ``map`` is the projection"""
    spans = _normalise(m, bases)
    submodule(m, spans)  # closure check
    complements = {v: extend_to_basis(spans[v], m.dim(v), m.p) for v in m.vertices}
    inverses = {
        v: inv_mod_mat(np.concatenate([spans[v], complements[v]], axis=1), m.p)
        for v in m.vertices
    }
    matrices = {}
    for arrow in m.algebra.arrows:
        s, t = arrow.source, arrow.target
        moved = matmul_mod(m.matrix(arrow.name), complements[s], m.p)
        coords = matmul_mod(inverses[t], moved, m.p)
        matrices[arrow.name] = coords[spans[t].shape[1] :, :]
    dims = {v: complements[v].shape[1] for v in m.vertices}
    q = Representation(m.algebra, dims, matrices, name=name, check=False)
    projection = Morphism(m, q, {v: inverses[v][spans[v].shape[1] :, :] for v in m.vertices})
    return Subquotient(q, projection, spans)


def kernel(f: Morphism) -> Subquotient:
    return submodule(f.source, {v: nullspace_mod(f.block(v), f.p) for v in f.source.vertices})


def image(f: Morphism) -> Subquotient:
    return submodule(f.target, {v: column_basis(f.block(v), f.p) for v in f.source.vertices})


def cokernel(f: Morphism) -> Subquotient:
    return quotient(f.target, image(f).bases)


def radical_bases(m: Representation) -> Dict[int, np.ndarray]:
    """rad M at v: the sum of the images of the arrows ending at v"""
    out = {}
    for v in m.vertices:
        incoming = [m.matrix(a.name) for a in m.algebra.arrows_to(v)]
        if incoming and m.dim(v):
            out[v] = column_basis(np.concatenate(incoming, axis=1), m.p)
        else:
            out[v] = zeros(m.dim(v), 0)
    return out


def radical_of_module(m: Representation) -> Subquotient:
    return submodule(m, radical_bases(m), name=f"rad {m.describe()}")


def top(m: Representation) -> Subquotient:
    return quotient(m, radical_bases(m), name=f"top {m.describe()}")


def socle(m: Representation) -> Subquotient:
    """Joint kernel of the arrows leaving each vertex"""
    bases = {}
    for v in m.vertices:
        outgoing = [m.matrix(a.name) for a in m.algebra.arrows_from(v)]
        if outgoing:
            bases[v] = nullspace_mod(np.concatenate(outgoing, axis=0), m.p)
        else:
            bases[v] = np.eye(m.dim(v), dtype=np.int64)
    return submodule(m, bases, name=f"soc {m.describe()}")


def top_vector(m: Representation) -> Tuple[int, ...]:
    rad = radical_bases(m)
    return tuple(m.dim(v) - rad[v].shape[1] for v in m.vertices)


def socle_vector(m: Representation) -> Tuple[int, ...]:
    return socle(m).module.dim_vector
