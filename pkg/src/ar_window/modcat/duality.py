"""
Vector-space duality, minimal projective presentations, the transpose and
the Auslander-Reiten translations τ = D Tr and τ⁻ = Tr D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ar_window.errors import DecomposableInputError, RepresentationError
from ar_window.modcat.algebra import AlgebraPresentation, QPath
from ar_window.modcat.decomposition import is_indecomposable
from ar_window.modcat.homs import Morphism
from ar_window.modcat.linalg import extend_to_basis, matmul_mod, zeros
from ar_window.modcat.representation import Representation, direct_sum, injective, projective
from ar_window.modcat.submodules import cokernel, kernel, radical_bases
from ar_window.utils.logger import logger

Generator = Tuple[int, np.ndarray]  # vertex, vector in M at that vertex
PathCombination = Dict[QPath, int]


@dataclass(frozen=True)
class ProjectivePresentation:
    """P1 --w--> P0 --cover--> M --> 0 with P0, P1 minimal"""

    p0_vertices: Tuple[int, ...]
    p1_vertices: Tuple[int, ...]
    p0: Representation
    p1: Representation
    cover: Morphism
    w: Morphism
    # w_blocks[(a, b)]: image of the b-th P1 generator in the a-th P0 summand
    w_blocks: Dict[Tuple[int, int], PathCombination]


def dual(a: AlgebraPresentation, m: Representation) -> Representation:
    """D M = Hom_k(M, k) over the opposite algebra"""
    if m.algebra is not a:
        raise RepresentationError("Module does not live over this algebra")
    op = a.opposite()
    dims = {v: m.dim(v) for v in a.vertices}
    matrices = {arrow.name: m.matrix(arrow.name).T.copy() for arrow in a.arrows}
    name = f"D{m.name}" if m.name else ""
    return Representation(op, dims, matrices, name=name, check=False)


def dual_morphism(a: AlgebraPresentation, f: Morphism) -> Morphism:
    """D f: D N -> D M for f: M -> N"""
    blocks = {v: f.block(v).T.copy() for v in a.vertices}
    return Morphism(dual(a, f.target), dual(a, f.source), blocks, check=True)


def top_generators(m: Representation) -> List[Generator]:
    """Vectors whose classes form a basis of top M, vertex by vertex"""
    rad = radical_bases(m)
    generators = []
    for v in m.vertices:
        for column in extend_to_basis(rad[v], m.dim(v), m.p).T:
            generators.append((v, column.copy()))
    return generators


def _cover_blocks(
    a: AlgebraPresentation, m: Representation, generators: List[Generator]
) -> Dict[int, np.ndarray]:
    alg = a.algebra
    blocks = {}
    for j in a.vertices:
        columns = []
        for i, g in generators:
            for path in alg.basis_paths(i, j):
                action = m.path_matrix(path.arrows, i)
                columns.append(matmul_mod(action, g.reshape(-1, 1), m.p)[:, 0])
        blocks[j] = np.stack(columns, axis=1) if columns else zeros(m.dim(j), 0)
    return blocks


def _free_module(a: AlgebraPresentation, vertices: List[int]) -> Representation:
    if not vertices:
        return Representation(a, {}, name="0", check=False)
    return direct_sum([projective(a, i) for i in vertices])


def minimal_projective_presentation(
    a: AlgebraPresentation, m: Representation
) -> ProjectivePresentation:
    if m.algebra is not a:
        raise RepresentationError("Module does not live over this algebra")
    if m.is_zero():
        raise RepresentationError("Zero module has no presentation to transpose")
    alg = a.algebra

    gens0 = top_generators(m)
    p0_vertices = [i for i, _ in gens0]
    p0 = _free_module(a, p0_vertices)
    cover = Morphism(p0, m, _cover_blocks(a, m, gens0))

    syzygy = kernel(cover)
    gens_k = [
        (j, matmul_mod(syzygy.bases[j], k.reshape(-1, 1), a.p)[:, 0])
        for j, k in top_generators(syzygy.module)
    ]
    p1_vertices = [j for j, _ in gens_k]
    p1 = _free_module(a, p1_vertices)
    w = Morphism(p1, p0, _cover_blocks(a, p0, gens_k))

    w_blocks: Dict[Tuple[int, int], PathCombination] = {}
    for b, (j, vec) in enumerate(gens_k):
        start = 0
        for idx, i in enumerate(p0_vertices):
            paths = alg.basis_paths(i, j)
            chunk = vec[start : start + len(paths)]
            start += len(paths)
            combo = {path: int(c) for path, c in zip(paths, chunk) if c}
            if combo:
                w_blocks[(idx, b)] = combo

    return ProjectivePresentation(
        tuple(p0_vertices), tuple(p1_vertices), p0, p1, cover, w, w_blocks
    )


def _op_projective(a: AlgebraPresentation, i: int) -> Representation:
    """Hom_A(P_i, A) as a module over the opposite algebra: paths k ⇝ i at vertex k"""
    return dual(a, injective(a, i)).renamed(f"P{a.label(i)}^op")


def transpose(a: AlgebraPresentation, m: Representation) -> Representation:
    """Tr M = coker Hom_A(w, A) over the opposite algebra"""
    pres = minimal_projective_presentation(a, m)
    op = a.opposite()
    if not pres.p1_vertices:
        return Representation(op, {}, name="0", check=False)

    idle = [
        idx
        for idx in range(len(pres.p0_vertices))
        if not any((idx, b) in pres.w_blocks for b in range(len(pres.p1_vertices)))
    ]
    if idle:
        logger.warning(
            f"{m.describe()} has {len(idle)} projective summand(s); they do not contribute to Tr"
        )

    alg = a.algebra
    q0 = direct_sum([_op_projective(a, i) for i in pres.p0_vertices])
    q1 = direct_sum([_op_projective(a, j) for j in pres.p1_vertices])
    blocks = {}
    for k in a.vertices:
        rows_at = [alg.basis_paths(k, j) for j in pres.p1_vertices]
        cols_at = [alg.basis_paths(k, i) for i in pres.p0_vertices]
        row_start = np.cumsum([0] + [len(r) for r in rows_at])
        col_start = np.cumsum([0] + [len(c) for c in cols_at])
        block = zeros(int(row_start[-1]), int(col_start[-1]))
        for (idx, b), combo in pres.w_blocks.items():
            position = {path: r for r, path in enumerate(rows_at[b])}
            for c, q in enumerate(cols_at[idx]):
                for path, coef in combo.items():
                    for image, value in alg.multiply(q, path).items():
                        r = int(row_start[b]) + position[image]
                        col = int(col_start[idx]) + c
                        block[r, col] = (block[r, col] + coef * value) % a.p
        blocks[k] = block
    hom_w = Morphism(q0, q1, blocks)
    result = cokernel(hom_w).module
    return result.renamed(f"Tr{m.name}" if m.name else "")


def _require_indecomposable(m: Representation, check: bool) -> None:
    if m.is_zero():
        raise RepresentationError("Zero module")
    if check and not is_indecomposable(m):
        raise DecomposableInputError(f"{m.describe()} is decomposable")


def ar_translate(a: AlgebraPresentation, m: Representation, check: bool = True) -> Representation:
    """τM = D Tr M; zero exactly for projective M"""
    _require_indecomposable(m, check)
    tau = dual(a.opposite(), transpose(a, m))
    return tau.renamed(f"t{m.name}" if m.name else "")


def ar_inverse(a: AlgebraPresentation, m: Representation, check: bool = True) -> Representation:
    """τ⁻M = Tr D M; zero exactly for injective M"""
    _require_indecomposable(m, check)
    inv = transpose(a.opposite(), dual(a, m))
    return inv.renamed(f"t-{m.name}" if m.name else "")
