"""
Checks on a knitted table: closure certification, mesh witnesses and the
τ⁻τ round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ar_window.errors import RepresentationError
from ar_window.knitting.table import LINK_FOUND, IndTable
from ar_window.modcat.algebra import AlgebraPresentation
from ar_window.modcat.decomposition import are_isomorphic
from ar_window.modcat.duality import ar_inverse, ar_translate
from ar_window.modcat.linalg import in_column_span
from ar_window.modcat.radical_spaces import RadicalSpaces
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver
from ar_window.utils.logger import logger


def certify_complete(a: AlgebraPresentation, table: IndTable) -> bool:
    """
    True iff enumeration closed without hitting a limit, every translate,
    radical summand and socle-quotient summand it asked for is in the table
    and, once arrows are computed, every mesh is dimension-additive.
    """
    if table.algebra is not a:
        raise RepresentationError("Table was knitted over a different algebra")
    if not table.complete:
        return False
    for entry in table:
        if not entry.projective and entry.tau_link != LINK_FOUND:
            return False
        if not entry.injective and entry.tau_inverse_link != LINK_FOUND:
            return False
        if entry.projective and (entry.radical_summands is None or -1 in entry.radical_summands):
            return False
        if entry.injective and (
            entry.socle_quotient_summands is None or -1 in entry.socle_quotient_summands
        ):
            return False
    window = table.window
    if window is not None:
        everything = frozenset(range(len(table)))
        if window.left_complete != everything or window.right_complete != everything:
            return False
    return True


def _spaces(table: IndTable) -> RadicalSpaces:
    if table.spaces is None:
        table.spaces = RadicalSpaces(table.modules)
    return table.spaces


@dataclass(frozen=True)
class MeshCheck:
    vertex: int
    translate: int
    middle: Tuple[int, ...]
    additive: bool
    composites_in_square: bool
    nonzero_composites: int

    @property
    def ok(self) -> bool:
        return self.additive and self.composites_in_square


def mesh_relation_witness(table: IndTable, q: ValuedTranslationQuiver, z: int) -> MeshCheck:
    """
    Mesh ending at z: dim τz + dim z against Σ multiplicity·dim Y over the
    middle terms, and every composite τz → Y → z of irreducible lifts tested
    for membership in rad²(τz, z).
    """
    x = q.tau(z)
    if x is None or q.is_boundary(z):
        raise RepresentationError(f"Vertex {z} does not end a complete mesh")
    spaces = _spaces(table)
    middle = q.predecessors(z)

    total = np.zeros(len(table.algebra.vertices), dtype=np.int64)
    for y in middle:
        valuation = q.valuation(y, z)
        total += valuation[1] * np.array(table[y].dim_vector)
    expected = np.array(table[x].dim_vector) + np.array(table[z].dim_vector)

    square = spaces.square(x, z)
    inside = True
    nonzero = 0
    for y in middle:
        composite = spaces.compose(
            spaces.irreducible_lifts(y, z), spaces.irreducible_lifts(x, y), x, y, z
        )
        for column in composite.T:
            if column.any():
                nonzero += 1
            if not in_column_span(square, column, spaces.p):
                inside = False
    return MeshCheck(z, x, middle, bool(np.array_equal(total, expected)), inside, nonzero)


def mesh_checks(table: IndTable, q: ValuedTranslationQuiver) -> List[MeshCheck]:
    """One check per complete mesh of the window"""
    checks = [
        mesh_relation_witness(table, q, z)
        for z in q.vertices
        if q.tau(z) is not None and not q.is_boundary(z)
    ]
    failed = [c.vertex for c in checks if not c.ok]
    if failed:
        logger.warning(f"Mesh checks failed at {[table[v].label for v in failed]}")
    return checks


def translation_round_trip_failures(a: AlgebraPresentation, table: IndTable) -> List[str]:
    """Labels of non-projective entries X with τ⁻τX not isomorphic to X"""
    failures = []
    for entry in table:
        if entry.projective:
            continue
        back = ar_inverse(a, ar_translate(a, entry.module, check=False), check=False)
        if not are_isomorphic(back, entry.module, table.seed):
            failures.append(entry.label)
    return failures
