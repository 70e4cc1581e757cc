"""
Bound quiver algebras kQ/I over GF(p).

Paths are written in traversal order: ``a.b`` first follows ``a`` then ``b``.
Relations must be linear combinations of parallel paths of length >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ar_window.errors import PresentationError
from ar_window.modcat.linalg import DEFAULT_PRIME, check_field_order, rref_mod, zeros
from ar_window.utils.logger import logger

DEFAULT_NILPOTENCE_BOUND = 12


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class QPath:
    source: int
    target: int
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self) -> Tuple[int, int, int, Tuple[str, ...]]:
        return (self.length, self.source, self.target, self.arrows)

    def __str__(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e{self.source}"


@dataclass(frozen=True)
class Relation:
    """Σ coefficient·path with all paths sharing source and target"""

    terms: Tuple[Tuple[int, Tuple[str, ...]], ...]

    @classmethod
    def from_terms(
        cls, terms: Iterable[Tuple[int, Sequence[str]]], p: int
    ) -> "Relation":
        combined: Dict[Tuple[str, ...], int] = {}
        for coef, path in terms:
            key = tuple(path)
            combined[key] = (combined.get(key, 0) + int(coef)) % p
        kept = [(c, path) for path, c in combined.items() if c]
        return cls(tuple(sorted(kept, key=lambda t: (len(t[1]), t[1]))))

    @property
    def min_length(self) -> int:
        return min(len(path) for _, path in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"{c}*{'.'.join(path)}" for c, path in self.terms) + " = 0"


RelationLike = Union[Relation, Iterable[Tuple[int, Sequence[str]]]]


class AlgebraPresentation:
    """Quiver, admissible relations and the prime field order p"""

    def __init__(
        self,
        vertices: Iterable[int],
        arrows: Iterable[Union[Arrow, Tuple[str, int, int]]],
        relations: Iterable[RelationLike] = (),
        p: int = DEFAULT_PRIME,
        labels: Optional[Mapping[int, str]] = None,
        nilpotence_bound: int = DEFAULT_NILPOTENCE_BOUND,
    ):
        try:
            self.p = check_field_order(p)
        except ValueError as e:
            raise PresentationError(str(e)) from e
        self.nilpotence_bound = int(nilpotence_bound)

        self._vertices: Tuple[int, ...] = tuple(vertices)
        if len(set(self._vertices)) != len(self._vertices):
            raise PresentationError("Duplicate vertex id")
        if not self._vertices:
            raise PresentationError("Algebra needs at least one vertex")
        self._labels = {v: str(v) for v in self._vertices}
        self._labels.update({v: str(name) for v, name in (labels or {}).items()})

        self._arrows: Dict[str, Arrow] = {}
        for a in arrows:
            arrow = a if isinstance(a, Arrow) else Arrow(str(a[0]), int(a[1]), int(a[2]))
            if arrow.name in self._arrows:
                raise PresentationError(f"Duplicate arrow name {arrow.name!r}")
            for end in (arrow.source, arrow.target):
                if end not in self._labels:
                    raise PresentationError(f"Arrow {arrow.name!r} uses unknown vertex {end}")
            self._arrows[arrow.name] = arrow

        self._relations: List[Relation] = []
        for rel in relations:
            relation = rel if isinstance(rel, Relation) else Relation.from_terms(rel, self.p)
            self._check_relation(relation)
            self._relations.append(relation)

    def _check_relation(self, relation: Relation) -> None:
        if not relation.terms:
            raise PresentationError("Relation is zero over the field")
        ends = set()
        for _, path in relation.terms:
            if len(path) < 2:
                raise PresentationError(
                    f"Relation {relation} is not admissible: term of length {len(path)}"
                )
            ends.add(self.path_endpoints(path))
        if len(ends) != 1:
            raise PresentationError(f"Relation {relation} combines non-parallel paths")

    # quiver data

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return tuple(self._arrows.values())

    @property
    def relations(self) -> Tuple[Relation, ...]:
        return tuple(self._relations)

    def label(self, v: int) -> str:
        return self._labels[v]

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise PresentationError(f"Unknown arrow {name!r}") from None

    def arrows_from(self, v: int) -> Tuple[Arrow, ...]:
        return tuple(a for a in self._arrows.values() if a.source == v)

    def arrows_to(self, v: int) -> Tuple[Arrow, ...]:
        return tuple(a for a in self._arrows.values() if a.target == v)

    def path_endpoints(self, path: Sequence[str]) -> Tuple[int, int]:
        if not path:
            raise PresentationError("Empty arrow sequence has no endpoints")
        arrows = [self.arrow(name) for name in path]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise PresentationError(f"Arrows {first.name} and {second.name} do not compose")
        return arrows[0].source, arrows[-1].target

    def qpath(self, path: Sequence[str]) -> QPath:
        s, t = self.path_endpoints(path)
        return QPath(s, t, tuple(path))

    # derived objects

    def opposite(self) -> "AlgebraPresentation":
        """Same vertices, every arrow reversed, relation paths read backwards"""
        cached = self.__dict__.get("_opposite")
        if cached is not None:
            return cached
        op = AlgebraPresentation(
            self._vertices,
            [Arrow(a.name, a.target, a.source) for a in self._arrows.values()],
            [
                Relation.from_terms(((c, tuple(reversed(path))) for c, path in r.terms), self.p)
                for r in self._relations
            ],
            p=self.p,
            labels=self._labels,
            nilpotence_bound=self.nilpotence_bound,
        )
        op.__dict__["_opposite"] = self
        self.__dict__["_opposite"] = op
        return op

    @cached_property
    def algebra(self) -> "PathAlgebra":
        return PathAlgebra(self, self.nilpotence_bound)

    @property
    def nilpotence_index(self) -> int:
        return self.algebra.nilpotence_index

    def __repr__(self) -> str:
        return (
            f"AlgebraPresentation(vertices={len(self._vertices)}, arrows={len(self._arrows)}, "
            f"relations={len(self._relations)}, p={self.p})"
        )


class PathAlgebra:
    """
    kQ/I realised inside kQ/R^{L+1}, with L the first level at which every
    path of length L already lies in the relation ideal.

    The ideal is kept in reduced row echelon form with long paths as leading
    columns; the paths that are not pivots form the basis of the algebra.
    """

    def __init__(self, presentation: AlgebraPresentation, bound: int = DEFAULT_NILPOTENCE_BOUND):
        self.presentation = presentation
        self.p = presentation.p
        for level in range(1, bound + 1):
            self._build(level)
            if all(not self.normal_form(self._unit(path)).any() for path in self._by_length[level]):
                break
        else:
            raise PresentationError(
                f"Relations are not admissible within nilpotence bound {bound}"
            )
        self.level = level
        self.nilpotence_index = next(
            n
            for n in range(1, level + 1)
            if all(not self.normal_form(self._unit(path)).any() for path in self._by_length[n])
        )
        pivot_set = set(self._pivots)
        self.basis: Tuple[QPath, ...] = tuple(
            sorted(
                (path for k, path in enumerate(self._paths) if k not in pivot_set),
                key=QPath.sort_key,
            )
        )
        self._basis_position = {path: k for k, path in enumerate(self.basis)}
        logger.debug(
            f"Path algebra: dim={len(self.basis)} level={self.level} "
            f"nilpotence_index={self.nilpotence_index}"
        )

    def _build(self, level: int) -> None:
        a = self.presentation
        by_length: List[List[QPath]] = [[QPath(v, v) for v in a.vertices]]
        for _ in range(level):
            longer = []
            for path in by_length[-1]:
                for arrow in a.arrows_from(path.target):
                    longer.append(QPath(path.source, arrow.target, path.arrows + (arrow.name,)))
            by_length.append(longer)
        self._by_length = by_length

        # long paths first so that pivots fall on them
        self._paths: List[QPath] = [
            path for group in reversed(by_length) for path in sorted(group, key=QPath.sort_key)
        ]
        self._index: Dict[QPath, int] = {path: k for k, path in enumerate(self._paths)}

        rows = []
        for relation in a.relations:
            s, t = a.path_endpoints(relation.terms[0][1])
            spare = level - relation.min_length
            if spare < 0:
                continue
            for left_len in range(spare + 1):
                for u in by_length[left_len]:
                    if u.target != s:
                        continue
                    for right_len in range(spare - left_len + 1):
                        for v in by_length[right_len]:
                            if v.source != t:
                                continue
                            row = zeros(1, len(self._paths))[0]
                            for coef, path in relation.terms:
                                word = u.arrows + tuple(path) + v.arrows
                                if len(word) <= level:
                                    row[self._index[QPath(u.source, v.target, word)]] += coef
                            row %= self.p
                            if row.any():
                                rows.append(row)
        if rows:
            reduced, pivots = rref_mod(np.array(rows, dtype=np.int64), self.p)
            self._rows = reduced[: len(pivots)]
            self._pivots = pivots
        else:
            self._rows = zeros(0, len(self._paths))
            self._pivots = []

    def _unit(self, path: QPath) -> np.ndarray:
        vec = zeros(1, len(self._paths))[0]
        vec[self._index[path]] = 1
        return vec

    def normal_form(self, vec: np.ndarray) -> np.ndarray:
        out = np.asarray(vec, dtype=np.int64) % self.p
        for row, pc in zip(self._rows, self._pivots):
            if out[pc]:
                out = (out - out[pc] * row) % self.p
        return out

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_paths(self, source: int, target: int) -> List[QPath]:
        return [q for q in self.basis if q.source == source and q.target == target]

    def reduce(self, arrows: Sequence[str], source: Optional[int] = None) -> Dict[QPath, int]:
        """Coordinates of the residue class of a path over the basis"""
        if arrows:
            path = self.presentation.qpath(arrows)
        elif source is not None:
            path = QPath(source, source)
        else:
            raise PresentationError("Trivial path needs its vertex")
        if path.length > self.level:
            return {}
        nf = self.normal_form(self._unit(path))
        return {
            self._paths[k]: int(nf[k])
            for k in np.nonzero(nf)[0]
        }

    def multiply(self, left: QPath, right: QPath) -> Dict[QPath, int]:
        """Coordinates of left·right (left traversed first); empty when they do not compose"""
        if left.target != right.source:
            return {}
        if not left.arrows and not right.arrows:
            return {left: 1}
        return self.reduce(left.arrows + right.arrows, left.source)

    def coordinate_position(self, path: QPath) -> int:
        return self._basis_position[path]


def check_presentation(a: AlgebraPresentation) -> int:
    """Nilpotence index of the arrow ideal modulo the relations; raises PresentationError"""
    return a.nilpotence_index
