"""
Valued translation quivers: vertices, valued arrows, a partial injective
translation τ and a set of window-truncated (boundary) vertices.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from ar_window.errors import QuiverError

Valuation = Tuple[int, int]
ArrowKey = Tuple[int, int]
VertexSpec = Union[int, Tuple[int, str]]
ArrowSpec = Union[Tuple[int, int], Tuple[int, int, int, int]]


@dataclass(frozen=True)
class VertexFlags:
    projective: bool
    injective: bool
    truncated: bool


@dataclass(frozen=True)
class Violation:
    """One failed axiom, attached to a vertex and/or an arrow"""

    axiom: str
    message: str
    vertex: Optional[int] = None
    arrow: Optional[ArrowKey] = None

    def __str__(self) -> str:
        where = []
        if self.vertex is not None:
            where.append(f"vertex {self.vertex}")
        if self.arrow is not None:
            where.append(f"arrow {self.arrow[0]}->{self.arrow[1]}")
        return f"[{self.axiom}] {', '.join(where)}: {self.message}"


class ValuedTranslationQuiver:
    """
    Immutable valued translation quiver.

    Parallel arrows are stored as one entry; multiplicity lives in the
    valuation ``(d, d')``. ``tau`` is a partial injective map and
    ``boundary`` lists vertices whose neighbourhoods were cut off by a window.
    """

    def __init__(
        self,
        labels: Mapping[int, str],
        arrows: Mapping[ArrowKey, Valuation],
        tau: Mapping[int, int],
        boundary: Iterable[int] = (),
    ):
        self._labels: Dict[int, str] = dict(labels)
        self._arrows: Dict[ArrowKey, Valuation] = dict(arrows)
        self._tau: Dict[int, int] = dict(tau)
        self._tau_inverse: Dict[int, int] = {x: z for z, x in self._tau.items()}
        self._boundary: FrozenSet[int] = frozenset(boundary)

        succ: Dict[int, List[int]] = defaultdict(list)
        pred: Dict[int, List[int]] = defaultdict(list)
        for (a, b) in self._arrows:
            succ[a].append(b)
            pred[b].append(a)
        self._succ = {v: tuple(sorted(succ.get(v, ()))) for v in self._labels}
        self._pred = {v: tuple(sorted(pred.get(v, ()))) for v in self._labels}
        self._vertices = tuple(sorted(self._labels))

    # -- basic access -------------------------------------------------------

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def arrows(self) -> Mapping[ArrowKey, Valuation]:
        return MappingProxyType(self._arrows)

    @property
    def tau_map(self) -> Mapping[int, int]:
        return MappingProxyType(self._tau)

    @property
    def boundary(self) -> FrozenSet[int]:
        return self._boundary

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._labels

    def label(self, v: int) -> str:
        return self._labels[self.require(v)]

    def require(self, v: int) -> int:
        if v not in self._labels:
            raise QuiverError(f"Unknown vertex: {v}")
        return v

    def successors(self, v: int) -> Tuple[int, ...]:
        return self._succ[self.require(v)]

    def predecessors(self, v: int) -> Tuple[int, ...]:
        return self._pred[self.require(v)]

    def has_arrow(self, a: int, b: int) -> bool:
        return (a, b) in self._arrows

    def valuation(self, a: int, b: int) -> Optional[Valuation]:
        return self._arrows.get((a, b))

    def tau(self, v: int) -> Optional[int]:
        return self._tau.get(self.require(v))

    def tau_inverse(self, v: int) -> Optional[int]:
        return self._tau_inverse.get(self.require(v))

    def tau_power(self, v: int, k: int) -> Optional[int]:
        """τ^k v for k >= 0, τ^{-k} for k < 0; None when the chain leaves the data"""
        step = self.tau if k >= 0 else self.tau_inverse
        current: Optional[int] = v
        for _ in range(abs(k)):
            if current is None:
                return None
            current = step(current)
        return current

    def is_boundary(self, v: int) -> bool:
        return self.require(v) in self._boundary

    def flags(self, v: int) -> VertexFlags:
        truncated = self.is_boundary(v)
        return VertexFlags(
            projective=v not in self._tau and not truncated,
            injective=v not in self._tau_inverse and not truncated,
            truncated=truncated,
        )

    def projectives(self) -> Tuple[int, ...]:
        return tuple(v for v in self._vertices if self.flags(v).projective)

    def injectives(self) -> Tuple[int, ...]:
        return tuple(v for v in self._vertices if self.flags(v).injective)

    # -- derived quivers ----------------------------------------------------

    def full_subquiver(self, keep: Iterable[int]) -> "ValuedTranslationQuiver":
        """Full subquiver on ``keep``; vertices that lose a neighbour or τ-link become boundary"""
        kept = {self.require(v) for v in keep}
        boundary = set(self._boundary & kept)
        for v in kept:
            neighbours = set(self._succ[v]) | set(self._pred[v])
            links = {self._tau.get(v), self._tau_inverse.get(v)} - {None}
            if not (neighbours | links) <= kept:
                boundary.add(v)
        return ValuedTranslationQuiver(
            {v: self._labels[v] for v in kept},
            {k: val for k, val in self._arrows.items() if k[0] in kept and k[1] in kept},
            {z: x for z, x in self._tau.items() if z in kept and x in kept},
            boundary,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValuedTranslationQuiver):
            return NotImplemented
        return (
            self._labels == other._labels
            and self._arrows == other._arrows
            and self._tau == other._tau
            and self._boundary == other._boundary
        )

    def __repr__(self) -> str:
        return (
            f"ValuedTranslationQuiver(vertices={len(self._vertices)}, "
            f"arrows={len(self._arrows)}, tau={len(self._tau)}, boundary={len(self._boundary)})"
        )


def build(
    vertices: Iterable[VertexSpec],
    arrows: Iterable[ArrowSpec],
    tau_pairs: Iterable[Tuple[int, int]],
    boundary: Iterable[int] = (),
) -> ValuedTranslationQuiver:
    """
    Build a quiver from plain data.

    ``vertices`` are ids or ``(id, label)`` pairs. ``arrows`` are ``(src, tgt)``
    or ``(src, tgt, d, d')``; repeated unvalued entries merge into ``(m, m)``,
    repeated valued entries add up. ``tau_pairs`` are ``(z, x)`` meaning τ(z)=x.
    """
    labels: Dict[int, str] = {}
    for spec in vertices:
        if isinstance(spec, tuple):
            vid, label = int(spec[0]), str(spec[1])
        else:
            vid, label = int(spec), str(spec)
        if vid in labels:
            raise QuiverError(f"Duplicate vertex id: {vid}")
        labels[vid] = label

    merged: Dict[ArrowKey, List[int]] = {}
    for spec in arrows:
        if len(spec) == 2:
            src, tgt = spec  # type: ignore[misc]
            d, d_prime = 1, 1
        elif len(spec) == 4:
            src, tgt, d, d_prime = spec  # type: ignore[misc]
        else:
            raise QuiverError(f"Arrow spec must have 2 or 4 entries: {spec!r}")
        for end in (src, tgt):
            if end not in labels:
                raise QuiverError(f"Dangling arrow endpoint {end} in {src}->{tgt}")
        if d <= 0 or d_prime <= 0:
            raise QuiverError(f"Valuation of {src}->{tgt} must be positive, got ({d},{d_prime})")
        entry = merged.setdefault((src, tgt), [0, 0])
        entry[0] += d
        entry[1] += d_prime

    tau: Dict[int, int] = {}
    seen_targets: Dict[int, int] = {}
    for z, x in tau_pairs:
        for end in (z, x):
            if end not in labels:
                raise QuiverError(f"Translation references unknown vertex {end}")
        if z in tau and tau[z] != x:
            raise QuiverError(f"Translation defined twice for vertex {z}")
        if x in seen_targets and seen_targets[x] != z:
            raise QuiverError(
                f"Non-injective translation: tau({seen_targets[x]}) = tau({z}) = {x}"
            )
        tau[z] = x
        seen_targets[x] = z

    for v in boundary:
        if v not in labels:
            raise QuiverError(f"Boundary flag on unknown vertex {v}")

    return ValuedTranslationQuiver(
        labels, {k: (v[0], v[1]) for k, v in merged.items()}, tau, boundary
    )


def validate(q: ValuedTranslationQuiver) -> List[Violation]:
    """
    Check the translation axiom on every non-boundary vertex with τ defined:
    y→z valued (a, b) iff τz→y valued (b, a). Returns violations (empty iff valid).
    """
    violations: List[Violation] = []

    for (a, b), (d, d_prime) in sorted(q.arrows.items()):
        if d <= 0 or d_prime <= 0:
            violations.append(
                Violation("valuation", f"non-positive valuation ({d},{d_prime})", arrow=(a, b))
            )

    seen: Dict[int, int] = {}
    for z, x in sorted(q.tau_map.items()):
        if x in seen:
            violations.append(
                Violation("tau-injective", f"tau({seen[x]}) = tau({z}) = {x}", vertex=z)
            )
        seen[x] = z

    for z in q.vertices:
        x = q.tau(z)
        if x is None or q.is_boundary(z):
            continue
        into_z = {y: q.valuation(y, z) for y in q.predecessors(z)}
        out_of_x = {y: q.valuation(x, y) for y in q.successors(x)}
        for y in sorted(set(into_z) | set(out_of_x)):
            incoming = into_z.get(y)
            outgoing = out_of_x.get(y)
            if incoming is None:
                violations.append(
                    Violation(
                        "translation-axiom",
                        f"arrow {x}->{y} out of tau({z}) has no partner arrow {y}->{z}",
                        vertex=z,
                        arrow=(x, y),
                    )
                )
            elif outgoing is None:
                violations.append(
                    Violation(
                        "translation-axiom",
                        f"arrow {y}->{z} has no partner arrow {x}->{y} out of tau({z})",
                        vertex=z,
                        arrow=(y, z),
                    )
                )
            elif (incoming[1], incoming[0]) != outgoing:
                violations.append(
                    Violation(
                        "translation-axiom",
                        f"valuation {incoming} on {y}->{z} does not mirror {outgoing} on {x}->{y}",
                        vertex=z,
                        arrow=(y, z),
                    )
                )
    return violations


def is_valid(q: ValuedTranslationQuiver) -> bool:
    return not validate(q)

