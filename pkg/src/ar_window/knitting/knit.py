"""
Knitting: a FIFO worklist closes the seed modules under τ, τ⁻ and the
summands of rad X and X/soc X. Arrows and valuations are read off
rad/rad² computed through the table once enumeration stops.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, Iterable, List, Optional, Tuple

import numpy as np

from ar_window.config.settings import settings
from ar_window.errors import RepresentationError
from ar_window.knitting.table import (
    LINK_CUT,
    LINK_FOUND,
    LINK_NONE,
    LINK_PENDING,
    Fingerprint,
    IndTable,
    KnitLimits,
    TableEntry,
    WindowData,
    fingerprint,
)
from ar_window.modcat.algebra import AlgebraPresentation
from ar_window.modcat.decomposition import are_isomorphic, indecomposable_summands
from ar_window.modcat.duality import ar_inverse, ar_translate
from ar_window.modcat.radical_spaces import RadicalSpaces
from ar_window.modcat.representation import Representation, injective, projective, simple
from ar_window.modcat.submodules import quotient, radical_of_module, socle
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, build
from ar_window.utils.logger import logger

Pair = Tuple[int, int]


@dataclass(frozen=True)
class _Standard:
    kind: str
    name: str
    module: Representation
    key: Fingerprint


class Knitter:
    """Worklist enumeration of indecomposables for one algebra"""

    def __init__(
        self,
        algebra: AlgebraPresentation,
        limits: Optional[KnitLimits] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        self.algebra = algebra
        self.limits = limits or KnitLimits()
        self.seed = int(settings.get("run.seed", 0)) if seed is None else int(seed)
        self.workers = int(settings.get("radical.workers", 1)) if workers is None else int(workers)
        self.table = IndTable(algebra, self.seed)
        self._queue: Deque[int] = deque()
        self._standard: List[_Standard] = []
        for kind, build_module in (("P", projective), ("I", injective), ("S", simple)):
            for v in algebra.vertices:
                m = build_module(algebra, v)
                self._standard.append(_Standard(kind, m.name, m, fingerprint(m)))

    # enumeration

    def _matches(self, m: Representation, key: Fingerprint) -> List[_Standard]:
        return [
            s for s in self._standard if s.key == key and are_isomorphic(s.module, m, self.seed)
        ]

    def register(self, m: Representation, provenance: str, tau_steps: int) -> Optional[int]:
        """Table index of m, adding it when new; None when a limit refuses it"""
        if m.total_dim > self.limits.max_dim:
            self.table.record_limit(f"max_dim {self.limits.max_dim} exceeded ({provenance})")
            return None
        key = fingerprint(m)
        found = self.table.find(m, key)
        if found is not None:
            return found
        if len(self.table) >= self.limits.max_modules:
            self.table.record_limit(f"max_modules {self.limits.max_modules} reached ({provenance})")
            return None

        matches = self._matches(m, key)
        entry = self.table.add(m, provenance, tau_steps, key)
        entry.names = [s.name for s in matches]
        entry.projective = any(s.kind == "P" for s in matches)
        entry.injective = any(s.kind == "I" for s in matches)
        entry.module = m.renamed(entry.label)
        if entry.projective:
            entry.tau_link = LINK_NONE
        if entry.injective:
            entry.tau_inverse_link = LINK_NONE
        self._queue.append(entry.index)
        logger.debug(f"Knit: new module {entry.label} dim={entry.dim_vector} from {provenance}")
        return entry.index

    def _register_summands(self, m: Representation, provenance: str, tau_steps: int) -> List[int]:
        if m.is_zero():
            return []
        found = []
        for summand in indecomposable_summands(m, self.seed):
            idx = self.register(summand, provenance, tau_steps)
            found.append(-1 if idx is None else idx)
        return found

    def _link(self, entry: TableEntry, idx: Optional[int], forward: bool) -> None:
        if idx is None:
            if forward:
                entry.tau_link = LINK_CUT
            else:
                entry.tau_inverse_link = LINK_CUT
            return
        other = self.table[idx]
        if forward:
            entry.tau, entry.tau_link = idx, LINK_FOUND
            if other.tau_inverse_link == LINK_PENDING:
                other.tau_inverse, other.tau_inverse_link = entry.index, LINK_FOUND
            elif other.tau_inverse != entry.index:
                logger.warning(f"tau({entry.label}) = {other.label} disagrees with an earlier link")
        else:
            entry.tau_inverse, entry.tau_inverse_link = idx, LINK_FOUND
            if other.tau_link == LINK_PENDING:
                other.tau, other.tau_link = entry.index, LINK_FOUND
            elif other.tau != entry.index:
                logger.warning(
                    f"tau-({entry.label}) = {other.label} disagrees with an earlier link"
                )

    def _step(self, entry: TableEntry) -> None:
        a = self.algebra
        m = entry.module
        label = entry.label

        # rad X and X/soc X of every entry, not only of projectives and injectives
        below = self._register_summands(
            radical_of_module(m).module, f"rad {label}", entry.tau_steps
        )
        above = self._register_summands(
            quotient(m, socle(m).bases).module, f"{label}/soc", entry.tau_steps
        )
        if entry.projective:
            entry.radical_summands = below
        if entry.injective:
            entry.socle_quotient_summands = above

        if not entry.projective and entry.tau_link == LINK_PENDING:
            if entry.tau_steps >= self.limits.max_tau_steps:
                self.table.record_limit(f"max_tau_steps {self.limits.max_tau_steps} at {label}")
                entry.tau_link = LINK_CUT
            else:
                translate = ar_translate(a, m, check=False)
                found = self.register(translate, f"tau {label}", entry.tau_steps + 1)
                self._link(entry, found, forward=True)

        if not entry.injective and entry.tau_inverse_link == LINK_PENDING:
            if entry.tau_steps >= self.limits.max_tau_steps:
                self.table.record_limit(f"max_tau_steps {self.limits.max_tau_steps} at {label}")
                entry.tau_inverse_link = LINK_CUT
            else:
                inverse = ar_inverse(a, m, check=False)
                found = self.register(inverse, f"tau- {label}", entry.tau_steps + 1)
                self._link(entry, found, forward=False)

    def enumerate(self, seeds: Optional[Iterable[Representation]] = None) -> IndTable:
        if seeds is None:
            seeds = [s.module for s in self._standard if s.kind in ("P", "I")]
        for m in seeds:
            if m.algebra is not self.algebra:
                raise RepresentationError("Seed module does not live over the knitted algebra")
            self._register_summands(m, f"seed {m.describe()}", 0)

        while self._queue:
            self._step(self.table[self._queue.popleft()])

        self.table.closed = True
        logger.info(
            f"Knit enumeration finished: {len(self.table)} modules, "
            f"complete={self.table.complete}, limits hit={len(self.table.limit_hits)}"
        )
        return self.table

    # arrows

    def _additive(
        self, spaces: RadicalSpaces, irr: Dict[Pair, int], i: int, other: int, left: bool
    ) -> bool:
        """Mesh additivity at entry i: Σ multiplicity·dim = dim i + dim other"""
        table = self.table
        expected = np.array(table[i].dim_vector) + np.array(table[other].dim_vector)
        total = np.zeros_like(expected)
        for k in range(len(table)):
            value = irr.get((k, i) if left else (i, k), 0)
            if not value:
                continue
            e = spaces.top_dim(k)
            if value % e:
                return False
            total += (value // e) * np.array(table[k].dim_vector)
        return bool(np.array_equal(total, expected))

    def _is_left_complete(
        self, spaces: RadicalSpaces, irr: Dict[Pair, int], entry: TableEntry
    ) -> bool:
        if entry.projective:
            return entry.radical_summands is not None and -1 not in entry.radical_summands
        if entry.tau_link != LINK_FOUND or entry.tau is None:
            return False
        return self._additive(spaces, irr, entry.index, entry.tau, left=True)

    def _is_right_complete(
        self, spaces: RadicalSpaces, irr: Dict[Pair, int], entry: TableEntry
    ) -> bool:
        if entry.injective:
            summands = entry.socle_quotient_summands
            return summands is not None and -1 not in summands
        if entry.tau_inverse_link != LINK_FOUND or entry.tau_inverse is None:
            return False
        return self._additive(spaces, irr, entry.index, entry.tau_inverse, left=False)

    def window(self) -> ValuedTranslationQuiver:
        """Arrows, valuations and translation of the enumerated table"""
        table = self.table
        spaces = RadicalSpaces(table.modules, self.workers)
        n = len(table)
        irr: Dict[Pair, int] = {}
        for i in range(n):
            for j in range(n):
                value = spaces.irreducible_dim(i, j)
                if value:
                    irr[(i, j)] = value

        left = frozenset(e.index for e in table if self._is_left_complete(spaces, irr, e))
        right = frozenset(e.index for e in table if self._is_right_complete(spaces, irr, e))
        data = WindowData(irr, {i: spaces.top_dim(i) for i in range(n)}, left, right)
        table.spaces = spaces
        table.window = data

        arrows = []
        for (i, j) in sorted(irr):
            if j in left or i in right:
                valuation = data.valuation(i, j)
                if valuation is None:
                    logger.warning(
                        f"Skipping {table[i].label} -> {table[j].label}: "
                        f"rad/rad² has no integral valuation"
                    )
                    continue
                arrows.append((i, j) + valuation)
        tau_pairs = [(e.index, e.tau) for e in table if e.tau is not None]
        boundary = [e.index for e in table if e.index not in left or e.index not in right]
        quiver = build([(e.index, e.label) for e in table], arrows, tau_pairs, boundary)
        logger.info(
            f"Knit window: {len(quiver)} vertices, {len(quiver.arrows)} arrows, "
            f"{len(quiver.boundary)} on the boundary"
        )
        return quiver


def knit(
    algebra: AlgebraPresentation,
    seeds: Optional[Iterable[Representation]] = None,
    limits: Optional[KnitLimits] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[IndTable, ValuedTranslationQuiver]:
    """Enumerate from ``seeds`` (default: every P_i and I_i) and assemble the window"""
    knitter = Knitter(algebra, limits, seed, workers)
    table = knitter.enumerate(seeds)
    return table, knitter.window()
