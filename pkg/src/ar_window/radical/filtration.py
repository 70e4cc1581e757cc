"""
Radical powers of the module category restricted to a knitted table.

rad^{n+1}(X, Y) = Σ_Z rad^n(Z, Y) ∘ rad(X, Z) with Z running over the table.
The result is exact when the table is certified complete and a lower bound
(subspace of the true power) otherwise; ``mode`` says which.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ar_window.config.settings import settings
from ar_window.knitting.certify import certify_complete
from ar_window.knitting.table import IndTable
from ar_window.modcat.linalg import in_column_span
from ar_window.modcat.radical_spaces import RadicalSpaces, span
from ar_window.utils.logger import logger

MODE_EXACT = "exact"
MODE_WINDOW = "window"

# max_nonzero_power markers for a pair whose last computed power is nonzero
STABLE_NONZERO = -1  # the chain stabilized at rad^∞ ≠ 0
BEYOND_CAP = -2  # max_power was reached before the chain stabilized

Pair = Tuple[int, int]


@dataclass
class RadicalFiltration:
    """
    ``powers[(i, j)][n]`` spans rad^n(X_i, X_j) for n = 0 .. ``computed``;
    rad^0 is the whole Hom space.
    """

    table: IndTable
    spaces: RadicalSpaces
    mode: str
    max_power: int
    powers: Dict[Pair, List[np.ndarray]] = field(default_factory=dict)
    computed: int = 1
    stable_index: Optional[int] = None
    nilpotence_index: Optional[int] = None
    stabilized_at: Dict[Pair, int] = field(default_factory=dict)
    stable_nonzero: List[Pair] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.mode == MODE_EXACT

    @property
    def stabilized(self) -> bool:
        return self.stable_index is not None

    @property
    def max_power_exceeded(self) -> bool:
        return self.stable_index is None

    @property
    def size(self) -> int:
        return len(self.spaces)

    def pairs(self) -> List[Pair]:
        return sorted(self.powers)

    def rad(self, i: int, j: int, n: int) -> np.ndarray:
        """rad^n(X_i, X_j); powers past the computed range return the last one"""
        chain = self.powers[(i, j)]
        return chain[min(n, len(chain) - 1)]

    def rad_dim(self, i: int, j: int, n: int) -> int:
        return int(self.rad(i, j, n).shape[1])

    def dims(self, i: int, j: int) -> List[int]:
        return [int(b.shape[1]) for b in self.powers[(i, j)]]

    def contains(self, i: int, j: int, n: int, vec: np.ndarray) -> bool:
        return in_column_span(self.rad(i, j, n), vec, self.spaces.p)

    def stable_dim(self, i: int, j: int) -> int:
        return self.rad_dim(i, j, self.computed)

    def max_nonzero_power(self, i: int, j: int) -> Optional[int]:
        """
        Largest n with rad^n(X_i, X_j) ≠ 0 and n ≥ 1; None when rad is zero.
        When the last computed power is still nonzero the result is
        ``STABLE_NONZERO`` if the filtration stabilized and ``BEYOND_CAP`` if
        ``max_power`` stopped it.
        """
        dims = self.dims(i, j)
        if len(dims) < 2 or dims[1] == 0:
            return None
        if dims[-1]:
            return STABLE_NONZERO if self.stabilized else BEYOND_CAP
        return max(n for n, d in enumerate(dims) if d)

    def summary(self) -> Dict[str, object]:
        return {
            "mode": self.mode,
            "modules": self.size,
            "max_power": self.max_power,
            "computed_powers": self.computed,
            "stable_index": self.stable_index,
            "nilpotence_index": self.nilpotence_index,
            "max_power_exceeded": self.max_power_exceeded,
            "stable_nonzero_pairs": [list(p) for p in self.stable_nonzero],
        }


def _next_power(
    spaces: RadicalSpaces, powers: Dict[Pair, List[np.ndarray]], n: int, target: int
) -> Dict[Pair, np.ndarray]:
    """rad^{n+1}(-, X_target) for every source"""
    out = {}
    size = len(spaces)
    for i in range(size):
        current = powers[(i, target)][n]
        if current.shape[1] == 0:
            out[(i, target)] = current
            continue
        parts = []
        for k in range(size):
            first = spaces.rad(i, k)
            second = powers[(k, target)][n]
            if first.shape[1] and second.shape[1]:
                parts.append(spaces.compose(second, first, i, k, target))
        out[(i, target)] = span(parts, spaces.ambient(i, target), spaces.p)
    return out


def radical_filtration(
    table: IndTable,
    max_power: Optional[int] = None,
    workers: Optional[int] = None,
    spaces: Optional[RadicalSpaces] = None,
) -> RadicalFiltration:
    """
    Build the chain rad^0 ⊇ rad^1 ⊇ ... for every ordered pair of table entries
    until two consecutive powers agree everywhere or ``max_power`` is reached.
    Targets are processed in parallel within one power step.
    """
    max_power = int(settings.get("radical.max_power", 64)) if max_power is None else int(max_power)
    workers = int(settings.get("radical.workers", 1)) if workers is None else int(workers)
    if spaces is None:
        spaces = table.spaces
    if spaces is None:
        spaces = RadicalSpaces(table.modules, workers)
    table.spaces = spaces
    mode = MODE_EXACT if certify_complete(table.algebra, table) else MODE_WINDOW
    size = len(spaces)

    powers: Dict[Pair, List[np.ndarray]] = {
        (i, j): [spaces.hom(i, j).matrix, spaces.rad(i, j)]
        for i in range(size)
        for j in range(size)
    }
    filtration = RadicalFiltration(table, spaces, mode, max_power, powers)

    n = 1
    while True:
        if all(powers[pair][n].shape[1] == 0 for pair in powers):
            filtration.stable_index = n
            filtration.nilpotence_index = n
            break
        if n >= max_power:
            logger.warning(f"Radical filtration did not stabilize within {max_power} powers")
            break
        targets = list(range(size))
        if workers > 1 and size > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda t: _next_power(spaces, powers, n, t), targets))
        else:
            results = [_next_power(spaces, powers, n, t) for t in targets]
        for result in results:
            for pair, basis in result.items():
                powers[pair].append(basis)
        n += 1
        if all(powers[pair][n].shape[1] == powers[pair][n - 1].shape[1] for pair in powers):
            filtration.stable_index = n - 1
            break
    filtration.computed = n

    if filtration.stable_index is not None:
        final = filtration.stable_index
        for pair, chain in powers.items():
            last = chain[final].shape[1]
            filtration.stabilized_at[pair] = next(
                k for k in range(final + 1) if chain[k].shape[1] == last
            )
        filtration.stable_nonzero = sorted(p for p, c in powers.items() if c[final].shape[1])
        if filtration.stable_nonzero and filtration.exact:
            logger.error(
                f"Radical of a complete table stabilized nonzero on "
                f"{len(filtration.stable_nonzero)} pairs"
            )

    logger.info(
        f"Radical filtration: mode={mode} modules={size} stable_index={filtration.stable_index} "
        f"nilpotence_index={filtration.nilpotence_index}"
    )
    return filtration
