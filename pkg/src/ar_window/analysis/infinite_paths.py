"""
The two infinite sectional paths through a common module, built from a
sectional path τ^m X_1 → X_n → ... → X_1 (m > n >= 1) of a semi-stable
component with oriented cycles.

Entries are symbolic, ``(shift, base)`` standing for τ^shift base; they are
resolved against the window only for verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ar_window.analysis.paths import PathInQuiver, is_sectional
from ar_window.analysis.stability import tau_orbits
from ar_window.errors import QuiverError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver
from ar_window.utils.logger import logger


@dataclass(frozen=True)
class SchemaEntry:
    shift: int
    base: int

    def resolve(self, q: ValuedTranslationQuiver) -> Optional[int]:
        return q.tau_power(self.base, self.shift)

    def __str__(self) -> str:
        return f"tau^{self.shift}({self.base})" if self.shift else str(self.base)


@dataclass(frozen=True)
class InfinitePathSchemas:
    """
    ``incoming`` lists M_1, M_2, ... with arrows M_{k+1} → M_k;
    ``outgoing`` lists N_1, N_2, ... with arrows N_k → N_{k+1}.
    Both repeat under τ^t after ``incoming_period`` and ``outgoing_period`` steps.
    """

    m: int
    n: int
    t: int
    incoming: Tuple[SchemaEntry, ...]
    outgoing: Tuple[SchemaEntry, ...]
    incoming_period: int
    outgoing_period: int
    checked_arrows: int
    failures: Tuple[str, ...]

    @property
    def verified(self) -> bool:
        return not self.failures

    @property
    def anchor(self) -> SchemaEntry:
        return self.incoming[0]


def _orbit_index(q: ValuedTranslationQuiver) -> Dict[int, int]:
    index = {}
    for number, orbit in enumerate(tau_orbits(q)):
        for v in orbit:
            index[v] = number
    return index


def _translation_exponent(q: ValuedTranslationQuiver, start: int, target: int) -> Optional[int]:
    for k in range(1, len(q) + 1):
        w = q.tau_power(start, k)
        if w is None:
            return None
        if w == target:
            return k
    return None


def _verify(
    q: ValuedTranslationQuiver, entries: Sequence[SchemaEntry], name: str, forward: bool
) -> Tuple[int, List[str]]:
    """Check arrows (and the sectional condition) between consecutive resolvable entries"""
    resolved = [e.resolve(q) for e in entries]
    # walk in arrow direction
    if not forward:
        resolved = resolved[::-1]
        labels = [str(e) for e in entries][::-1]
    else:
        labels = [str(e) for e in entries]
    checked = 0
    failures: List[str] = []
    for i in range(len(resolved) - 1):
        a, b = resolved[i], resolved[i + 1]
        if a is None or b is None:
            continue
        checked += 1
        if not q.has_arrow(a, b):
            failures.append(f"{name}: missing arrow {labels[i]} -> {labels[i + 1]} ({a}->{b})")
            continue
        if i >= 1 and resolved[i - 1] is not None and q.tau(b) == resolved[i - 1]:
            failures.append(f"{name}: not sectional at {labels[i]} ({a})")
    return checked, failures


def ss_cpt_paths(
    q: ValuedTranslationQuiver, path: PathInQuiver, blocks: int = 2
) -> InfinitePathSchemas:
    """
    Build both schemas from ``path`` = [τ^m X_1, X_n, ..., X_1] and verify every
    schema arrow whose endpoints lie in the window. ``blocks`` counts the
    τ^t-periods generated for each schema.
    """
    if path.length < 1:
        raise QuiverError("Path must have length at least 1")
    if not is_sectional(q, path):
        raise QuiverError(f"Path {path} is not sectional")

    v = path.vertices
    n = path.length
    xs = {i: v[n + 1 - i] for i in range(1, n + 1)}  # X_i
    m = _translation_exponent(q, xs[1], v[0])
    if m is None:
        raise QuiverError(f"{v[0]} is not a tau-translate of {xs[1]} inside the window")
    if m <= n:
        raise QuiverError(f"Translation exponent m={m} must exceed the path length n={n}")

    orbit = _orbit_index(q)
    seen: Dict[int, int] = {}
    for i, x in xs.items():
        if orbit[x] in seen:
            raise QuiverError(f"X_{seen[orbit[x]]} and X_{i} lie in the same tau-orbit")
        seen[orbit[x]] = i

    t = m * (m - n)
    # τ^t reached after (m-n) blocks of n incoming steps, m blocks of n outgoing steps
    incoming_period = n * (m - n)
    outgoing_period = n * m

    ys = [SchemaEntry(0, xs[n])] + [SchemaEntry(m, xs[i - 1]) for i in range(2, n + 1)]
    zs = [SchemaEntry(0, xs[n])] + [SchemaEntry(m - (i - 1), xs[i - 1]) for i in range(2, n + 1)]

    incoming = tuple(
        SchemaEntry(j * m + y.shift, y.base)
        for j in range(blocks * (m - n))
        for y in ys
    ) + (SchemaEntry(blocks * t, xs[n]),)
    outgoing = tuple(
        SchemaEntry(j * (m - n) + z.shift, z.base)
        for j in range(blocks * m)
        for z in zs
    ) + (SchemaEntry(blocks * t, xs[n]),)

    checked_in, failed_in = _verify(q, incoming, "incoming", forward=False)
    checked_out, failed_out = _verify(q, outgoing, "outgoing", forward=True)
    failures = tuple(failed_in + failed_out)
    if failures:
        logger.warning(f"Infinite path schema verification failed: {failures[0]}")
    else:
        logger.debug(f"Infinite path schemas verified: m={m} n={n} t={t}")

    return InfinitePathSchemas(
        m=m,
        n=n,
        t=t,
        incoming=incoming,
        outgoing=outgoing,
        incoming_period=incoming_period,
        outgoing_period=outgoing_period,
        checked_arrows=checked_in + checked_out,
        failures=failures,
    )
