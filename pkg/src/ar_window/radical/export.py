"""
Radical reports: the bundle written by the ``radical`` command, CSV depth
matrices and the window monotonicity comparison.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ar_window.analysis.theorem import Verdict
from ar_window.modcat.decomposition import are_isomorphic
from ar_window.radical.checks import (
    HaradaSaiReport,
    StandardnessReport,
    harada_sai_check,
    is_generalized_standard,
)
from ar_window.radical.cycles import (
    Bound,
    ShortCycleCatalog,
    directing_modules,
    short_cycle_bound,
    short_cycles,
)
from ar_window.radical.filtration import STABLE_NONZERO, RadicalFiltration


@dataclass
class RadicalReport:
    filtration: RadicalFiltration
    catalog: ShortCycleCatalog
    directing: List[int]
    standard: StandardnessReport
    harada_sai: HaradaSaiReport
    seed: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def bound(self) -> Bound:
        return short_cycle_bound(self.catalog)

    @property
    def assertion_failures(self) -> List[str]:
        """Exact-mode facts that must hold for a representation-finite algebra"""
        failures = []
        f = self.filtration
        if not f.exact:
            return failures
        if f.stable_nonzero:
            failures.append("radical of a complete table does not vanish")
        if self.harada_sai.verdict is Verdict.FALSE:
            failures.append(f"Harada-Sai check failed for b={self.harada_sai.length_bound}")
        bound = 2**self.harada_sai.length_bound
        if f.nilpotence_index is not None and f.nilpotence_index > bound:
            failures.append("nilpotence index exceeds 2^b")
        if set(self.directing) & self.catalog.vertices():
            failures.append("a module on a short cycle is reported directing")
        return failures

    def as_dict(self) -> Dict[str, Any]:
        labels = self.filtration.table.labels()
        data = {
            "seed": self.seed,
            "mode": self.filtration.mode,
            "filtration": self.filtration.summary(),
            "short_cycles": self.catalog.as_dict(),
            "short_cycle_bound": self.bound,
            "directing": [labels[v] for v in self.directing],
            "generalized_standard": self.standard.as_dict(),
            "harada_sai": self.harada_sai.as_dict(),
            "assertion_failures": self.assertion_failures,
        }
        data.update(self.extra)
        return data

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def radical_report(filtration: RadicalFiltration, b: Optional[int] = None) -> RadicalReport:
    """Catalog, bound, directing modules and checks; b defaults to the largest dimension"""
    table = filtration.table
    if b is None:
        b = max((e.module.total_dim for e in table), default=1)
    return RadicalReport(
        filtration=filtration,
        catalog=short_cycles(filtration),
        directing=sorted(directing_modules(filtration)),
        standard=is_generalized_standard(filtration),
        harada_sai=harada_sai_check(filtration, max(b, 1)),
        seed=table.seed,
    )


def _depth_cell(filtration: RadicalFiltration, i: int, j: int) -> str:
    value = filtration.max_nonzero_power(i, j)
    if value is None:
        return ""
    if value == STABLE_NONZERO:
        return "inf"
    if value < 0:
        return f">{filtration.max_power}"
    return str(value)


def depth_matrix_csv(filtration: RadicalFiltration) -> str:
    """Largest n with rad^n(row, column) ≠ 0; empty cells for rad = 0"""
    labels = filtration.table.labels()
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + [labels[j] for j in range(filtration.size)])
    for i in range(filtration.size):
        cells = [_depth_cell(filtration, i, j) for j in range(filtration.size)]
        writer.writerow([labels[i]] + cells)
    return out.getvalue()


def power_dims_csv(filtration: RadicalFiltration) -> str:
    """dim rad^n(X, Y) per pair, one row per ordered pair with rad ≠ 0"""
    labels = filtration.table.labels()
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["source", "target"] + [f"rad{n}" for n in range(filtration.computed + 1)])
    for i, j in filtration.pairs():
        dims = filtration.dims(i, j)
        if len(dims) > 1 and dims[1]:
            writer.writerow([labels[i], labels[j]] + dims)
    return out.getvalue()


def _match(small: RadicalFiltration, large: RadicalFiltration) -> Dict[int, int]:
    """Entries of the smaller table mapped to isomorphic entries of the larger one"""
    mapping = {}
    for entry in small.table:
        for other in large.table:
            same_key = other.key == entry.key
            if same_key and are_isomorphic(entry.module, other.module, small.table.seed):
                mapping[entry.index] = other.index
                break
    return mapping


def compare_windows(small: RadicalFiltration, large: RadicalFiltration) -> List[str]:
    """
    Monotonicity violations when the window grows: a witnessed depth that
    drops, or a short-cycle pair that disappears. Empty list when consistent.
    """
    if small.table.algebra is not large.table.algebra:
        raise ValueError("Windows were knitted over different algebras")
    mapping = _match(small, large)
    problems = []
    for entry in small.table:
        if entry.index not in mapping:
            problems.append(f"{entry.label} is missing from the larger window")

    def rank(value: Optional[int]) -> float:
        if value is None:
            return 0
        return float("inf") if value < 0 else value

    for i, mi in mapping.items():
        for j, mj in mapping.items():
            before = rank(small.max_nonzero_power(i, j))
            after = rank(large.max_nonzero_power(mi, mj))
            if after < before:
                problems.append(
                    f"witnessed depth {small.table[i].label}->{small.table[j].label} "
                    f"dropped from {before} to {after}"
                )

    large_pairs = {frozenset((p.first, p.second)) for p in short_cycles(large).pairs}
    for p in short_cycles(small).pairs:
        if p.first in mapping and p.second in mapping:
            if frozenset((mapping[p.first], mapping[p.second])) not in large_pairs:
                first, second = small.table[p.first].label, small.table[p.second].label
                problems.append(f"short cycle {first}<->{second} vanished")
    return problems
