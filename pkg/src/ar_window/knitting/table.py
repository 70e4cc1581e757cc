"""
IndTable: pairwise non-isomorphic indecomposables found while knitting,
with their provenance, standard names and translation links.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

from ar_window.config.run_config import RunConfig
from ar_window.errors import ConfigError
from ar_window.modcat.algebra import AlgebraPresentation
from ar_window.modcat.decomposition import are_isomorphic
from ar_window.modcat.radical_spaces import RadicalSpaces
from ar_window.modcat.representation import Representation
from ar_window.modcat.submodules import socle_vector, top_vector
from ar_window.modcat.textio import dumps_module

Fingerprint = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
Pair = Tuple[int, int]

# link states for tau / tau_inverse
LINK_NONE = "none"  # projective (for tau) or injective (for tau_inverse)
LINK_FOUND = "found"
LINK_CUT = "cut"  # a limit stopped the computation
LINK_PENDING = "pending"


@dataclass(frozen=True)
class KnitLimits:
    max_modules: int = 60
    max_dim: int = 12
    max_tau_steps: int = 12

    def __post_init__(self):
        for name in ("max_modules", "max_dim", "max_tau_steps"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")

    @classmethod
    def from_run_config(cls, run: RunConfig) -> "KnitLimits":
        return cls(run.max_modules, run.max_dim, run.max_tau_steps)


@dataclass
class WindowData:
    """What the arrow computation learnt about the table"""

    irreducible: Dict[Pair, int]
    top_dims: Dict[int, int]
    left_complete: FrozenSet[int]
    right_complete: FrozenSet[int]

    def valuation(self, i: int, j: int) -> Optional[Tuple[int, int]]:
        """(dim over D_j, dim over D_i) of rad/rad² from i to j"""
        irr = self.irreducible.get((i, j), 0)
        if not irr or irr % self.top_dims[j] or irr % self.top_dims[i]:
            return None
        return irr // self.top_dims[j], irr // self.top_dims[i]


def fingerprint(m: Representation) -> Fingerprint:
    """Dimension vector, top and socle; isomorphic modules share it"""
    return (m.dim_vector, top_vector(m), socle_vector(m))


@dataclass
class TableEntry:
    index: int
    module: Representation
    key: Fingerprint
    provenance: str
    tau_steps: int
    names: List[str] = field(default_factory=list)
    projective: bool = False
    injective: bool = False
    tau: Optional[int] = None
    tau_inverse: Optional[int] = None
    tau_link: str = LINK_PENDING
    tau_inverse_link: str = LINK_PENDING
    # summands of rad P (projective entries) and of I/soc I (injective entries);
    # None until computed, with -1 standing for a summand dropped by a limit
    radical_summands: Optional[List[int]] = None
    socle_quotient_summands: Optional[List[int]] = None

    @property
    def label(self) -> str:
        if self.names:
            return "=".join(self.names)
        return f"M{self.index}(" + ",".join(str(d) for d in self.module.dim_vector) + ")"

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return self.module.dim_vector

    def as_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "label": self.label,
            "names": list(self.names),
            "dim_vector": list(self.dim_vector),
            "top": list(self.key[1]),
            "socle": list(self.key[2]),
            "provenance": self.provenance,
            "tau_steps": self.tau_steps,
            "projective": self.projective,
            "injective": self.injective,
            "tau": self.tau,
            "tau_inverse": self.tau_inverse,
            "tau_link": self.tau_link,
            "tau_inverse_link": self.tau_inverse_link,
            "radical_summands": self.radical_summands,
            "socle_quotient_summands": self.socle_quotient_summands,
        }


class IndTable:
    """Ordered, pairwise non-isomorphic indecomposables over one algebra"""

    def __init__(self, algebra: AlgebraPresentation, seed: Optional[int] = None):
        self.algebra = algebra
        self.seed = seed
        self.entries: List[TableEntry] = []
        self.limit_hits: List[str] = []
        self.closed = False
        # filled in by the arrow computation
        self.spaces: Optional[RadicalSpaces] = None
        self.window: Optional[WindowData] = None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TableEntry]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> TableEntry:
        return self.entries[index]

    @property
    def complete(self) -> bool:
        """Closure reached without any limit being hit"""
        return self.closed and not self.limit_hits

    @property
    def modules(self) -> List[Representation]:
        return [e.module for e in self.entries]

    def find(self, m: Representation, key: Optional[Fingerprint] = None) -> Optional[int]:
        key = key or fingerprint(m)
        for entry in self.entries:
            if entry.key == key and are_isomorphic(entry.module, m, self.seed):
                return entry.index
        return None

    def add(
        self, m: Representation, provenance: str, tau_steps: int, key: Fingerprint
    ) -> TableEntry:
        entry = TableEntry(len(self.entries), m, key, provenance, tau_steps)
        self.entries.append(entry)
        return entry

    def index_of_name(self, name: str) -> Optional[int]:
        for entry in self.entries:
            if name in entry.names:
                return entry.index
        return None

    def record_limit(self, message: str) -> None:
        if message not in self.limit_hits:
            self.limit_hits.append(message)

    def labels(self) -> Dict[int, str]:
        return {e.index: e.label for e in self.entries}

    def as_dict(self) -> Dict[str, Any]:
        return {
            "field": self.algebra.p,
            "seed": self.seed,
            "complete": self.complete,
            "limit_hits": list(self.limit_hits),
            "entries": [e.as_dict() for e in self.entries],
        }

    def to_json(self, include_matrices: bool = False) -> str:
        data = self.as_dict()
        if include_matrices:
            for entry, out in zip(self.entries, data["entries"]):
                out["module"] = dumps_module(entry.module.renamed(entry.label))
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

