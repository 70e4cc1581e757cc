from ar_window.radical.checks import (
    HaradaSaiReport,
    StandardnessReport,
    harada_sai_check,
    is_generalized_standard,
)
from ar_window.radical.cycles import (
    BEYOND_MAX_POWER,
    UNBOUNDED,
    ShortCycleCatalog,
    ShortCyclePair,
    directing_modules,
    hom_digraph_successors,
    short_cycle_bound,
    short_cycles,
)
from ar_window.radical.depth import DepthReport, depth, path_composite
from ar_window.radical.export import (
    RadicalReport,
    compare_windows,
    depth_matrix_csv,
    power_dims_csv,
    radical_report,
)
from ar_window.radical.filtration import (
    BEYOND_CAP,
    MODE_EXACT,
    MODE_WINDOW,
    STABLE_NONZERO,
    RadicalFiltration,
    radical_filtration,
)
from ar_window.radical.slices import SliceReport, slice_report

__all__ = [
    "HaradaSaiReport",
    "StandardnessReport",
    "harada_sai_check",
    "is_generalized_standard",
    "BEYOND_MAX_POWER",
    "UNBOUNDED",
    "ShortCycleCatalog",
    "ShortCyclePair",
    "directing_modules",
    "hom_digraph_successors",
    "short_cycle_bound",
    "short_cycles",
    "DepthReport",
    "depth",
    "path_composite",
    "RadicalReport",
    "compare_windows",
    "depth_matrix_csv",
    "power_dims_csv",
    "radical_report",
    "BEYOND_CAP",
    "MODE_EXACT",
    "MODE_WINDOW",
    "STABLE_NONZERO",
    "RadicalFiltration",
    "radical_filtration",
    "SliceReport",
    "slice_report",
]
