from ar_window.analysis.infinite_paths import InfinitePathSchemas, SchemaEntry, ss_cpt_paths
from ar_window.analysis.paths import (
    IntervalResult,
    PathInQuiver,
    SectionalSearch,
    count_paths,
    enumerate_paths,
    interval,
    is_sectional,
    sectional_paths,
)
from ar_window.analysis.report import AnalysisReport, analyze, report_dot, to_dot
from ar_window.analysis.sections import (
    SubquiverCheck,
    is_convex,
    is_cut,
    is_cut_with_sincerity_hook,
    is_predecessor_closed,
    is_section,
    is_successor_closed,
    predecessor_closure,
    section_with_unique_sink,
    successor_closure,
    translate_set,
)
from ar_window.analysis.stability import (
    StabilityPartition,
    is_tau_periodic,
    not_left_stable_predecessors,
    stability,
    stabilization_shift,
    tau_orbits,
)
from ar_window.analysis.theorem import (
    TheoremReport,
    Verdict,
    core,
    is_acyclic,
    is_almost_acyclic,
    oriented_cycle_vertices,
    theorem_equivalence_report,
)
