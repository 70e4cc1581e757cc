from ar_window.knitting.certify import (
    MeshCheck,
    certify_complete,
    mesh_checks,
    mesh_relation_witness,
    translation_round_trip_failures,
)
from ar_window.knitting.export import dot_labels, window_dot, write_window
from ar_window.knitting.knit import Knitter, knit
from ar_window.knitting.table import IndTable, KnitLimits, TableEntry, WindowData, fingerprint

__all__ = [
    "MeshCheck",
    "certify_complete",
    "mesh_checks",
    "mesh_relation_witness",
    "translation_round_trip_failures",
    "dot_labels",
    "window_dot",
    "write_window",
    "Knitter",
    "knit",
    "IndTable",
    "KnitLimits",
    "TableEntry",
    "WindowData",
    "fingerprint",
]
