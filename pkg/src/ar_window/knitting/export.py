"""
Export of knitted windows: quiver text, module table JSON and DOT.
"""

from pathlib import Path
from typing import Dict, Union

from ar_window.analysis.report import to_dot, write_text
from ar_window.analysis.theorem import core, oriented_cycle_vertices
from ar_window.knitting.table import IndTable
from ar_window.quiver.textio import write_quiver
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver

PathLike = Union[str, Path]


def dot_labels(table: IndTable) -> Dict[int, str]:
    """Standard names (when matched) followed by the dimension vector"""
    labels = {}
    for entry in table:
        dims = "".join(str(d) for d in entry.dim_vector)
        head = "=".join(entry.names) if entry.names else f"M{entry.index}"
        labels[entry.index] = f"{head} [{dims}]"
    return labels


def window_dot(table: IndTable, q: ValuedTranslationQuiver, name: str = "window") -> str:
    return to_dot(q, core(q).vertices, oriented_cycle_vertices(q), name, dot_labels(table))


def write_window(
    table: IndTable, q: ValuedTranslationQuiver, directory: PathLike, stem: str, dot: bool = True
) -> Dict[str, Path]:
    """Write <stem>.tq, <stem>.table.json and optionally <stem>.dot; returns the paths"""
    directory = Path(directory)
    written = {
        "quiver": write_quiver(q, directory / f"{stem}.tq"),
        "table": write_text(directory / f"{stem}.table.json", table.to_json(include_matrices=True)),
    }
    if dot:
        written["dot"] = write_text(directory / f"{stem}.dot", window_dot(table, q, stem))
    return written
