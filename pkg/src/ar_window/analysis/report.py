"""
AnalysisReport assembly plus JSON and DOT export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

from ar_window.analysis.sections import section_with_unique_sink
from ar_window.analysis.stability import StabilityPartition, stability, tau_orbits
from ar_window.analysis.theorem import TheoremReport, theorem_equivalence_report
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, validate
from ar_window.utils.logger import logger

PathLike = Union[str, Path]


@dataclass
class AnalysisReport:
    quiver: ValuedTranslationQuiver
    partition: StabilityPartition
    theorem: TheoremReport
    violations: List[str]
    section: Optional[List[int]] = None
    section_sink: Optional[int] = None
    seed: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        q = self.quiver
        p = self.partition
        data: Dict[str, Any] = {
            "mode": self.theorem.mode,
            "seed": self.seed,
            "quiver": {
                "vertices": len(q),
                "arrows": len(q.arrows),
                "boundary": sorted(q.boundary),
                "projectives": list(q.projectives()),
                "injectives": list(q.injectives()),
                "labels": {str(v): q.label(v) for v in q.vertices},
            },
            "violations": list(self.violations),
            "tau_orbits": [sorted(o) for o in tau_orbits(q)],
            "stability": {
                "left_stable": sorted(p.left_stable),
                "right_stable": sorted(p.right_stable),
                "stable": sorted(p.stable),
                "left_assumed": sorted(p.left_assumed),
                "right_assumed": sorted(p.right_assumed),
                "components": [
                    {
                        "side": c.side,
                        "vertices": sorted(c.vertices),
                        "acyclic": c.acyclic,
                        "tau_periodic": c.tau_periodic,
                        "infinite_beyond_window": c.infinite_beyond_window,
                    }
                    for c in p.components
                ],
            },
            "theorem": self.theorem.as_dict(),
            "section": {"vertices": self.section, "sink": self.section_sink},
        }
        data.update(self.extra)
        return data

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def analyze(q: ValuedTranslationQuiver, seed: Optional[int] = None) -> AnalysisReport:
    logger.debug(f"Analyzing quiver with {len(q)} vertices")
    partition = stability(q)
    theorem = theorem_equivalence_report(q, partition)
    found = section_with_unique_sink(q)
    report = AnalysisReport(
        quiver=q,
        partition=partition,
        theorem=theorem,
        violations=[str(v) for v in validate(q)],
        section=sorted(found[0]) if found else None,
        section_sink=found[1] if found else None,
        seed=seed,
    )
    logger.info(
        f"Analysis finished: mode={theorem.mode} core={len(theorem.core)} "
        f"cycles={len(theorem.cycle_vertices)} consistent={theorem.consistent}"
    )
    return report


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    q: ValuedTranslationQuiver,
    core: Iterable[int] = (),
    cycles: Iterable[int] = (),
    name: str = "component",
    labels: Optional[Mapping[int, str]] = None,
) -> str:
    """
    DOT text: core vertices filled, cycle vertices drawn in red, boundary
    vertices dashed, τ as dotted back edges, valuations other than (1,1) as labels.
    """
    core_set = set(core)
    cycle_set = set(cycles)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=box];"]
    for v in q.vertices:
        text = labels.get(v, q.label(v)) if labels else q.label(v)
        attrs = [f"label={_quote(text)}"]
        styles = []
        if v in core_set:
            styles.append("filled")
            attrs.append('fillcolor="lightgrey"')
        if q.is_boundary(v):
            styles.append("dashed")
        if styles:
            attrs.append(f"style={_quote(','.join(styles))}")
        if v in cycle_set:
            attrs.append('color="red"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for (a, b), (d, d_prime) in sorted(q.arrows.items()):
        label = "" if (d, d_prime) == (1, 1) else f' [label="({d},{d_prime})"]'
        lines.append(f"  {a} -> {b}{label};")
    for z, x in sorted(q.tau_map.items()):
        lines.append(f"  {z} -> {x} [style=dotted, arrowhead=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_dot(report: AnalysisReport) -> str:
    return to_dot(report.quiver, report.theorem.core, report.theorem.cycle_vertices)


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"Wrote {path}")
    return path
