import json
import re
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from ar_window.analysis.report import analyze, report_dot, to_dot, write_text
from ar_window.config.run_config import RunConfig
from ar_window.config.settings import settings
from ar_window.errors import LimitExceededError, QuiverError
from ar_window.families import family_registry
from ar_window.knitting.certify import (
    certify_complete,
    mesh_checks,
    translation_round_trip_failures,
)
from ar_window.knitting.export import write_window
from ar_window.knitting.knit import knit
from ar_window.knitting.table import IndTable, KnitLimits
from ar_window.modcat.algebra import AlgebraPresentation
from ar_window.modcat.textio import read_algebra
from ar_window.quiver.textio import read_quiver, write_quiver
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, validate
from ar_window.radical.export import depth_matrix_csv, power_dims_csv, radical_report
from ar_window.radical.filtration import radical_filtration
from ar_window.radical.slices import slice_report
from ar_window.utils.logger import LogContext, logger

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_LIMITS = 3


def _stem(path: Path) -> str:
    return path.name.split(".", 1)[0] or "window"


def _safe(text: str) -> str:
    return re.sub(r"[^\w.+-]+", "_", text).strip("_") or "x"


class ArWindowApp:
    """Runs one command against a resolved RunConfig and writes its artifacts"""

    def __init__(
        self,
        run: RunConfig,
        field_override: Optional[int] = None,
        dot: bool = False,
        print_json: bool = False,
        strict: bool = False,
    ):
        self.run = run
        self.field_override = field_override
        self.dot = dot or "dot" in run.formats
        self.write_json = "json" in run.formats
        self.write_csv = "csv" in run.formats
        self.print_json = print_json
        self.strict = strict

    @property
    def out(self) -> Path:
        return Path(self.run.output_directory)

    def _banner(self, title: str):
        if self.print_json:
            return
        print("\n" + "=" * 60)
        print(title)
        print("=" * 60)

    def _say(self, text: str = ""):
        if not self.print_json:
            print(text)

    def _emit(self, text: str):
        if self.print_json:
            sys.stdout.write(text)

    def load_algebra(self, path: Path) -> AlgebraPresentation:
        algebra = read_algebra(
            path,
            p=self.field_override,
            nilpotence_bound=int(settings.get("modcat.nilpotence_bound", 12)),
            default_p=self.run.field_order,
        )
        logger.info(
            f"Loaded algebra from {path}: {len(algebra.vertices)} vertices, "
            f"{len(algebra.arrows)} arrows, p={algebra.p}"
        )
        return algebra

    def _knit(self, path: Path) -> Tuple[AlgebraPresentation, IndTable, ValuedTranslationQuiver]:
        algebra = self.load_algebra(path)
        limits = KnitLimits.from_run_config(self.run)
        table, q = knit(algebra, limits=limits, seed=self.run.seed)
        return algebra, table, q

    def validate(self, path: Path) -> int:
        """Translation axiom check of a quiver file"""
        with LogContext(command="validate", file=str(path)):
            q = read_quiver(path)
            violations = validate(q)
            self._banner(f"VALIDATE {path}")
            self._say(f"Vertices: {len(q)}  Arrows: {len(q.arrows)}  Boundary: {len(q.boundary)}")
            for v in violations:
                self._say(f"  ✗ {v}")
            if violations:
                logger.warning(f"{path}: {len(violations)} violation(s)")
                self._say(f"\n{len(violations)} violation(s)")
            else:
                self._say("\n✓ Valid translation quiver")
            listing = {"file": str(path), "violations": [str(v) for v in violations]}
            self._emit(json.dumps(listing, indent=2, sort_keys=True) + "\n")
            return EXIT_FAILED if violations else EXIT_OK

    def gen(self, family: str, params: Sequence[str], output: Optional[Path] = None) -> int:
        """Generate a family window into ``output`` (default: <out>/<family>_<params>.tq)"""
        with LogContext(command="gen", family=family):
            q = family_registry.generate(family, params)
            if output is None:
                output = self.out / f"{_safe('_'.join([family, *params]))}.tq"
            written = [write_quiver(q, output)]
            if self.dot:
                written.append(write_text(output.with_suffix(".dot"), to_dot(q, name=family)))
            logger.info(f"Generated {family} {' '.join(params)}: {len(q)} vertices")
            self._banner(f"GENERATED {family} {' '.join(params)}")
            self._say(f"Vertices: {len(q)}  Arrows: {len(q.arrows)}")
            for path in written:
                self._say(f"  wrote {path}")
            self._emit(f"{output}\n")
            return EXIT_OK

    def analyze(self, path: Path) -> int:
        """Four-condition report, stability partition and section search"""
        with LogContext(command="analyze", file=str(path), seed=self.run.seed):
            q = read_quiver(path)
            report = analyze(q, seed=self.run.seed)
            stem = _stem(path)
            if self.write_json:
                write_text(self.out / f"{stem}.analysis.json", report.to_json())
            if self.dot:
                write_text(self.out / f"{stem}.analysis.dot", report_dot(report))

            theorem = report.theorem
            self._banner(f"ANALYSIS {path} ({theorem.mode})")
            for name, verdict in theorem.verdicts.items():
                self._say(f"  {name:32s} {verdict.value}")
            self._say(
                f"\nCore: {len(theorem.core)} vertices, cycles through "
                f"{len(theorem.cycle_vertices)} vertices, {theorem.orbit_count} τ-orbits"
            )
            self._say(f"Consistent: {theorem.consistent}")
            if report.violations:
                self._say(f"Violations: {len(report.violations)}")
            self._emit(report.to_json())
            failed = bool(report.violations) or not theorem.consistent
            return EXIT_FAILED if failed else EXIT_OK

    def knit(self, path: Path) -> int:
        """Knit the component(s) reachable from P_i and I_i and export the window"""
        with LogContext(command="knit", file=str(path), seed=self.run.seed):
            algebra, table, q = self._knit(path)
            certified = certify_complete(algebra, table)
            checks = mesh_checks(table, q)
            mesh_failures = [table[c.vertex].label for c in checks if not c.ok]
            round_trip = translation_round_trip_failures(algebra, table)
            violations = [str(v) for v in validate(q)]

            stem = _stem(path)
            written = write_window(table, q, self.out, stem, dot=self.dot)
            summary = {
                "seed": self.run.seed,
                "mode": "exact" if certified else "window",
                "certified_complete": certified,
                "limit_hits": list(table.limit_hits),
                "modules": len(table),
                "arrows": len(q.arrows),
                "boundary": sorted(table[v].label for v in q.boundary),
                "mesh_failures": mesh_failures,
                "round_trip_failures": round_trip,
                "violations": violations,
                "files": {k: str(v) for k, v in sorted(written.items())},
            }
            report = analyze(q, seed=self.run.seed)
            report.extra["knit"] = summary
            if self.write_json:
                write_text(self.out / f"{stem}.knit.json", report.to_json())

            self._banner(f"KNIT {path} ({summary['mode']})")
            for entry in table:
                tag = "" if entry.index not in q.boundary else "  (boundary)"
                self._say(f"  {entry.index:3d}  {entry.label}{tag}")
            self._say(f"\nModules: {len(table)}  Arrows: {len(q.arrows)}")
            self._say(f"Certified complete: {certified}")
            for hit in table.limit_hits:
                self._say(f"  limit: {hit}")
            for label in mesh_failures:
                self._say(f"  ✗ mesh check failed at {label}")
            for label in round_trip:
                self._say(f"  ✗ τ⁻τ round trip failed for {label}")
            self._emit(report.to_json())

            if mesh_failures or round_trip or violations:
                return EXIT_FAILED
            if self.strict and not certified:
                raise LimitExceededError("Knit did not close within the configured limits")
            return EXIT_OK

    def radical(self, path: Path, slice_names: Sequence[str] = ()) -> int:
        """Radical filtration, short cycles, bound and verdicts over the knitted window"""
        with LogContext(command="radical", file=str(path), seed=self.run.seed):
            _, table, q = self._knit(path)
            filtration = radical_filtration(table, max_power=self.run.max_power)
            report = radical_report(filtration)

            if slice_names:
                delta = self._resolve(table, slice_names)
                labels = table.labels()
                report.extra["slice"] = slice_report(filtration, q, delta).as_dict(labels)

            stem = _stem(path)
            if self.write_json:
                write_text(self.out / f"{stem}.radical.json", report.to_json())
            write_text(self.out / f"{stem}.depth.csv", depth_matrix_csv(filtration))
            if self.write_csv:
                write_text(self.out / f"{stem}.powers.csv", power_dims_csv(filtration))

            self._banner(f"RADICAL {path} ({filtration.mode})")
            self._say(f"Modules: {filtration.size}  Powers computed: {filtration.computed}")
            self._say(
                f"Stable index: {filtration.stable_index}  "
                f"Nilpotence index: {filtration.nilpotence_index}"
            )
            self._say(f"Short cycles: {len(report.catalog.pairs)}  Bound: {report.bound}")
            self._say(f"Directing modules: {len(report.directing)}")
            self._say(f"Generalized standard: {report.standard.verdict.value}")
            self._say(
                f"Harada-Sai (b={report.harada_sai.length_bound}): "
                f"{report.harada_sai.verdict.value}"
            )
            for failure in report.assertion_failures:
                self._say(f"  ✗ {failure}")
            self._emit(report.to_json())

            if report.assertion_failures:
                return EXIT_FAILED
            if filtration.max_power_exceeded:
                raise LimitExceededError(
                    f"Radical filtration exceeded {self.run.max_power} powers"
                )
            if self.strict and not filtration.exact:
                raise LimitExceededError("Radical filtration is only a window lower bound")
            return EXIT_OK

    @staticmethod
    def _resolve(table: IndTable, names: Sequence[str]) -> List[int]:
        """Table indices from labels such as ``P1`` or plain indices"""
        found: Dict[str, int] = {e.label: e.index for e in table}
        indices = []
        for name in names:
            if name.isdigit():
                indices.append(int(name))
                continue
            index = table.index_of_name(name)
            if index is None:
                index = found.get(name)
            if index is None:
                raise QuiverError(f"No table entry named {name!r}")
            indices.append(index)
        return indices
