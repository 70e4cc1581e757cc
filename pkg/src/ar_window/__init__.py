"""
ar-window

Valued translation quivers, a module-category engine over prime fields,
knitting of Auslander-Reiten components and radical filtrations of the
knitted windows.
"""

from ar_window.analysis.report import AnalysisReport, analyze
from ar_window.knitting import IndTable, KnitLimits, certify_complete, knit
from ar_window.modcat.algebra import AlgebraPresentation
from ar_window.modcat.representation import Representation
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, build, validate
from ar_window.radical import radical_filtration, radical_report, short_cycles
from ar_window.version import VERSION, __version__

__all__ = [
    "__version__",
    "VERSION",
    "AnalysisReport",
    "analyze",
    "IndTable",
    "KnitLimits",
    "certify_complete",
    "knit",
    "AlgebraPresentation",
    "Representation",
    "ValuedTranslationQuiver",
    "build",
    "validate",
    "radical_filtration",
    "radical_report",
    "short_cycles",
]

__license__ = "MIT"
