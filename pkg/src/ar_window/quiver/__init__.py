from ar_window.quiver.translation_quiver import (
    ValuedTranslationQuiver,
    VertexFlags,
    Violation,
    build,
    is_valid,
    validate,
)
from ar_window.quiver.generators import Delta, dynkin, parse_delta, stable_tube, z_delta_window

__all__ = [
    "ValuedTranslationQuiver",
    "VertexFlags",
    "Violation",
    "build",
    "validate",
    "is_valid",
    "Delta",
    "dynkin",
    "parse_delta",
    "stable_tube",
    "z_delta_window",
]
