"""
Exception hierarchy for ar-window.

Quiver validation problems are returned as data (see ``quiver.Violation``);
the exceptions below cover malformed input and failed preconditions.
"""

from typing import Optional


class ArWindowError(Exception):
    """Base class for all ar-window errors"""


class ConfigError(ArWindowError):
    """Invalid run configuration (non-prime field, non-positive limit, ...)"""


class QuiverError(ArWindowError):
    """Malformed translation quiver input"""


class GeneratorError(ArWindowError):
    """Bad parameters for a quiver family generator"""


class ParseError(ArWindowError):
    """Syntax error in one of the text formats"""

    def __init__(self, message: str, source: Optional[str] = None, line: Optional[int] = None):
        self.source = source
        self.line = line
        where = ""
        if source is not None:
            where = f"{source}:{line}: " if line is not None else f"{source}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(f"{where}{message}")


class PresentationError(ArWindowError):
    """Algebra presentation is not admissible or otherwise unusable"""


class RepresentationError(ArWindowError):
    """Representation data is inconsistent with its algebra"""


class DecomposableInputError(RepresentationError):
    """An operation that needs an indecomposable module got a decomposable one"""


class NotRadicalError(ArWindowError):
    """A map that is not in the radical was passed where a radical map is required"""


class LimitExceededError(ArWindowError):
    """A configured computation limit was hit"""
