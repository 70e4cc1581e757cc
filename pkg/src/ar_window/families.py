"""
Registry of quiver families available to ``ar-window gen``.
Each family turns a list of string parameters into a finite window.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

from ar_window.errors import GeneratorError
from ar_window.quiver.generators import parse_delta, stable_tube, z_delta_window
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver
from ar_window.utils.logger import logger

Builder = Callable[[Sequence[str]], ValuedTranslationQuiver]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    usage: str
    param_count: int
    builder: Builder

    def build(self, params: Sequence[str]) -> ValuedTranslationQuiver:
        if len(params) != self.param_count:
            raise GeneratorError(f"{self.name} expects parameters: {self.usage}")
        return self.builder(params)


class FamilyRegistry:
    """Central registry for quiver families"""

    def __init__(self):
        self.families: Dict[str, FamilySpec] = {}

    def register(self, name: str, usage: str, param_count: int):
        """Decorator registering a builder under ``name``"""

        def decorator(builder: Builder) -> Builder:
            self.families[name] = FamilySpec(name, usage, param_count, builder)
            logger.debug(f"Registered quiver family: {name}")
            return builder

        return decorator

    def get(self, name: str) -> FamilySpec:
        try:
            return self.families[name]
        except KeyError:
            raise GeneratorError(
                f"Unknown family {name!r}; available: {', '.join(self.names())}"
            ) from None

    def names(self) -> List[str]:
        return sorted(self.families)

    def generate(self, name: str, params: Sequence[str]) -> ValuedTranslationQuiver:
        return self.get(name).build(params)


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise GeneratorError(f"{what} must be an integer, got {value!r}") from None


family_registry = FamilyRegistry()


@family_registry.register("zdelta", "<delta> <n_min> <n_max>", 3)
def _zdelta(params: Sequence[str]) -> ValuedTranslationQuiver:
    return z_delta_window(
        parse_delta(params[0]), _int(params[1], "n_min"), _int(params[2], "n_max")
    )


@family_registry.register("tube", "<rank> <depth>", 2)
def _tube(params: Sequence[str]) -> ValuedTranslationQuiver:
    return stable_tube(_int(params[0], "rank"), _int(params[1], "depth"))
