"""
Run configuration: settings file, then ``ARW_SEED``, then command-line flags.
"""

import os
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from ar_window.config.settings import Settings, settings as default_settings
from ar_window.errors import ConfigError
from ar_window.modcat.linalg import check_field_order

SEED_ENV = "ARW_SEED"


@dataclass
class RunConfig:
    field_order: int = 32003
    seed: int = 0
    max_modules: int = 60
    max_dim: int = 12
    max_tau_steps: int = 12
    max_power: int = 64
    output_directory: str = "out"
    formats: List[str] = field(default_factory=lambda: ["json", "dot"])

    @classmethod
    def from_sources(
        cls,
        overrides: Optional[Dict[str, Any]] = None,
        config: Optional[Settings] = None,
        environ: Optional[Dict[str, str]] = None,
    ) -> "RunConfig":
        """Layer settings, environment and explicit overrides (``None`` values are ignored)"""
        config = config or default_settings
        environ = os.environ if environ is None else environ

        run = cls(
            field_order=int(config.get("field.order", 32003)),
            seed=int(config.get("run.seed", 0)),
            max_modules=int(config.get("knit.max_modules", 60)),
            max_dim=int(config.get("knit.max_dim", 12)),
            max_tau_steps=int(config.get("knit.max_tau_steps", 12)),
            max_power=int(config.get("radical.max_power", 64)),
            output_directory=str(config.get("output.directory", "out")),
            formats=list(config.get("output.formats", ["json", "dot"])),
        )

        env_seed = environ.get(SEED_ENV)
        if env_seed not in (None, ""):
            try:
                run.seed = int(env_seed)
            except ValueError as e:
                raise ConfigError(f"{SEED_ENV} must be an integer, got {env_seed!r}") from e

        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if not hasattr(run, key):
                raise ConfigError(f"Unknown run option: {key}")
            setattr(run, key, value)

        run.validate()
        return run

    def validate(self):
        try:
            check_field_order(self.field_order)
        except ValueError as e:
            raise ConfigError(str(e)) from e
        for name in ("max_modules", "max_dim", "max_tau_steps", "max_power"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        unknown = set(self.formats) - {"json", "dot", "csv"}
        if unknown:
            raise ConfigError(f"Unknown export formats: {sorted(unknown)}")

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)
