import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

DEFAULTS: Dict[str, Any] = {
    "field": {"order": 32003},
    "run": {"seed": 0},
    "knit": {"max_modules": 60, "max_dim": 12, "max_tau_steps": 12},
    "radical": {"max_power": 64, "workers": 1},
    "modcat": {
        "split_attempts": 40,
        "iso_attempts": 8,
        "iso_exhaustive_threshold": 3,
        "iso_exhaustive_budget": 20000,
        "nilpotence_bound": 12,
    },
    "output": {"directory": "out", "formats": ["json", "dot"]},
    "logging": {
        "level": "INFO",
        "file": None,
        "console_enabled": True,
        "structured": False,
        "max_file_size": "10MB",
        "backup_count": 5,
        "separate_error_log": False,
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Settings:
    """Configuration management with support for multiple config locations"""

    CONFIG_SEARCH_PATHS = [
        # 1. Environment variable (highest priority)
        lambda: os.getenv("ARW_CONFIG"),
        # 2. Current working directory
        lambda: Path.cwd() / "config" / "config.yaml",
        # 3. User config directory
        lambda: Path.home() / ".config" / "ar-window" / "config.yaml",
        # 4. System config directory
        lambda: Path("/etc/ar-window/config.yaml"),
        # 5. Source tree (development checkout)
        lambda: Path(__file__).parent.parent.parent.parent / "config" / "config.yaml",
    ]

    def __init__(self, config_path: Optional[str] = None):
        if config_path:
            self.config_path: Optional[Path] = Path(config_path)
        else:
            self.config_path = self._find_config()

        self.config = self.load_config()

    def _find_config(self) -> Optional[Path]:
        """Search for config file in standard locations"""
        for path_func in self.CONFIG_SEARCH_PATHS:
            try:
                path = path_func()
                if path and Path(path).exists():
                    return Path(path)
            except Exception:
                continue
        # Built-in defaults only
        return None

    def load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file, layered over the built-in defaults"""
        if self.config_path is None:
            return copy.deepcopy(DEFAULTS)
        try:
            with open(self.config_path, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
        except FileNotFoundError:
            print(f"Config file not found at {self.config_path}, using defaults")
            loaded = {}
        except yaml.YAMLError as e:
            print(f"Error parsing config file: {e}")
            loaded = {}
        if not isinstance(loaded, dict):
            loaded = {}
        return _merge(DEFAULTS, loaded)

    def reload(self, config_path: Optional[str] = None):
        """Point at another file (or re-search) and reload"""
        self.config_path = Path(config_path) if config_path else self._find_config()
        self.config = self.load_config()

    def get(self, key: str, default=None):
        """Get configuration value by key (supports dot notation)"""
        value: Any = self.config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return default if value is None else value

    def set(self, key: str, value):
        """Set configuration value by key (supports dot notation)"""
        keys = key.split(".")
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def save(self, path: Optional[str] = None) -> bool:
        """Save configuration to file"""
        target = Path(path) if path else self.config_path
        if target is None:
            return False
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, "w", encoding="utf-8") as file:
                yaml.safe_dump(self.config, file, default_flow_style=False, sort_keys=True)
            return True
        except OSError as e:
            print(f"Error saving config: {e}")
            return False


# Global settings instance
settings = Settings()
