"""
Logging setup: console/file handlers, optional JSON records and run context.
"""

import json
import logging
import logging.handlers
import os
import sys
from contextvars import ContextVar
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

from ar_window.config.settings import settings

# Context attached to every record (command, seed, algebra file, ...)
_run_context: ContextVar[Dict[str, Any]] = ContextVar("run_context", default={})


class StructuredFormatter(logging.Formatter):
    """JSON-lines formatter for machine-readable run logs"""

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        context = getattr(record, "run_context", None) or _run_context.get()
        if context:
            log_data["context"] = context

        return json.dumps(log_data, sort_keys=True, default=str)


class ColoredFormatter(logging.Formatter):
    """Formatter with color support for console output"""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
        "RESET": "\033[0m",
    }

    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if levelname in self.COLORS:
            record = logging.makeLogRecord(record.__dict__)
            record.levelname = f"{self.COLORS[levelname]}{levelname}{self.COLORS['RESET']}"
        return super().format(record)


class LoggerAdapter(logging.LoggerAdapter):
    """Adapter that snapshots the current run context onto each record"""

    def process(self, msg, kwargs):
        context = _run_context.get()
        if context:
            kwargs.setdefault("extra", {})["run_context"] = dict(context)
        return msg, kwargs


class LoggerManager:
    """
    Centralized logger management with configuration support.
    """

    _instance = None
    _loggers: Dict[str, logging.Logger] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if hasattr(self, "_initialized"):
            return

        self._initialized = True
        self.configure()

    def configure(self):
        """(Re)configure the root logger from the current settings"""
        log_level = str(settings.get("logging.level", "INFO"))
        log_file: Optional[str] = settings.get("logging.file")
        console_enabled = settings.get("logging.console_enabled", True)
        structured = settings.get("logging.structured", False)

        root_logger = logging.getLogger()
        root_logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))
        root_logger.handlers.clear()

        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            root_logger.addHandler(
                self._create_file_handler(
                    log_file,
                    str(settings.get("logging.max_file_size", "10MB")),
                    int(settings.get("logging.backup_count", 5)),
                    structured,
                )
            )
            if settings.get("logging.separate_error_log", False):
                error_file = str(Path(log_file).with_suffix("")) + "_errors.log"
                root_logger.addHandler(self._create_error_handler(error_file, structured))

        if console_enabled:
            root_logger.addHandler(self._create_console_handler(structured))

    def _create_file_handler(
        self, log_file: str, max_size: str, backup_count: int, structured: bool
    ) -> logging.Handler:
        """Create rotating file handler"""
        handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=self._parse_size(max_size),
            backupCount=backup_count,
            encoding="utf-8",
        )
        if structured:
            handler.setFormatter(StructuredFormatter())
        else:
            handler.setFormatter(
                logging.Formatter(
                    "%(asctime)s - %(name)s - %(levelname)s - "
                    "[%(module)s:%(funcName)s:%(lineno)d] - %(message)s",
                    datefmt="%Y-%m-%d %H:%M:%S",
                )
            )
        return handler

    def _create_console_handler(self, structured: bool) -> logging.Handler:
        """Console handler on stderr; stdout is reserved for reports"""
        handler = logging.StreamHandler(sys.stderr)
        if structured:
            handler.setFormatter(StructuredFormatter())
        else:
            fmt = "%(asctime)s - %(levelname)s - %(message)s"
            if self._supports_color():
                handler.setFormatter(ColoredFormatter(fmt, datefmt="%H:%M:%S"))
            else:
                handler.setFormatter(logging.Formatter(fmt, datefmt="%H:%M:%S"))
        return handler

    def _create_error_handler(self, error_file: str, structured: bool) -> logging.Handler:
        """Create handler for ERROR and CRITICAL logs only"""
        handler = logging.FileHandler(error_file, encoding="utf-8")
        handler.setLevel(logging.ERROR)
        if structured:
            handler.setFormatter(StructuredFormatter())
        else:
            handler.setFormatter(
                logging.Formatter(
                    "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                    datefmt="%Y-%m-%d %H:%M:%S",
                )
            )
        return handler

    def _parse_size(self, size_str: str) -> int:
        """Parse size string like '10MB' to bytes"""
        size_str = size_str.upper().strip()
        units = {"GB": 1024**3, "MB": 1024**2, "KB": 1024, "B": 1}
        for unit, multiplier in units.items():
            if size_str.endswith(unit):
                try:
                    return int(float(size_str[: -len(unit)].strip()) * multiplier)
                except ValueError:
                    continue
        try:
            return int(float(size_str))
        except ValueError:
            return 10 * 1024 * 1024

    def _supports_color(self) -> bool:
        """Check if terminal supports colors"""
        return (
            hasattr(sys.stderr, "isatty")
            and sys.stderr.isatty()
            and os.environ.get("TERM") != "dumb"
        )

    def get_logger(self, name: str) -> LoggerAdapter:
        """Get or create a logger with the given name"""
        if name not in self._loggers:
            self._loggers[name] = logging.getLogger(name)
        return LoggerAdapter(self._loggers[name], {})


class LogContext:
    """
    Context manager adding run context to logs within a scope.

    Example:
        with LogContext(command="knit", seed=7):
            logger.info("Knitting")  # record carries command and seed
    """

    def __init__(self, **context):
        self.context = context
        self.token = None

    def __enter__(self):
        current = _run_context.get().copy()
        current.update(self.context)
        self.token = _run_context.set(current)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.token:
            _run_context.reset(self.token)


def set_log_level(level: str):
    """Dynamically change log level at runtime"""
    logging.getLogger().setLevel(getattr(logging, level.upper()))


def current_context() -> Dict[str, Any]:
    return dict(_run_context.get())


_manager = LoggerManager()
logger = _manager.get_logger("ar-window")
