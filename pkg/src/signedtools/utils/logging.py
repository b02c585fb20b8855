"""
Logging setup shared by the signedtools library and its console script.

Records go to stderr so stdout stays reserved for tables and JSON reports.
A log directory adds two rotating files: ``signedtools.log`` in the console
format and ``signedtools_structured.jsonl`` with one JSON object per record.
"""

import json
import logging
import logging.config
import threading
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

ROOT_LOGGER = "signedtools"
LOG_FORMATS = ("human", "json")

HUMAN_FORMAT = "%(asctime)s | %(name)-28s | %(levelname)-7s | %(message)s"
HUMAN_DATEFMT = "%Y-%m-%d %H:%M:%S"

_state_lock = threading.Lock()
_active_config: Optional["LoggingConfig"] = None

# Attributes every LogRecord carries; anything else arrived through ``extra``.
_STANDARD_ATTRS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}


class StructuredFormatter(logging.Formatter):
    """Render a record as one human-readable line or as one JSON object."""

    def __init__(self, format_type: str = "human", include_extra: bool = True):
        if format_type not in LOG_FORMATS:
            raise ValueError(f"unknown log format {format_type!r}")
        self.format_type = format_type
        self.include_extra = include_extra
        if format_type == "human":
            super().__init__(HUMAN_FORMAT, datefmt=HUMAN_DATEFMT)
        else:
            super().__init__()

    def format(self, record: logging.LogRecord) -> str:
        if self.format_type == "human":
            return super().format(record)
        return json.dumps(self.record_to_dict(record), default=str)

    def record_to_dict(self, record: logging.LogRecord) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }
        if record.exc_info:
            data["exception"] = self.formatException(record.exc_info)
        if self.include_extra:
            context = {k: v for k, v in vars(record).items() if k not in _STANDARD_ATTRS}
            if context:
                data["extra"] = context
        return data


@dataclass
class LoggingConfig:
    """
    Where records go and at which level.

    ``log_dir=None`` means console only; the file settings are then unused.
    """

    console_level: int = logging.WARNING
    console_format: str = "human"
    log_dir: Optional[Union[str, Path]] = None
    file_level: int = logging.DEBUG
    file_format: str = "human"
    structured_file: bool = True
    max_file_size: int = 10 * 1024 * 1024
    backup_count: int = 5

    def __post_init__(self) -> None:
        if self.log_dir is not None:
            self.log_dir = Path(self.log_dir)

    def to_dict_config(self) -> Dict[str, Any]:
        """The ``logging.config.dictConfig`` document for this configuration."""
        formatters: Dict[str, Any] = {
            "console": {"()": StructuredFormatter, "format_type": self.console_format},
        }
        handlers: Dict[str, Any] = {
            "console": {
                "class": "logging.StreamHandler",
                "level": self.console_level,
                "formatter": "console",
                "stream": "ext://sys.stderr",
            },
        }
        if self.log_dir is not None:
            formatters["file"] = {"()": StructuredFormatter, "format_type": self.file_format}
            handlers["main_file"] = self._rotating("signedtools.log", "file")
            if self.structured_file:
                formatters["structured"] = {"()": StructuredFormatter, "format_type": "json"}
                handlers["structured_file"] = self._rotating(
                    "signedtools_structured.jsonl", "structured"
                )
            root_level = min(self.console_level, self.file_level)
        else:
            root_level = self.console_level

        return {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": formatters,
            "handlers": handlers,
            "loggers": {
                ROOT_LOGGER: {
                    "level": root_level,
                    "propagate": False,
                    "handlers": list(handlers),
                },
            },
        }

    def _rotating(self, filename: str, formatter: str) -> Dict[str, Any]:
        return {
            "class": "logging.handlers.RotatingFileHandler",
            "level": self.file_level,
            "formatter": formatter,
            "filename": str(Path(self.log_dir) / filename),
            "maxBytes": self.max_file_size,
            "backupCount": self.backup_count,
            "encoding": "utf-8",
        }


def configure_logging(
    config: Optional[LoggingConfig] = None, force_reconfigure: bool = False
) -> None:
    """
    Install ``config`` (default: warnings to the console) on the package logger.

    A second call is a no-op unless ``force_reconfigure`` is set.
    """
    global _active_config

    with _state_lock:
        if _active_config is not None and not force_reconfigure:
            return
        config = config or LoggingConfig()
        if config.log_dir is not None:
            Path(config.log_dir).mkdir(parents=True, exist_ok=True)
        logging.config.dictConfig(config.to_dict_config())
        _active_config = config


class LoggerAdapter(logging.LoggerAdapter):
    """Attach fixed context fields to every record, merged with per-call ``extra``."""

    def process(self, msg: Any, kwargs: Dict[str, Any]) -> Tuple[Any, Dict[str, Any]]:
        kwargs["extra"] = {**self.extra, **kwargs.get("extra", {})}
        return msg, kwargs


def get_logger(
    name: str = ROOT_LOGGER,
    level: Optional[int] = None,
    extra_context: Optional[Dict[str, Any]] = None,
) -> Union[logging.Logger, LoggerAdapter]:
    """
    Logger for a signedtools module.

    Args:
        name: Logger name, normally ``__name__``
        level: Console level, used only when this call is the one that configures logging
        extra_context: Fields added to every record of the returned adapter
    """
    if _active_config is None:
        configure_logging(LoggingConfig(console_level=level) if level is not None else None)

    logger = logging.getLogger(name)

    if extra_context:
        return LoggerAdapter(logger, extra_context)
    return logger


def setup_console_logging(level: int = logging.WARNING, log_format: str = "human") -> None:
    configure_logging(
        LoggingConfig(console_level=level, console_format=log_format),
        force_reconfigure=True,
    )

