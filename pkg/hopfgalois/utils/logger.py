"""Structured logging: JSON or colored console lines on stderr.

stdout carries command reports and must stay byte-stable, so every handler
installed here writes to stderr. Run context (run_id, command, source,
object_name, irrep, action) and the active trace/span ids are attached to
each record by :class:`ContextInjectionFilter`.
"""

import logging
import sys
import time
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Iterator, Optional

from pythonjsonlogger.json import JsonFormatter

from hopfgalois.config import settings
from hopfgalois.core.exceptions import EngineDefectError, HopfGaloisError
from hopfgalois.utils.context import CONTEXT_FIELDS, get_context, get_trace_context

TRACE_FIELDS = ("trace_id", "span_id")


class ContextInjectionFilter(logging.Filter):
    """Copy run context and trace ids onto each record.

    Values passed explicitly through ``extra`` win over the context.
    """

    def filter(self, record: logging.LogRecord) -> bool:
        for key, value in {**get_context(), **get_trace_context()}.items():
            if getattr(record, key, None) is None:
                setattr(record, key, value)
        return True


class CustomJsonFormatter(JsonFormatter):
    """One JSON object per record with level, logger and context fields.

    Values json cannot encode (scalars, fractions) are written with ``str``.
    """

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        kwargs.setdefault("json_default", str)
        super().__init__(*args, **kwargs)

    def add_fields(self, log_data: dict, record: logging.LogRecord, message_dict: dict) -> None:
        super().add_fields(log_data, record, message_dict)

        log_data.setdefault("timestamp", record.created)
        log_data["level"] = record.levelname
        log_data["logger"] = record.name

        for field in (*CONTEXT_FIELDS, *TRACE_FIELDS):
            value = getattr(record, field, None)
            if value is not None:
                log_data[field] = value

        if record.exc_info and isinstance(record.exc_info[1], HopfGaloisError):
            log_data["exit_code"] = record.exc_info[1].exit_code


class ColoredConsoleFormatter(logging.Formatter):
    """Human-readable lines with a colored level and a ``[object irrep]`` suffix."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname)
        plain = record.levelname
        if color:
            record.levelname = f"{color}{plain}{self.RESET}"
        try:
            line = super().format(record)
        finally:
            # other handlers may format the same record
            record.levelname = plain

        where = [str(v) for v in (getattr(record, "object_name", None), getattr(record, "irrep", None)) if v]
        return f"{line} [{' '.join(where)}]" if where else line


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Install the single stderr handler on the root logger.

    Args:
        level: Log level name; defaults to ``settings.LOG_LEVEL``
        fmt: ``json`` or ``console``; defaults to ``settings.LOG_FORMAT``
    """
    level = (level or settings.LOG_LEVEL).upper()
    fmt = fmt or settings.LOG_FORMAT

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG)
    handler.addFilter(ContextInjectionFilter())
    if fmt == "json":
        handler.setFormatter(CustomJsonFormatter("%(timestamp)s %(level)s %(logger)s %(message)s", timestamp=True))
    else:
        handler.setFormatter(
            ColoredConsoleFormatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%H:%M:%S")
        )

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level))
    root_logger.handlers.clear()
    root_logger.addHandler(handler)

    logging.getLogger("opentelemetry").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 2)


@contextmanager
def log_timer(operation_name: str, logger: Optional[logging.Logger] = None, **fields: Any) -> Iterator[None]:
    """Log how long a block took, with optional extra fields.

    Example:
        with log_timer("tensor_over_base", logger, bundle=p.name):
            build_quotient()
        # {"message": "Operation completed: tensor_over_base", "duration_ms": 12.5, "bundle": ...}
    """
    logger = logger or logging.getLogger(__name__)
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.info(
            f"Operation completed: {operation_name}",
            extra={**fields, "operation": operation_name, "duration_ms": _elapsed_ms(start)},
        )


def log_duration(operation_name: Optional[str] = None) -> Callable[[Callable], Callable]:
    """Decorator logging a call's duration.

    Failed checks (engine errors) log at WARNING, engine defects and any
    other exception at ERROR; the exception is re-raised either way.
    """

    def decorator(func: Callable) -> Callable:
        name = operation_name or func.__name__
        func_logger = logging.getLogger(func.__module__)

        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                checked = isinstance(e, HopfGaloisError) and not isinstance(e, EngineDefectError)
                func_logger.log(
                    logging.WARNING if checked else logging.ERROR,
                    f"Function failed: {name}",
                    extra={
                        "function": name,
                        "duration_ms": _elapsed_ms(start),
                        "error": str(e),
                        "error_type": type(e).__name__,
                    },
                )
                raise
            func_logger.info(f"Function completed: {name}", extra={"function": name, "duration_ms": _elapsed_ms(start)})
            return result

        return wrapper

    return decorator
