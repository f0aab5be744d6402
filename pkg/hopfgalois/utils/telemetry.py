"""OpenTelemetry tracing for engine operations.

Spans are named ``<area>.<operation>`` (``bundle.galois_check``,
``hopf.check_hopf``) and carry dimensions, ranks and verdicts as attributes.
Nothing read back from a span ever feeds a report.
"""

import logging
from collections.abc import Mapping, Sequence
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Iterator, Optional

from opentelemetry import trace
from opentelemetry.sdk.resources import SERVICE_NAME, SERVICE_VERSION, Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.sdk.trace.sampling import TraceIdRatioBased

from hopfgalois import __version__
from hopfgalois.config import settings

logger = logging.getLogger(__name__)

_tracer: Optional[trace.Tracer] = None
_provider: Optional[TracerProvider] = None

AttributeValue = Any


def _attribute_value(value: AttributeValue) -> AttributeValue:
    """Coerce a value into something a span attribute accepts.

    Scalars and other engine objects become strings; sequences become
    homogeneous tuples (strings unless every item is an int).
    """
    if isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Sequence):
        items = list(value)
        if all(isinstance(v, int) and not isinstance(v, bool) for v in items):
            return tuple(items)
        return tuple(str(v) for v in items)
    return str(value)


def _set_attributes(span: trace.Span, attributes: Mapping[str, AttributeValue]) -> None:
    for key, value in attributes.items():
        if value is not None:
            span.set_attribute(key, _attribute_value(value))


def _build_provider() -> TracerProvider:
    resource = Resource(
        attributes={
            SERVICE_NAME: settings.OTEL_SERVICE_NAME,
            SERVICE_VERSION: __version__,
            "environment": settings.ENVIRONMENT,
        }
    )
    provider = TracerProvider(resource=resource, sampler=TraceIdRatioBased(settings.OTEL_TRACE_SAMPLE_RATE))
    # Spans go to stderr with the logs; stdout holds the report only.
    if settings.OTEL_EXPORT_CONSOLE:
        provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter()))
    return provider


def setup_telemetry() -> None:
    """Install the tracer provider once per process.

    The command-line entry point calls this before any engine work. Later
    calls keep the first provider, so tests and repeated ``main()`` calls
    do not stack exporters.
    """
    global _tracer, _provider

    if _provider is not None:
        return

    _provider = _build_provider()
    trace.set_tracer_provider(_provider)
    _tracer = trace.get_tracer(__name__, __version__)

    logger.info(
        "Tracing initialized",
        extra={
            "service_name": settings.OTEL_SERVICE_NAME,
            "sample_rate": settings.OTEL_TRACE_SAMPLE_RATE,
            "export_console": settings.OTEL_EXPORT_CONSOLE,
        },
    )


def get_tracer() -> trace.Tracer:
    """Return the engine tracer (the API's proxy tracer before setup)."""
    global _tracer

    if _tracer is None:
        _tracer = trace.get_tracer(__name__, __version__)
    return _tracer


@contextmanager
def trace_operation(name: str, attributes: Optional[Mapping[str, AttributeValue]] = None) -> Iterator[trace.Span]:
    """Run a block inside a span named ``name``.

    Exceptions are recorded on the span and re-raised. Engine errors also
    leave their command-line exit code as ``error.exit_code``.

    Example:
        with trace_operation("bundle.galois_check", {"bundle.dim": 4}) as span:
            ...
    """
    with get_tracer().start_as_current_span(name) as span:
        if attributes:
            _set_attributes(span, attributes)
        try:
            yield span
        except Exception as e:
            exit_code = getattr(e, "exit_code", None)
            if exit_code is not None:
                span.set_attribute("error.exit_code", exit_code)
            span.record_exception(e)
            span.set_status(trace.Status(trace.StatusCode.ERROR, str(e)))
            raise


def trace_function(name: Optional[str] = None) -> Callable[[Callable], Callable]:
    """Decorator form of :func:`trace_operation`; the span defaults to ``module.function``."""

    def decorator(func: Callable) -> Callable:
        span_name = name or f"{func.__module__}.{func.__name__}"

        @wraps(func)
        def wrapper(*args, **kwargs):
            with trace_operation(span_name):
                return func(*args, **kwargs)

        return wrapper

    return decorator


def add_span_attributes(**attributes: AttributeValue) -> None:
    """Set attributes on the current span; ``None`` values are skipped.

    Example:
        add_span_attributes(**{"canonical_map.rank": 8})
    """
    span = trace.get_current_span()
    if span.is_recording():
        _set_attributes(span, attributes)


def add_span_event(name: str, attributes: Optional[Mapping[str, AttributeValue]] = None) -> None:
    span = trace.get_current_span()
    if span.is_recording():
        span.add_event(name, {k: _attribute_value(v) for k, v in (attributes or {}).items() if v is not None})
