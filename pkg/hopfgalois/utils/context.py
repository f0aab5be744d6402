"""Run context shared by logging and tracing.

Context variables carry the current command run (run id, command, source
file), the object being analysed, the irreducible corepresentation being
processed and the engine action. Per-irrep worker threads receive a copy
of the caller's context (see ``bundle_service.map_ordered``).
"""

import contextvars
from contextlib import contextmanager
from typing import Dict, Iterator, Optional

from opentelemetry import trace

run_id_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("run_id", default=None)
command_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("command", default=None)
source_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("source", default=None)
object_name_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("object_name", default=None)
irrep_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("irrep", default=None)
action_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("action", default=None)

_VARS: Dict[str, contextvars.ContextVar[Optional[str]]] = {
    var.name: var for var in (run_id_var, command_var, source_var, object_name_var, irrep_var, action_var)
}

CONTEXT_FIELDS = tuple(_VARS)

# span attribute names for the fields operation_context mirrors onto spans
_SPAN_KEYS = {"action": "action", "object_name": "object.name", "irrep": "irrep.name"}


def set_context(
    run_id: Optional[str] = None,
    command: Optional[str] = None,
    source: Optional[str] = None,
    object_name: Optional[str] = None,
    irrep: Optional[str] = None,
    action: Optional[str] = None,
) -> None:
    """Set the given context fields; ``None`` leaves a field unchanged.

    Args:
        run_id: Identifier of the current command invocation
        command: CLI command being executed (e.g. 'galois')
        source: Input file path
        object_name: Bundle or Hopf algebra being analysed
        irrep: Irreducible corepresentation being processed
        action: Engine operation (e.g. 'bundle.galois_check')
    """
    values = dict(run_id=run_id, command=command, source=source, object_name=object_name, irrep=irrep, action=action)
    for key, value in values.items():
        if value is not None:
            _VARS[key].set(value)


def get_context() -> Dict[str, str]:
    """The fields that are currently set."""
    return {key: value for key, var in _VARS.items() if (value := var.get())}


def clear_context() -> None:
    for var in _VARS.values():
        var.set(None)


def _restore(snapshot: Dict[str, str]) -> None:
    for key, var in _VARS.items():
        var.set(snapshot.get(key))


@contextmanager
def operation_context(
    action: str,
    object_name: Optional[str] = None,
    irrep: Optional[str] = None,
) -> Iterator[None]:
    """Set the engine action (and object/irrep) for a block, then restore.

    The values are also written onto the current span when it is recording.

    Example:
        with operation_context("bundle.dual_bases", irrep="sign"):
            logger.info("Solving dual bases")
    """
    snapshot = get_context()
    try:
        set_context(action=action, object_name=object_name, irrep=irrep)

        span = trace.get_current_span()
        if span.is_recording():
            for key, value in {"action": action, "object_name": object_name, "irrep": irrep}.items():
                if value:
                    span.set_attribute(_SPAN_KEYS[key], value)

        yield
    finally:
        _restore(snapshot)


def get_trace_context() -> Dict[str, str]:
    """Hex trace and span ids of the recording span, or an empty dict."""
    span = trace.get_current_span()
    if not span.is_recording():
        return {}
    span_context = span.get_span_context()
    if not span_context.is_valid:
        return {}
    return {
        "trace_id": format(span_context.trace_id, "032x"),
        "span_id": format(span_context.span_id, "016x"),
    }
