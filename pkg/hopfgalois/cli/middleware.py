"""Command middleware: run context, tracing, timing and the exit-code contract."""

import argparse
import time
import uuid
from dataclasses import dataclass, field
from typing import Callable, Optional

from hopfgalois.core.exceptions import HopfGaloisError
from hopfgalois.schemas.reports import CommandReport, EngineReport
from hopfgalois.utils.context import clear_context, set_context
from hopfgalois.utils.logger import get_logger
from hopfgalois.utils.telemetry import add_span_attributes, get_tracer

logger = get_logger(__name__)


@dataclass
class Outcome:
    """What a command handler produced.

    ``text`` replaces the key-value report on stdout (example listings and
    files emitted to ``-``).
    """

    results: list[EngineReport] = field(default_factory=list)
    ok: bool = True
    text: Optional[str] = None


Handler = Callable[[argparse.Namespace], Outcome]


def run_command(command: str, handler: Handler, args: argparse.Namespace) -> tuple[CommandReport, Optional[str]]:
    """
    Run one command handler inside a traced, timed run context.

    Engine errors become a failed report carrying the error's exit code;
    anything else is logged and re-raised.

    Returns:
        The command report and the raw text the handler asked to print, if any
    """
    source = getattr(args, "file", None)
    set_context(run_id=uuid.uuid4().hex, command=command, source=source, action=f"cli.{command}")
    tracer = get_tracer()

    with tracer.start_as_current_span(f"cli.{command}") as span:
        add_span_attributes(**{"cli.command": command, "cli.source": source})
        logger.info("Command started", extra={"source": source})
        start_time = time.perf_counter()

        try:
            outcome = handler(args)
            duration_ms = (time.perf_counter() - start_time) * 1000
            report = CommandReport(
                command=command,
                source=source,
                ok=outcome.ok,
                exit_code=0 if outcome.ok else 1,
                results=outcome.results,
                timing_ms=round(duration_ms, 2),
            )
            add_span_attributes(**{"cli.ok": outcome.ok, "cli.duration_ms": round(duration_ms, 2)})
            log = logger.info if outcome.ok else logger.warning
            log(
                "Command completed",
                extra={"ok": outcome.ok, "results": len(outcome.results), "duration_ms": round(duration_ms, 2)},
            )
            return report, outcome.text

        except HopfGaloisError as e:
            duration_ms = (time.perf_counter() - start_time) * 1000
            span.record_exception(e)
            add_span_attributes(**{"cli.exit_code": e.exit_code, "error.type": type(e).__name__})
            logger.warning(
                "Command failed",
                extra={
                    "error": str(e),
                    "error_type": type(e).__name__,
                    "exit_code": e.exit_code,
                    "duration_ms": round(duration_ms, 2),
                },
            )
            report = CommandReport(
                command=command,
                source=source,
                ok=False,
                exit_code=e.exit_code,
                error=f"{type(e).__name__}: {e}",
                timing_ms=round(duration_ms, 2),
            )
            return report, None

        except Exception as e:
            span.record_exception(e)
            logger.error(
                "Command crashed",
                extra={"error": str(e), "error_type": type(e).__name__},
                exc_info=True,
            )
            raise

        finally:
            clear_context()
