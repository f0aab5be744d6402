"""Stdout key-value layout and the structured report file."""

import json
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

from hopfgalois.schemas.reports import CommandReport


def _is_leaf(value: Any) -> bool:
    return not isinstance(value, (dict, list)) or (
        isinstance(value, list) and all(not isinstance(item, (dict, list)) for item in value)
    )


def _format(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False)


def flatten(value: Any, prefix: str = "") -> Iterator[tuple[str, str]]:
    """Dotted keys in model field order; lists of plain values stay inline."""
    if _is_leaf(value):
        yield prefix, _format(value)
        return
    items = value.items() if isinstance(value, dict) else enumerate(value)
    for key, item in items:
        yield from flatten(item, f"{prefix}.{key}" if prefix else str(key))


def render(report: CommandReport) -> str:
    return "".join(f"{key} = {value}\n" for key, value in flatten(report.model_dump(mode="json")))


def write_report(report: CommandReport, stdout: TextIO, out: Optional[str] = None, text: Optional[str] = None) -> None:
    """Print the report (or the command's own text) and optionally save it as JSON."""
    stdout.write(text if text is not None else render(report))
    if out:
        Path(out).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
