"""Pytest configuration and fixtures."""

import json
from pathlib import Path
from typing import Callable

import pytest
from opentelemetry import trace

from hopfgalois.services.corpus_service import example, fn_algebra, cyclic_group, symmetric_group_3
from hopfgalois.utils.context import clear_context

# Hand-written Z/2 function algebra in the file format.
Z2_HOPF_BLOCK = {
    "kind": "hopf",
    "name": "k^Z/2",
    "dim": 2,
    "basis": ["d0", "d1"],
    "mult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
    "unit": [[0, "1"], [1, "1"]],
    "comult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
    "counit": [[0, "1"]],
    "antipode": [[0, 0, "1"], [1, 1, "1"]],
    "involution": None,
}


@pytest.fixture
def z2_document() -> dict:
    """A one-object document holding functions on Z/2."""
    return {
        "format_version": "1",
        "field": {"conductor": 1},
        "objects": [json.loads(json.dumps(Z2_HOPF_BLOCK))],
    }


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, object], str]:
    """Write text or a JSON document under tmp_path and return its path."""

    def _write(name: str, content: object) -> str:
        path = tmp_path / name
        text = content if isinstance(content, str) else json.dumps(content, indent=2)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def fn_z2():
    return fn_algebra(cyclic_group(2))


@pytest.fixture
def fn_s3():
    return fn_algebra(symmetric_group_3())


@pytest.fixture
def z2_free_4():
    return example("z2-free-4")


@pytest.fixture
def z2_nonfree_3():
    return example("z2-nonfree-3")


@pytest.fixture
def sweedler_trivial():
    return example("sweedler-trivial")


@pytest.fixture(autouse=True)
def reset_context():
    """Keep context variables from leaking between tests."""
    clear_context()
    yield
    clear_context()


@pytest.fixture(scope="session", autouse=True)
def shutdown_tracer_provider():
    """Shutdown OpenTelemetry TracerProvider after all tests complete.

    The BatchSpanProcessor's background thread must stop before pytest
    closes stdout/stderr.
    """
    yield

    try:
        tracer_provider = trace.get_tracer_provider()
        if hasattr(tracer_provider, "force_flush"):
            tracer_provider.force_flush(timeout_millis=5000)
        if hasattr(tracer_provider, "shutdown"):
            tracer_provider.shutdown()
    except Exception:
        pass
