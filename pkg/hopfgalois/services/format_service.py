"""Parsing and emitting the JSON structure-constant file format."""

import json
from dataclasses import dataclass, field
from math import lcm
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from pydantic import ValidationError

from hopfgalois.config import settings
from hopfgalois.core.exceptions import ParseError, ScalarParseError
from hopfgalois.linalg import Mat, Scalar
from hopfgalois.models import Bundle, Corep, HopfAlgebra, TranslationTable
from hopfgalois.schemas.file_format import BundleBlock, CorepListBlock, HopfBlock, InputFile
from hopfgalois.schemas.reports import TranslationReport
from hopfgalois.utils.logger import get_logger
from hopfgalois.utils.telemetry import add_span_attributes, get_tracer, trace_function

logger = get_logger(__name__)
tracer = get_tracer()


@dataclass
class ParsedFile:
    """Objects of one input file, keyed by name in file order."""

    conductor: int
    source: Optional[str] = None
    hopfs: dict[str, HopfAlgebra] = field(default_factory=dict)
    bundles: dict[str, Bundle] = field(default_factory=dict)
    coreps: dict[str, list[Corep]] = field(default_factory=dict)

    def coreps_over(self, h: HopfAlgebra) -> list[Corep]:
        """Every corep in the file over the given Hopf algebra, in file order."""
        return [u for group in self.coreps.values() for u in group if u.hopf == h]


# Parsing
def _build_mat(
    entries: Sequence[tuple],
    bounds: Sequence[int],
    place: Callable[..., tuple[int, int]],
    shape: tuple[int, int],
    path: str,
    conductor: int,
) -> Mat:
    """
    Turn index/scalar entries into a matrix.

    Args:
        entries: ``(i, …, "scalar")`` tuples
        bounds: Exclusive upper bound of every index
        place: Maps the indices to a (row, col) position
        shape: Matrix shape
        path: JSON path of the entry list, for error locations
        conductor: Conductor the scalars are written in

    Raises:
        ParseError: On an out-of-range index or a repeated entry
        ScalarParseError: On a scalar that does not parse
    """
    data: dict[tuple[int, int], Scalar] = {}
    seen: set[tuple[int, ...]] = set()
    for t, entry in enumerate(entries):
        *indices, text = entry
        where = f"{path}.{t}"
        for index, bound in zip(indices, bounds):
            if not 0 <= index < bound:
                raise ParseError(
                    f"index {index} out of range 0..{bound - 1} in triple {list(entry)}", location=where
                )
        key = tuple(indices)
        if key in seen:
            raise ParseError(f"repeated entry {list(key)}", location=where)
        seen.add(key)
        try:
            value = Scalar.parse(text, conductor)
        except ScalarParseError as e:
            raise ScalarParseError(e.detail, location=where) from e
        if value:
            data[place(*indices)] = value
    return Mat(shape[0], shape[1], data)


def _labels(basis: Optional[list[str]], dim: int, prefix: str, path: str) -> tuple[str, ...]:
    if basis is None:
        return tuple(f"{prefix}{i}" for i in range(dim))
    if len(basis) != dim:
        raise ParseError(f"{len(basis)} basis labels for dimension {dim}", location=f"{path}.basis")
    return tuple(basis)


def _parse_hopf(block: HopfBlock, path: str, conductor: int) -> HopfAlgebra:
    n = block.dim
    return HopfAlgebra(
        name=block.name,
        dim=n,
        basis_labels=_labels(block.basis, n, "e", path),
        mult=_build_mat(block.mult, (n, n, n), lambda i, j, k: (k, i * n + j), (n, n * n), f"{path}.mult", conductor),
        unit=_build_mat(block.unit, (n,), lambda k: (k, 0), (n, 1), f"{path}.unit", conductor),
        comult=_build_mat(block.comult, (n, n, n), lambda i, j, k: (j * n + k, i), (n * n, n), f"{path}.comult", conductor),
        counit=_build_mat(block.counit, (n,), lambda i: (0, i), (1, n), f"{path}.counit", conductor),
        antipode=_build_mat(block.antipode, (n, n), lambda i, j: (j, i), (n, n), f"{path}.antipode", conductor),
        involution=None
        if block.involution is None
        else _build_mat(block.involution, (n, n), lambda i, j: (j, i), (n, n), f"{path}.involution", conductor),
    )


def _resolve(name: str, hopfs: dict[str, HopfAlgebra], path: str) -> HopfAlgebra:
    h = hopfs.get(name)
    if h is None:
        raise ParseError(f"unresolved Hopf algebra reference {name!r}", location=f"{path}.hopf")
    return h


def _parse_bundle(block: BundleBlock, path: str, conductor: int, hopfs: dict[str, HopfAlgebra]) -> Bundle:
    a = _resolve(block.hopf, hopfs, path)
    n, dim_a = block.dim, a.dim
    return Bundle(
        name=block.name,
        hopf=a,
        total_dim=n,
        basis_labels=_labels(block.basis, n, "b", path),
        mult=_build_mat(block.mult, (n, n, n), lambda i, j, k: (k, i * n + j), (n, n * n), f"{path}.mult", conductor),
        unit=_build_mat(block.unit, (n,), lambda k: (k, 0), (n, 1), f"{path}.unit", conductor),
        coaction=_build_mat(
            block.coaction,
            (n, n, dim_a),
            lambda i, j, x: (j * dim_a + x, i),
            (n * dim_a, n),
            f"{path}.coaction",
            conductor,
        ),
    )


def _parse_coreps(block: CorepListBlock, path: str, conductor: int, hopfs: dict[str, HopfAlgebra]) -> list[Corep]:
    a = _resolve(block.hopf, hopfs, path)
    coreps = []
    for c, item in enumerate(block.coreps):
        n = item.dim
        where = f"{path}.coreps.{c}.coeffs"
        coeffs = _build_mat(
            item.coeffs, (n, n, a.dim), lambda i, j, x: (x, i * n + j), (a.dim, n * n), where, conductor
        )
        coreps.append(Corep(hopf=a, name=item.name, dim_carrier=n, coeffs=coeffs))
    return coreps


def parse(text: str, source: Optional[str] = None) -> ParsedFile:
    """
    Parse a document into exact objects.

    Args:
        text: JSON document
        source: File name, for logging

    Returns:
        The Hopf algebras, bundles and corep lists, keyed by name

    Raises:
        ParseError: With ``line:col`` for JSON syntax errors and a dotted
            JSON path for structural ones
    """
    with tracer.start_as_current_span("format.parse"):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, location=f"{e.lineno}:{e.colno}") from e
        try:
            document = InputFile.model_validate(raw)
        except ValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"]) or None
            raise ParseError(first["msg"], location=location) from e

        if document.format_version != settings.FORMAT_VERSION:
            raise ParseError(
                f"unsupported format version {document.format_version!r}, expected {settings.FORMAT_VERSION!r}",
                location="format_version",
            )

        conductor = document.field.conductor
        parsed = ParsedFile(conductor=conductor, source=source)
        for k, block in enumerate(document.objects):
            if isinstance(block, HopfBlock):
                parsed.hopfs[block.name] = _parse_hopf(block, f"objects.{k}", conductor)
        for k, block in enumerate(document.objects):
            path = f"objects.{k}"
            if isinstance(block, BundleBlock):
                parsed.bundles[block.name] = _parse_bundle(block, path, conductor, parsed.hopfs)
            elif isinstance(block, CorepListBlock):
                parsed.coreps[block.name] = _parse_coreps(block, path, conductor, parsed.hopfs)

        add_span_attributes(
            **{
                "file.conductor": conductor,
                "file.hopfs": len(parsed.hopfs),
                "file.bundles": len(parsed.bundles),
            }
        )
        logger.info(
            "Parsed input file",
            extra={
                "source": source,
                "conductor": conductor,
                "hopfs": list(parsed.hopfs),
                "bundles": list(parsed.bundles),
                "coreps": list(parsed.coreps),
            },
        )
        return parsed


@trace_function("format.load")
def load(path: str) -> ParsedFile:
    """
    Read and parse a file.

    Raises:
        ParseError: If the file cannot be read or parsed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return parse(text, source=path)


# Emitting
def _entries(m: Mat, index: Callable[[int, int], list[int]], conductor: int) -> list[list]:
    rows = [index(i, j) + [value.to_string(conductor)] for i, j, value in m.entries()]
    return sorted(rows, key=lambda row: row[:-1])


def _hopf_document(h: HopfAlgebra, conductor: int) -> dict:
    n = h.dim
    return {
        "kind": "hopf",
        "name": h.name,
        "dim": n,
        "basis": list(h.basis_labels),
        "mult": _entries(h.mult, lambda k, c: [*divmod(c, n), k], conductor),
        "unit": _entries(h.unit, lambda k, _: [k], conductor),
        "comult": _entries(h.comult, lambda r, i: [i, *divmod(r, n)], conductor),
        "counit": _entries(h.counit, lambda _, i: [i], conductor),
        "antipode": _entries(h.antipode, lambda j, i: [i, j], conductor),
        "involution": None
        if h.involution is None
        else _entries(h.involution, lambda j, i: [i, j], conductor),
    }


def _bundle_document(p: Bundle, conductor: int) -> dict:
    n, dim_a = p.total_dim, p.hopf.dim
    return {
        "kind": "bundle",
        "name": p.name,
        "hopf": p.hopf.name,
        "dim": n,
        "basis": list(p.basis_labels),
        "mult": _entries(p.mult, lambda k, c: [*divmod(c, n), k], conductor),
        "unit": _entries(p.unit, lambda k, _: [k], conductor),
        "coaction": _entries(p.coaction, lambda r, i: [i, *divmod(r, dim_a)], conductor),
    }


def _coreps_document(name: str, coreps: Sequence[Corep], conductor: int) -> dict:
    return {
        "kind": "coreps",
        "name": name,
        "hopf": coreps[0].hopf.name,
        "coreps": [
            {
                "name": u.name,
                "dim": u.dim_carrier,
                "coeffs": _entries(
                    u.coeffs, lambda x, c, n=u.dim_carrier: [*divmod(c, n), x], conductor
                ),
            }
            for u in coreps
        ],
    }


def _conductor(mats: Iterable[Mat]) -> int:
    n = 1
    for m in mats:
        n = lcm(n, m.conductor)
    return n


def emit(
    hopfs: Sequence[HopfAlgebra] = (),
    bundles: Sequence[Bundle] = (),
    coreps: Optional[dict[str, Sequence[Corep]]] = None,
) -> str:
    """
    Serialise objects as a document with sorted keys and a trailing newline.

    The conductor is the least one all scalars live in.
    """
    corep_lists = {name: list(group) for name, group in (coreps or {}).items() if group}
    mats: list[Mat] = []
    for h in hopfs:
        mats += [h.mult, h.unit, h.comult, h.counit, h.antipode]
        if h.involution is not None:
            mats.append(h.involution)
    for p in bundles:
        mats += [p.mult, p.unit, p.coaction]
    for group in corep_lists.values():
        mats += [u.coeffs for u in group]
    conductor = _conductor(mats)

    objects = [_hopf_document(h, conductor) for h in hopfs]
    objects += [_bundle_document(p, conductor) for p in bundles]
    objects += [_coreps_document(name, group, conductor) for name, group in corep_lists.items()]
    document = {
        "format_version": settings.FORMAT_VERSION,
        "field": {"conductor": conductor},
        "objects": objects,
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def translation_report(table: TranslationTable) -> TranslationReport:
    """τ values keyed by Hopf basis label, as (i, j, scalar) over the quotient basis b_i⊗b_j."""
    p = table.bundle
    n = p.total_dim
    t = table.tensor
    representatives = [next(iter(column)) for column in t.section.sparse_columns()]
    conductor = table.as_matrix().conductor
    values = {}
    for label, value in zip(p.hopf.basis_labels, table.values):
        triples = []
        for k in sorted(value):
            i, j = divmod(representatives[k], n)
            triples.append((i, j, value[k].to_string(conductor)))
        values[label] = triples
    return TranslationReport(name=p.name, method=table.method, tensor_dim=t.dim, values=values)
