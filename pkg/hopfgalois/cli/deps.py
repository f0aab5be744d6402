"""Shared inputs for commands: loaded files, checked bundles and irreducible lists."""

from typing import Optional

from hopfgalois.core.exceptions import MalformedInputError, PreconditionError
from hopfgalois.models import Bundle, Corep
from hopfgalois.services import format_service
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.services.corpus_service import builtin_irreps, fn_algebra, group_by_name
from hopfgalois.services.format_service import ParsedFile
from hopfgalois.services.hopf_service import check_hopf
from hopfgalois.utils.context import set_context
from hopfgalois.utils.logger import get_logger

logger = get_logger(__name__)

BUILTIN_PREFIX = "builtin:"


def load_input(path: str) -> ParsedFile:
    set_context(source=path)
    return format_service.load(path)


def checked_bundles(parsed: ParsedFile, name: Optional[str] = None) -> list[BundleService]:
    """
    Services for the selected bundles, after their axiom suites pass.

    Args:
        parsed: Loaded input file
        name: Restrict to this bundle (default: every bundle in file order)

    Raises:
        MalformedInputError: If the file has no bundle or the name is unknown
        PreconditionError: If a bundle or its Hopf algebra fails an axiom
    """
    if name is not None:
        if name not in parsed.bundles:
            raise MalformedInputError(f"No bundle named {name!r}; file has {', '.join(parsed.bundles) or 'none'}")
        bundles = [parsed.bundles[name]]
    else:
        bundles = list(parsed.bundles.values())
    if not bundles:
        raise MalformedInputError("Input file contains no bundle")

    services = []
    for p in bundles:
        hopf_report = check_hopf(p.hopf)
        if not hopf_report.ok:
            first = hopf_report.violations[0]
            raise PreconditionError(f"Hopf algebra {p.hopf.name} fails {first.axiom} at {first.witness}")
        service = BundleService(p)
        bundle_report = service.check_bundle()
        if not bundle_report.ok:
            first = bundle_report.violations[0]
            raise PreconditionError(f"Bundle {p.name} fails {first.axiom} at {first.witness}")
        services.append(service)
    return services


def resolve_irreps(spec: Optional[str], parsed: ParsedFile, bundle: Bundle) -> Optional[list[Corep]]:
    """
    Irreducible corepresentations for a bundle.

    Args:
        spec: ``builtin:<group>``, a file with a ``coreps`` block, or None to
            use the coreps of the input file over the bundle's Hopf algebra
        parsed: Loaded input file
        bundle: Bundle the coreps must live over

    Returns:
        The coreps, or None when nothing was supplied

    Raises:
        PreconditionError: If the supplied coreps live over another Hopf algebra
        UnsupportedGroupError: If the builtin group is unknown
    """
    if spec is None:
        found = parsed.coreps_over(bundle.hopf)
        return found or None

    if spec.startswith(BUILTIN_PREFIX):
        group = spec[len(BUILTIN_PREFIX):]
        if fn_algebra(group_by_name(group)) != bundle.hopf:
            raise PreconditionError(
                f"Builtin irreps of {group} live over functions on {group}, not over {bundle.hopf.name}"
            )
        return builtin_irreps(group, bundle.hopf)

    found = format_service.load(spec).coreps_over(bundle.hopf)
    if not found:
        raise PreconditionError(f"{spec} has no corepresentation over {bundle.hopf.name}")
    logger.info("Loaded irreducible list", extra={"irreps": [u.name for u in found], "file": spec})
    return found
