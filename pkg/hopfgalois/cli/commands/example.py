"""``example``: list or emit corpus examples."""

import argparse
from pathlib import Path

from hopfgalois.cli.middleware import Outcome
from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.services.corpus_service import example, example_names
from hopfgalois.services.format_service import emit
from hopfgalois.utils.logger import get_logger

logger = get_logger(__name__)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("example", parents=parents, help="Corpus examples")
    parser.add_argument("name", nargs="?", help="Example name")
    parser.add_argument("--list", action="store_true", help="Print the example names")
    parser.add_argument("--emit", metavar="PATH", help="Write the example file (- for stdout)")


def run(args: argparse.Namespace) -> Outcome:
    if args.list:
        return Outcome(text="".join(f"{name}\n" for name in example_names()))
    if args.name is None:
        raise MalformedInputError("example needs a name or --list")

    ex = example(args.name)
    text = emit(
        hopfs=[ex.hopf],
        bundles=[ex.bundle],
        coreps={f"{ex.hopf.name}-irreps": ex.irreps} if ex.irreps else None,
    )
    if args.emit == "-":
        return Outcome(text=text)

    results = [BundleService(ex.bundle).galois_check()]
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
        logger.info("Wrote example file", extra={"example": ex.name, "path": args.emit})
    return Outcome(results=results)
