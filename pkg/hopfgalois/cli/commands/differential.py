"""``differential``: universal calculus, horizontal forms and the Galois cross-check."""

import argparse

from hopfgalois.cli.deps import checked_bundles, load_input
from hopfgalois.cli.middleware import Outcome
from hopfgalois.core.exceptions import EngineDefectError
from hopfgalois.services.differential_service import DifferentialService
from hopfgalois.utils.context import operation_context


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("differential", parents=parents, help="First-order forms and bm-md")
    parser.add_argument("file", help="Input file")
    parser.add_argument("--bundle", help="Only this bundle")


def run(args: argparse.Namespace) -> Outcome:
    parsed = load_input(args.file)
    outcome = Outcome()
    for service in checked_bundles(parsed, args.bundle):
        p = service.bundle
        with operation_context("differential.cross_check_galois", object_name=p.name):
            diff = DifferentialService(p, service)
            fodc = diff.fodc_report()
            split = diff.vertical_split_report()
            bm_md = diff.check_bm_md()
            cross = diff.cross_check_galois()
        if not cross.consistent:
            raise EngineDefectError(
                f"Galois verdict {cross.bijective} disagrees with bm-md verdict {cross.bm_md_holds} on {p.name}"
            )
        outcome.results += [fodc, split, bm_md, cross]
        outcome.ok = outcome.ok and bm_md.holds
    return outcome
