"""``galois``: surjectivity and bijectivity of the canonical map."""

import argparse

from hopfgalois.cli.deps import checked_bundles, load_input
from hopfgalois.cli.middleware import Outcome
from hopfgalois.utils.context import operation_context


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("galois", parents=parents, help="Freeness and Galois checks")
    parser.add_argument("file", help="Input file")
    parser.add_argument("--bundle", help="Only this bundle")


def run(args: argparse.Namespace) -> Outcome:
    parsed = load_input(args.file)
    outcome = Outcome()
    for service in checked_bundles(parsed, args.bundle):
        with operation_context("bundle.galois_check", object_name=service.bundle.name):
            freeness = service.freeness_check()
            galois = service.galois_check()
        outcome.results += [freeness, galois]
        outcome.ok = outcome.ok and galois.bijective
    return outcome
