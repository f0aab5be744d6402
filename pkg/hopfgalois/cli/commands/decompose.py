"""``decompose``: isotypic decomposition of the total space."""

import argparse

from hopfgalois.cli.deps import checked_bundles, load_input, resolve_irreps
from hopfgalois.cli.middleware import Outcome
from hopfgalois.core.exceptions import PreconditionError
from hopfgalois.utils.context import operation_context


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("decompose", parents=parents, help="Peter-Weyl decomposition")
    parser.add_argument("file", help="Input file")
    parser.add_argument("--irreps", help="Irreducible list: a file or builtin:<group>")
    parser.add_argument("--bundle", help="Only this bundle")


def run(args: argparse.Namespace) -> Outcome:
    parsed = load_input(args.file)
    outcome = Outcome()
    for service in checked_bundles(parsed, args.bundle):
        p = service.bundle
        irreps = resolve_irreps(args.irreps, parsed, p)
        if irreps is None:
            raise PreconditionError(f"No irreducible corepresentations supplied for {p.name}")
        with operation_context("bundle.peter_weyl_decompose", object_name=p.name):
            report = service.peter_weyl_report(irreps)
        outcome.results.append(report)
        outcome.ok = outcome.ok and report.complete
    return outcome
