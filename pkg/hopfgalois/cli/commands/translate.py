"""``translate``: the translation map, optionally verified against the canonical map."""

import argparse

from hopfgalois.cli.deps import checked_bundles, load_input, resolve_irreps
from hopfgalois.cli.middleware import Outcome
from hopfgalois.core.exceptions import PreconditionError
from hopfgalois.services.format_service import translation_report
from hopfgalois.utils.context import operation_context


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("translate", parents=parents, help="Translation map τ")
    parser.add_argument("file", help="Input file")
    parser.add_argument("--method", choices=("pw", "solve"), default="pw", help="Dual bases or direct inversion")
    parser.add_argument("--irreps", help="Irreducible list: a file or builtin:<group>")
    parser.add_argument("--verify", action="store_true", help="Check X∘τ = id and τ∘X = id")
    parser.add_argument("--bundle", help="Only this bundle")


def run(args: argparse.Namespace) -> Outcome:
    parsed = load_input(args.file)
    outcome = Outcome()
    for service in checked_bundles(parsed, args.bundle):
        p = service.bundle
        irreps = resolve_irreps(args.irreps, parsed, p)
        with operation_context(f"bundle.translation_map_{args.method}", object_name=p.name):
            if args.method == "pw":
                if irreps is None:
                    raise PreconditionError(f"No irreducible corepresentations supplied for {p.name}")
                table = service.translation_map_pw(irreps)
            else:
                table = service.translation_map_solve()
        outcome.results.append(translation_report(table))
        if args.verify:
            with operation_context("bundle.verify_inverse", object_name=p.name):
                check = service.verify_inverse(table, irreps)
            outcome.results.append(check)
            outcome.ok = outcome.ok and check.holds
    return outcome
