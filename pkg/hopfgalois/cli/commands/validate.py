"""``validate``: axiom suites for every object of a file."""

import argparse

from hopfgalois.cli.deps import load_input
from hopfgalois.cli.middleware import Outcome
from hopfgalois.schemas.reports import EngineReport
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.services.hopf_service import check_hopf, corep_report
from hopfgalois.utils.context import operation_context


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("validate", parents=parents, help="Check Hopf, bundle and corep axioms")
    parser.add_argument("file", help="Input file")


def run(args: argparse.Namespace) -> Outcome:
    parsed = load_input(args.file)
    results: list[EngineReport] = []
    for h in parsed.hopfs.values():
        with operation_context("hopf.check_hopf", object_name=h.name):
            results.append(check_hopf(h))
    for p in parsed.bundles.values():
        with operation_context("bundle.check_bundle", object_name=p.name):
            results.append(BundleService(p).check_bundle())
    for group in parsed.coreps.values():
        for u in group:
            with operation_context("hopf.check_corep", irrep=u.name):
                results.append(corep_report(u))
    return Outcome(results=results, ok=all(r.ok for r in results))
