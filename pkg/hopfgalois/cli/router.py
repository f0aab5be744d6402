"""Argument parser with one subcommand per command module."""

import argparse

from hopfgalois import __version__
from hopfgalois.cli.commands import decompose, differential, example, galois, translate, validate
from hopfgalois.cli.middleware import Handler

COMMANDS = {
    "validate": validate,
    "galois": galois,
    "translate": translate,
    "decompose": decompose,
    "differential": differential,
    "example": example,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="Also write the report as JSON")
    common.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))
    common.add_argument("--log-format", choices=("json", "console"))
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfgalois", description="Exact Hopf-Galois checks on finite-dimensional data")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    parents = [_common_options()]
    for module in COMMANDS.values():
        module.register(subparsers, parents)
    return parser


def handler_for(command: str) -> Handler:
    return COMMANDS[command].run
