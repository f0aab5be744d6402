"""Command-line entry point."""

import sys
from typing import Optional, Sequence

from hopfgalois.cli.middleware import run_command
from hopfgalois.cli.output import write_report
from hopfgalois.cli.router import build_parser, handler_for
from hopfgalois.utils.logger import setup_logging
from hopfgalois.utils.telemetry import setup_telemetry


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and print its report.

    Returns:
        0 when every verdict is positive, 1 when a checked property fails,
        2 when the input is malformed
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, args.log_format)
    setup_telemetry()

    report, text = run_command(args.command, handler_for(args.command), args)
    write_report(report, sys.stdout, out=args.out, text=text)
    if report.error:
        print(report.error, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
