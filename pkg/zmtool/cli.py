"""
zmtool command line

Subcommands: validate, info, classes, subgroups, verify and table. Data goes to stdout,
logs to stderr.

Exit codes: 0 success, 1 verification failure, 2 invalid triple, 3 budget exceeded,
64 usage error, 73 output not writable.
"""

import argparse
import logging
import sys
from typing import List, Optional

from zmtool.config import get_settings
from zmtool.exceptions import (CapacityError, ConsistencyError,
                               InvalidAutomorphismError, InvalidParametersError,
                               PreconditionError, ZmError)
from zmtool.services import reports
from zmtool.services.verification import run_verification
from zmtool.services.zm_core import ZmParams, validate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_IO = 73


class ZmArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def _params(args: argparse.Namespace) -> ZmParams:
    return validate(args.m, args.n, args.r)


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        p = _params(args)
    except InvalidParametersError as e:
        print(f"invalid: {e.condition} ({e})")
        return EXIT_INVALID
    print(f"valid, d={p.d}")
    return EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    report = reports.build_class_report(_params(args))
    if args.format == "json":
        sys.stdout.write(reports.render_json(report))
    else:
        sys.stdout.write(reports.render_text(report))
    return EXIT_OK


def cmd_classes(args: argparse.Namespace) -> int:
    records = reports.class_records(_params(args))
    if args.format == "json":
        sys.stdout.write(reports.render_json(records))
    else:
        sys.stdout.write(reports.render_csv(records, reports.CLASS_COLUMNS))
    return EXIT_OK


def cmd_subgroups(args: argparse.Namespace) -> int:
    rows = reports.subgroup_rows(_params(args))
    if args.format == "json":
        sys.stdout.write(reports.render_json(rows))
    else:
        sys.stdout.write(reports.render_csv(rows, reports.SUBGROUP_COLUMNS))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    summary = run_verification(_params(args), budget=args.budget)
    for check in summary.checks:
        status = "ok" if check.passed else "FAILED"
        print(f"{status} {check.name}: {check.detail}")
    failure = summary.first_failure
    if failure is not None:
        print(f"verification failed at {failure.name}")
        return EXIT_VERIFICATION_FAILED
    print(f"all {len(summary.checks)} checks passed")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    text = reports.render_csv(reports.table_rows(args.m_max, args.n_max), reports.TABLE_COLUMNS)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as f:
            f.write(text)
    except OSError as e:
        logger.error(f"Cannot write {args.out}: {e}")
        return EXIT_IO
    logger.info(f"Wrote table to {args.out}")
    return EXIT_OK


def _add_triple(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('m', type=int, help='order of a')
    parser.add_argument('n', type=int, help='order of b')
    parser.add_argument('r', type=int, help='exponent with b^-1 a b = a^r')


def build_parser() -> argparse.ArgumentParser:
    parser = ZmArgumentParser(
        prog='zmtool',
        description='Conjugacy and automorphism classes of ZM-groups ZM(m,n,r)')
    parser.add_argument('--verbose', action='store_true', help='Log progress (INFO)')
    parser.add_argument('--debug', action='store_true', help='Log details (DEBUG)')
    subparsers = parser.add_subparsers(dest='command', required=True,
                                       parser_class=ZmArgumentParser)

    p_validate = subparsers.add_parser('validate', help='Check the ZM conditions')
    _add_triple(p_validate)
    p_validate.set_defaults(handler=cmd_validate)

    p_info = subparsers.add_parser('info', help='Invariants of one group')
    _add_triple(p_info)
    p_info.add_argument('--format', choices=['json', 'text'], default='text')
    p_info.set_defaults(handler=cmd_info)

    p_classes = subparsers.add_parser('classes', help='One row per conjugacy class')
    _add_triple(p_classes)
    p_classes.add_argument('--format', choices=['json', 'csv'], default='csv')
    p_classes.set_defaults(handler=cmd_classes)

    p_subgroups = subparsers.add_parser('subgroups', help='The subgroup triples')
    _add_triple(p_subgroups)
    p_subgroups.add_argument('--format', choices=['json', 'csv'], default='csv')
    p_subgroups.set_defaults(handler=cmd_subgroups)

    p_verify = subparsers.add_parser('verify', help='Check every formula against brute force')
    _add_triple(p_verify)
    p_verify.add_argument('--budget', type=int, default=None,
                          help='Largest group order to verify (default: ZMTOOL_BUDGET)')
    p_verify.set_defaults(handler=cmd_verify)

    p_table = subparsers.add_parser('table', help='CSV of invariants over a parameter range')
    p_table.add_argument('--m-max', type=int, required=True)
    p_table.add_argument('--n-max', type=int, required=True)
    p_table.add_argument('--format', choices=['csv'], default='csv')
    p_table.add_argument('--out', type=str, default=None, help='Output file (default stdout)')
    p_table.set_defaults(handler=cmd_table)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose, args.debug)

    try:
        return args.handler(args)
    except (InvalidParametersError, InvalidAutomorphismError, PreconditionError) as e:
        print(f"zmtool: {e}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as e:
        print(f"zmtool: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as e:
        logger.error(f"Internal consistency check failed: {e}")
        return EXIT_VERIFICATION_FAILED
    except ZmError as e:
        print(f"zmtool: {e}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
