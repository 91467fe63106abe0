"""
Command-line entry point: toricshift {check,ifun,flowcheck,shift,mirror,qcheck} FANFILE
"""
import argparse
import sys
import time
from typing import List, Optional

from core.config import app_config
from core.logger import logger
from modules import report_passed
from modules.check.handlers import CheckHandlers
from modules.quantum.handlers import MirrorHandlers, RelationHandlers
from modules.series.handlers import FlowHandlers, IFunctionHandlers, ShiftHandlers
from utils import canonical_json, parse_rational, parse_vector
from utils.file import atomic_write_text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='toricshift',
        description='Exact equivariant I-functions, shift operators and mirror maps of toric manifolds'
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('fan', help='Path to a fan file (JSON)')
    common.add_argument('--omega', type=lambda s: parse_vector(s, kind=parse_rational),
                        help='Grading vector as comma-separated rationals, e.g. "1,1,1"')
    common.add_argument('--out', help='Write the report to this path instead of stdout')
    common.add_argument('--no-cache', action='store_true', help='Bypass the series cache')
    common.add_argument('--timing', action='store_true', help='Add wall-clock timing to the report')

    with_cutoff = argparse.ArgumentParser(add_help=False)
    with_cutoff.add_argument('--cutoff', type=parse_rational,
                             default=app_config.runtime_config['default_cutoff'],
                             help='Keep degrees with ω·d ≤ cutoff (rational)')

    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('check', parents=[common], help='Validate the fan and print fixed-point data')
    sub.add_parser('ifun', parents=[common, with_cutoff], help='Stripped I-function coefficients')
    sub.add_parser('flowcheck', parents=[common, with_cutoff], help='Flow identity residuals')
    shift = sub.add_parser('shift', parents=[common], help='Shift factors and composition offsets')
    shift.add_argument('--k', type=parse_vector, help='Cocharacter, e.g. "1,0"')
    shift.add_argument('--l', type=parse_vector, help='Second cocharacter for d(k,l)')
    sub.add_parser('mirror', parents=[common, with_cutoff],
                   help='Birkhoff factorization, mirror map, Seidel elements')
    sub.add_parser('qcheck', parents=[common, with_cutoff],
                   help='Quantum D-module relation on projective spaces')
    return parser


def run(args: argparse.Namespace) -> dict:
    use_cache = not args.no_cache
    cutoff = getattr(args, 'cutoff', None)

    if args.command == 'check':
        return CheckHandlers.check_fan(args.fan, omega=args.omega, use_cache=use_cache)
    if args.command == 'ifun':
        return IFunctionHandlers.ifun(args.fan, cutoff, omega=args.omega, use_cache=use_cache)
    if args.command == 'flowcheck':
        return FlowHandlers.flowcheck(args.fan, cutoff, omega=args.omega, use_cache=use_cache)
    if args.command == 'shift':
        return ShiftHandlers.shift(args.fan, k=args.k, l=args.l,
                                   omega=args.omega, use_cache=use_cache)
    if args.command == 'mirror':
        return MirrorHandlers.mirror(args.fan, cutoff, omega=args.omega, use_cache=use_cache)
    return RelationHandlers.qcheck(args.fan, cutoff, omega=args.omega, use_cache=use_cache)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, 'cutoff', None) is not None and args.cutoff < 0:
        parser.error('--cutoff must be non-negative')
    logger.info(f"Running {args.command} on {args.fan}")
    started = time.perf_counter()
    report = run(args)
    if args.timing:
        report['timing'] = {'seconds': round(time.perf_counter() - started, 3)}

    text = canonical_json(report)
    if args.out:
        atomic_write_text(args.out, text)
        logger.info(f"Report written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0 if report_passed(report) else 1


if __name__ == '__main__':
    sys.exit(main())
