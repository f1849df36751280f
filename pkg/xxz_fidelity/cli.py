"""
cli.py

Command-line frontend: exact overlap and fidelity tables, character
values, verification suites and the finite-size comparison sweep.

Tables go to stdout (or --out) as CSV or JSON; status lines go to stderr.
Exit codes: 0 success, 1 a verification check failed, 2 argument errors,
3 degeneracy or consistency errors.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence
import argparse
import csv
import io
import json
import logging
import sys

import mpmath

from . import __version__
from .asymptotics import COMPARISON_COLUMNS, ORDERS, compare_finite_size, lbf_asymptotic
from .characters import chi_specialized, normalized_chi_x
from .config import RunConfig
from .errors import ArgumentError, FidelityError, IllDefinedError, UnsupportedError
from .numerics import format_rational, parse_rational, precision
from .overlap import (
    both_odd,
    lbf,
    lbf_sweep,
    overlap_contract,
    overlap_determinant,
    overlap_sweep,
)
from .suites import SUITES

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_ARGUMENT, EXIT_DEGENERATE = 0, 1, 2, 3

COMPARE_MIN_N = 8


def status(message: str) -> None:
    print(message, file=sys.stderr)


def format_cell(value: Any, digits: int) -> Any:
    """Integers as numbers, fractions as "p/q" strings, floating values at ``digits`` significant digits."""
    if isinstance(value, (bool, int)) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (mpmath.mpf, float)):
        return mpmath.nstr(mpmath.mpf(value), digits, strip_zeros=False)
    if isinstance(value, mpmath.mpc):
        return mpmath.nstr(value, digits)
    return str(value)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ArgumentError(f"{args.command} needs {', '.join(missing)}")


def _x(args: argparse.Namespace) -> Fraction:
    _require(args, 'x')
    x = parse_rational(args.x)
    if x <= 0:
        raise ArgumentError(f"x must be positive, got {args.x}")
    return x


def _check_pair(N1: int, N2: int) -> None:
    if N1 < 0 or N2 < 0:
        raise ArgumentError(f"sub-chain lengths must be non-negative, got ({N1}, {N2})")
    if both_odd(N1, N2):
        raise IllDefinedError(f"F_{{{N1},{N2}}} is ill-defined for odd-odd sub-chains")


def cmd_lbf(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """Exact overlap and LBF rows, one pair or a sweep over every split of --n."""
    x = _x(args)
    rows = []
    if args.n1 is not None or args.n2 is not None:
        _require(args, 'n1', 'n2')
        _check_pair(args.n1, args.n2)
        result = lbf(args.n1, args.n2, x)
        overlap = overlap_determinant(args.n1, args.n2, x).value
        rows.append({'N1': args.n1, 'N2': args.n2, 'x': x, 'O': overlap, 'F': result.value})
    else:
        _require(args, 'n')
        overlaps = overlap_sweep(args.n, x)
        values = lbf_sweep(args.n, x)
        for N1 in sorted(values):
            rows.append({'N1': N1, 'N2': args.n - N1, 'x': x, 'O': overlaps[N1], 'F': values[N1]})
    return {'rows': rows}


def cmd_overlap(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """O_{N1,N2} at x, or its polynomial in x when --x is omitted."""
    _require(args, 'n1', 'n2')
    if args.x is None:
        value = overlap_determinant(args.n1, args.n2)
        return {'rows': [{'N1': args.n1, 'N2': args.n2, 'x': 'x', 'O': str(value.polynomial)}]}
    x = _x(args)
    if args.route == 'contraction':
        value = overlap_contract(args.n1, args.n2, x)
    else:
        value = overlap_determinant(args.n1, args.n2, x)
    return {'rows': [{'N1': args.n1, 'N2': args.n2, 'x': x, 'O': value.value, 'route': value.route}]}


def cmd_char(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """χ_N(1,…,1,z(x)) and its normalised value; symbolic without --x."""
    _require(args, 'n')
    if args.x is None:
        return {'rows': [{'N': args.n, 'x': 'x', 'chi': str(chi_specialized(args.n))}]}
    x = _x(args)
    return {'rows': [{'N': args.n, 'x': x, 'chi': chi_specialized(args.n, x),
                      'normalized': normalized_chi_x(args.n, x)}]}


def cmd_asymptote(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """Truncated large-N series next to the exact value."""
    _require(args, 'n1', 'n2')
    x = _x(args)
    _check_pair(args.n1, args.n2)
    asymp = lbf_asymptotic(args.n1, args.n2, x, order=args.order)
    exact = lbf(args.n1, args.n2, x).value
    return {'rows': [{'N1': args.n1, 'N2': args.n2, 'x': x, 'order': args.order,
                      'F_exact': exact, 'F_asymp': asymp, 'diff': exact - asymp}]}


def cmd_compare(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """Full ξ sweep of exact against asymptotic LBF, ordered by N1."""
    _require(args, 'n')
    if args.n < COMPARE_MIN_N:
        raise ArgumentError(f"compare needs N >= {COMPARE_MIN_N}, got {args.n}")
    x = _x(args)
    table = compare_finite_size(args.n, x, int(config.get('asymptotics.interior_min', 8)))
    rows = sorted(table.rows, key=lambda row: row['N1'])
    return {'rows': [{k: row[k] for k in COMPARISON_COLUMNS} for row in rows]}


def _suite_options(name: str, args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    options = dict(config.get(name, {}) or {})
    options['precision'] = config.get('numerics.precision')
    options['seed'] = config.get('numerics.seed')
    if name == 'oracle':
        options['max_n'] = config.get('oracle.max_n')
    if name == 'asymptotics' and args.x is not None:
        options['x'] = args.x
    return options


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> Dict[str, Any]:
    """Run one suite or all of them; the report carries every check."""
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    checks: List[Dict[str, Any]] = []
    options: Dict[str, Any] = {}
    passed = True
    for name in names:
        status(f"🧪 Running {name} suite...")
        suite = SUITES[name](name, _suite_options(name, args, config))
        report = suite.process()
        options[name] = suite.get_config()
        for entry in report['checks']:
            checks.append(dict(entry, suite=name))
        if report['passed']:
            status(f"✅ {name}: {len(report['checks'])} checks passed")
        else:
            status(f"❌ {name}: {len(report['failed'])} of {len(report['checks'])} checks failed")
        passed = passed and report['passed']
    return {'rows': [], 'checks': checks, 'suites': options, 'passed': passed}


COMMANDS = {
    'lbf': cmd_lbf,
    'overlap': cmd_overlap,
    'char': cmd_char,
    'asymptote': cmd_asymptote,
    'compare': cmd_compare,
    'verify': cmd_verify,
}


def render(result: Dict[str, Any], config: RunConfig, fmt: str, digits: int) -> str:
    """CSV (rows, or checks for verify) or one JSON object with config, rows and checks."""
    rows = [{k: format_cell(v, digits) for k, v in row.items()} for row in result.get('rows', [])]
    checks = result.get('checks', [])
    if fmt == 'json':
        document = {'config': config.config, 'rows': rows, 'checks': checks}
        if 'suites' in result:
            document['suites'] = result['suites']
        return json.dumps(document, indent=2, ensure_ascii=False) + '\n'
    table = rows
    if not rows and checks:
        table = [{'suite': c['suite'], 'name': c['name'], 'passed': c['passed'],
                  'residual': json.dumps(c['residual'], ensure_ascii=False)} for c in checks]
    buffer = io.StringIO()
    if table:
        writer = csv.DictWriter(buffer, fieldnames=list(table[0]), lineterminator='\n')
        writer.writeheader()
        writer.writerows(table)
    return buffer.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, help='Path to configuration file')
    common.add_argument('--format', choices=['csv', 'json'], help='Output format (default: csv)')
    common.add_argument('--precision', type=int, help='Decimal digits for floating values (default: 60)')
    common.add_argument('--seed', type=int, help='Seed for randomised checks')
    common.add_argument('--out', type=str, help='Write the table to this file instead of stdout')
    common.add_argument('--verbose', action='store_true', help='Debug logging')
    common.add_argument('--n', type=int, help='Total chain length N')
    common.add_argument('--n1', type=int, help='Left sub-chain length')
    common.add_argument('--n2', type=int, help='Right sub-chain length')
    common.add_argument('--x', type=str, help='Boundary parameter as "p/q" or a decimal')

    parser = argparse.ArgumentParser(
        prog='xxz-fidelity',
        description='Logarithmic bipartite fidelity of the open XXZ chain at Δ = -1/2'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('lbf', parents=[common], help='Exact overlaps and LBF')
    overlap = sub.add_parser('overlap', parents=[common], help='Overlap O_{N1,N2}')
    overlap.add_argument('--route', choices=['determinant', 'contraction'], default='determinant',
                         help='Determinant formula or ground-state contraction')
    sub.add_parser('char', parents=[common], help='Specialised symplectic character')
    asymptote = sub.add_parser('asymptote', parents=[common], help='Large-N series of the LBF')
    asymptote.add_argument('--order', choices=list(ORDERS), default='1/N',
                           help='Truncation order (default: 1/N)')
    sub.add_parser('compare', parents=[common], help='Exact against asymptotic LBF over ξ')
    verify = sub.add_parser('verify', parents=[common], help='Run verification suites')
    verify.add_argument('suite', choices=list(SUITES) + ['all'], help='Suite to run')
    verify.add_argument('--max-n', type=int, help='Largest chain length of the oracle suite')
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Configuration file and environment, then command-line flags."""
    config = RunConfig(args.config)
    if args.format is not None:
        config.set('output.format', args.format)
    if args.precision is not None:
        config.set('numerics.precision', args.precision)
    if args.seed is not None:
        config.set('numerics.seed', args.seed)
    if getattr(args, 'max_n', None) is not None:
        config.set('oracle.max_n', args.max_n)
    if args.verbose:
        config.set('logging.level', 'DEBUG')
    config.validate()
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ARGUMENT if e.code else EXIT_OK

    try:
        config = load_config(args)
    except ArgumentError as e:
        status(f"❌ {e}")
        return EXIT_ARGUMENT
    logging.basicConfig(level=str(config.get('logging.level', 'WARNING')).upper())

    digits = int(config.get('numerics.precision'))
    fmt = config.get('output.format', 'csv')
    status(f"🔮 xxz-fidelity {args.command}")
    try:
        with precision(digits):
            result = COMMANDS[args.command](args, config)
            text = render(result, config, fmt, digits)
    except (ArgumentError, UnsupportedError) as e:
        status(f"❌ {e}")
        return EXIT_ARGUMENT
    except FidelityError as e:
        status(f"❌ {e.__class__.__name__}: {e}")
        return EXIT_DEGENERATE

    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        status(f"📍 Wrote {args.out}")
    else:
        sys.stdout.write(text)

    if result.get('passed') is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK
