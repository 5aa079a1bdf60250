"""Command-line front end"""
from __future__ import annotations

__all__ = ['build_parser', 'main']

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from .cells import enumerate_cells, interior_points, is_minimal_cellular
from .cubic import CubicCoordinate, is_new, is_synchronized, leq_cc
from .export import RealizationDocument, cc_to_dict, cell_to_dict, convert, decode, encode
from .lattice import check_counts, enumerate_cc
from .oracle import run_checks
from .types import (
    SIZE_CAP, CoordFilter, IndexRangeError, InvariantError, ParseError, PreconditionError, RealizeFormat,
    Representation, SizeCapError, SizeError, Target, ValidationError
)
from .util import format_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4

_FILTERS: Dict[CoordFilter, Callable[[CubicCoordinate], bool]] = {
    CoordFilter.ALL: lambda c: True,
    CoordFilter.SYNCHRONIZED: is_synchronized,
    CoordFilter.NEW: is_new,
    CoordFilter.MINIMAL_CELLULAR: is_minimal_cellular,
}


def _read_input(value: str) -> str:
    """``-`` is standard input, an existing path is read, anything else is the value itself"""
    if value == '-':
        return sys.stdin.read().strip()
    path = Path(value)
    if value and path.is_file():
        return path.read_text(encoding='utf-8').strip()
    return value


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding='utf-8')
        logger.info('wrote %s', out)


def cmd_convert(args: argparse.Namespace) -> int:
    obj = decode(Representation(args.source), _read_input(args.input))
    target = Target(args.target)
    result = convert(obj, target)
    if target is Target.CC:
        print(format_word(result))  # type: ignore[arg-type]
    else:
        print(json.dumps(encode(result, target)))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    a = CubicCoordinate.from_text(args.first)
    b = CubicCoordinate.from_text(args.second)
    print(leq_cc(a, b).value)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    doc = RealizationDocument.from_poset(enumerate_cc(args.size, cap=args.cap))
    fmt = RealizeFormat(args.format)
    if fmt is RealizeFormat.JSON:
        _write(doc.to_json(), args.out)
    elif fmt is RealizeFormat.DOT:
        _write(doc.to_dot(), args.out)
    else:
        vertices, edges = doc.to_csv()
        if args.out is None:
            sys.stdout.write(vertices + '\n' + edges)
        else:
            out = Path(args.out)
            _write(vertices, str(out))
            _write(edges, str(out.with_name(out.stem + '.edges.csv')))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    keep = _FILTERS[CoordFilter(args.filter)]
    selected = [c for c in enumerate_cc(args.size, cap=args.cap).elements if keep(c)]
    if args.count_only:
        print(len(selected))
        return EXIT_OK
    for c in selected:
        print(json.dumps(cc_to_dict(c)) if args.json else format_word(c))
    return EXIT_OK


def cmd_cells(args: argparse.Namespace) -> int:
    cells = list(enumerate_cells(args.size, cap=args.cap))
    if args.count_only:
        print(len(cells))
        return EXIT_OK
    for cell in cells:
        data = cell_to_dict(cell)
        if args.interior:
            data['interior'] = len(interior_points(cell))
        print(json.dumps(data))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    ok = True
    if args.counts:
        counts = check_counts(args.size, cap=args.cap)
        print(counts)
        ok = counts.ok
    report = run_checks(args.size, cap=args.cap)
    print(report)
    return EXIT_OK if ok and report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--cap', type=int, default=SIZE_CAP, help=f'Largest accepted size (default: {SIZE_CAP}).')
    common.add_argument('-v', '--verbose', action='count', default=0, help='Log to stderr, repeat for debug output.')

    parser = argparse.ArgumentParser(prog='tamaricc', description='Cubic coordinates of Tamari intervals.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('convert', parents=[common], help='Convert between representations.')
    p.add_argument('--from', dest='source', required=True, choices=[r.value for r in Representation])
    p.add_argument('--to', dest='target', required=True, choices=[t.value for t in Target])
    p.add_argument('--input', default='-', help='File, inline value, or - for stdin (default: -).')
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser(
        'compare', parents=[common], help='Compare two cubic coordinates.',
        description='Coordinates starting with a minus sign go in brackets, e.g. "(-1,-2)", or after --.'
    )
    p.add_argument('first')
    p.add_argument('second')
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser('realize', parents=[common], help='Export the cubic realization of CC_n.')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--format', default=RealizeFormat.JSON.value, choices=[f.value for f in RealizeFormat])
    p.add_argument('--out', default=None, help='Output file. CSV edges go to <stem>.edges.csv next to it.')
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser('enumerate', parents=[common], help='List the elements of CC_n.')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--filter', default=CoordFilter.ALL.value, choices=[f.value for f in CoordFilter])
    p.add_argument('--count-only', action='store_true')
    p.add_argument('--json', action='store_true', help='One JSON object per line.')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('cells', parents=[common], help='List the cells of CC_n with their gamma images.')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--count-only', action='store_true')
    p.add_argument('--interior', action='store_true', help='Add the number of coordinates inside each cell.')
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser('check', parents=[common], help='Cross-validate everything against the oracles.')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--counts', action='store_true', help='Also compare the counts of every size up to --size.')
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )
    try:
        return args.func(args)
    except SizeCapError as err:
        print(f'tamaricc: {err}', file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, ParseError, SizeError, IndexRangeError, PreconditionError) as err:
        print(f'tamaricc: {err}', file=sys.stderr)
        return EXIT_INVALID
    except InvariantError as err:
        print(f'tamaricc: {err}', file=sys.stderr)
        return EXIT_MISMATCH
