"""Command-line interface.

Exit status: 0 on success, 1 when a tiling is invalid or an identity fails,
2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bijection import InvalidStrip, flip_bottom_row, swap_adjacent, transport
from .branching import branch_table
from .enumeration import StateSpaceOverflow, enumerate_tilings, hpd_polynomial, hpd_polynomial_dp
from .model import InvalidTiling, check_tau
from .poly import CoefficientOverflow, key_polynomial
from .render import render_ascii, render_svg
from .serialize import DocumentError, ValidationFailure, parse, serialize

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("parts must be non-negative")
    return parts


def row_types(text: str) -> str:
    try:
        return check_tau(text.upper())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    return parse(text)


def cmd_eval(args) -> int:
    print(key_polynomial(args.alpha))
    return EXIT_OK


def _check_lengths(alpha, tau):
    if len(alpha) != len(tau):
        raise UsageError(f"alpha has {len(alpha)} parts but tau has {len(tau)} letters")


def cmd_hpd(args) -> int:
    _check_lengths(args.alpha, args.tau)
    if args.method == "dp":
        print(hpd_polynomial_dp(args.alpha, args.tau, args.N))
    else:
        print(hpd_polynomial(args.alpha, args.tau, args.N))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _check_lengths(args.alpha, args.tau)
    tilings = enumerate_tilings(args.alpha, args.tau, args.N)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(len(tilings)))
        for i, t in enumerate(tilings, start=1):
            (out / f"tiling_{i:0{width}d}.hpd").write_text(serialize(t))
        print(len(tilings))
    else:
        sys.stdout.write("\n".join(serialize(t) for t in tilings))
    return EXIT_OK


def cmd_swap(args) -> int:
    t = _read(args.input)
    if not 1 <= args.row < t.rows:
        raise UsageError(f"--row must be between 1 and {t.rows - 1}")
    if t.tau[args.row - 1] == t.tau[args.row]:
        raise UsageError(f"rows {args.row} and {args.row + 1} have the same type")
    sys.stdout.write(serialize(swap_adjacent(t, args.row - 1)))
    return EXIT_OK


def cmd_flip(args) -> int:
    t = _read(args.input)
    if t.is_skew:
        raise UsageError("flip needs a tiling with an empty floor")
    sys.stdout.write(serialize(flip_bottom_row(t)))
    return EXIT_OK


def cmd_transport(args) -> int:
    t = _read(args.input)
    if len(args.to_tau) != t.rows or t.is_skew:
        raise UsageError(f"--to-tau needs {t.rows} letters and a non-skew tiling")
    sys.stdout.write(serialize(transport(t, args.to_tau)))
    return EXIT_OK


def cmd_branch(args) -> int:
    n = len(args.alpha)
    if not (0 <= args.a and args.m >= 0 and args.a + args.m <= n and len(args.tau) == n - args.m):
        raise UsageError("need a + m <= len(alpha) and len(tau) = len(alpha) - m")
    if args.tau.count("W") != args.a:
        raise UsageError(f"tau must contain exactly a={args.a} W rows")
    table = branch_table(args.alpha, args.a, args.m, args.tau, args.N)
    for beta, coeff in sorted(table.entries.items()):
        print(f"({','.join(map(str, beta))}): {coeff}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(args.max_n, args.max_part, args.direct_every)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILURE


def cmd_render(args) -> int:
    t = _read(args.input)
    if args.format == "svg":
        sys.stdout.write(render_svg(t))
    else:
        sys.stdout.write(render_ascii(t, unicode=args.unicode))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="keypipes", description="Key polynomials from pipe tilings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="key polynomial via Demazure operators")
    p.add_argument("--alpha", type=composition, required=True)
    p.set_defaults(func=cmd_eval)

    def grid_args(p):
        p.add_argument("--alpha", type=composition, required=True)
        p.add_argument("--tau", type=row_types, required=True)
        p.add_argument("--N", type=int, default=None, help="last column index (default: max part)")

    p = sub.add_parser("hpd", help="weighted sum over tilings")
    grid_args(p)
    p.add_argument("--method", choices=("enum", "dp"), default="enum")
    p.set_defaults(func=cmd_hpd)

    p = sub.add_parser("enumerate", help="list tilings")
    grid_args(p)
    p.add_argument("--out", metavar="DIR", help="write one document per tiling into DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("swap", help="swap the types of rows R and R+1 (1-based)")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--row", type=int, required=True)
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("flip", help="toggle the type of the bottom row")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("transport", help="move a tiling to other row types")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--to-tau", type=row_types, required=True)
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("branch", help="two-sided branching coefficients")
    p.add_argument("--alpha", type=composition, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tau", type=row_types, required=True)
    p.add_argument("--N", type=int, default=None)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("verify", help="run the exhaustive identity sweeps")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-part", type=int, default=3)
    p.add_argument("--direct-every", type=int, default=1, help="check every k-th transport directly")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tiling")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--unicode", action="store_true", help="box-drawing characters in ASCII mode")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (InvalidTiling, InvalidStrip) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, StateSpaceOverflow, CoefficientOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
