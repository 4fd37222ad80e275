"""Command-line entry point: ``schurcodes <command> ...``.

Exit codes: 0 success, 1 a check failed (or a library error), 2 usage.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import code as codemod
from .asymptotics import AsymptoticRegime, alpha_delta_bounds, format_search, gsbb_A_bound, rate_ddrel_bounds
from .bilinear import build_scheme, format_scheme
from .code import code_params, read_code, write_code
from .concat import concat_build
from .errors import SchurCodesError
from .evaluation import EvalCodeSpec, construction_finie, eval_code, first_points
from .field import field_make
from .products import format_a_t_table, power, power_params, square_root_census
from .report import FAIL
from .verify import DEFAULT_SEED, format_results, run_all


def _cap(text: str) -> int:
    if "^" in text:
        base, exp = text.split("^")
        return int(base) ** int(exp)
    return int(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    sys.stdout.write(text)


def _code_label(C: codemod.LinearCode) -> str:
    rows = ",".join("".join(str(x) for x in row) for row in C.rows) or "0"
    return f"[{C.n},{C.k}]<{rows}>"


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(seed=args.seed)
    _emit(format_results(results), args.out)
    return 1 if any(r.status == FAIL for r in results) else 0


def cmd_pipeline(args: argparse.Namespace) -> int:
    q, s, n, m = args.q, args.s, args.n, args.m
    F = field_make(q, 2 * s + 1)
    spec = EvalCodeSpec(F, first_points(F, n), m)
    report = construction_finie(q, s, spec)
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    S = build_scheme(q, s)
    outer = eval_code(spec)
    concat = concat_build(S, outer)
    write_code(outer, outdir / "outer.code")
    (outdir / "scheme.txt").write_text(format_scheme(S))
    write_code(concat, outdir / "concat.code")
    write_code(power(concat, 2), outdir / "square.code")
    text = report.format()
    (outdir / "report.txt").write_text(text)
    sys.stdout.write(text)
    return 0 if report.ok else 1


def cmd_asymptotics(args: argparse.Namespace) -> int:
    if args.s == "search":
        sys.stdout.write(format_search(args.q, args.s_max))
        return 0
    s = int(args.s)
    A = Fraction(args.A) if args.A else gsbb_A_bound(args.q, s)
    ad = alpha_delta_bounds(args.q, s, A)
    lines = [
        f"q={args.q}",
        f"s={s}",
        f"A={A.numerator}/{A.denominator}",
        f"alpha2_intercept={ad.intercept.numerator}/{ad.intercept.denominator}",
        f"alpha2_slope={ad.slope.numerator}/{ad.slope.denominator}",
        f"delta2_bound={ad.delta2.numerator}/{ad.delta2.denominator}",
    ]
    if args.mu:
        rate, ddrel = rate_ddrel_bounds(AsymptoticRegime(args.q, s, A, Fraction(args.mu)))
        lines += [f"rate_bound={rate.numerator}/{rate.denominator}", f"ddrel_bound={ddrel.numerator}/{ddrel.denominator}"]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    roots = square_root_census(args.n, args.q)
    lines = ["code\troots"]
    exceptional = 0
    for C, rs in roots.items():
        if rs != [C]:
            exceptional += 1
            lines.append(f"{_code_label(C)}\t{' '.join(_code_label(r) for r in rs) or '-'}")
    lines.append(f"total\t{len(roots)}\texceptional\t{exceptional}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    C = read_code(args.codefile)
    sys.stdout.write(power_params(C, args.t).format())
    if args.out:
        write_code(power(C, args.t), args.out)
    return 0


def cmd_mindist(args: argparse.Namespace) -> int:
    p = code_params(read_code(args.codefile))
    sys.stdout.write(
        "n\tk\td\trate\tdrel\n"
        f"{p.n}\t{p.k}\t{p.d}\t{p.rate.numerator}/{p.rate.denominator}\t{p.drel.numerator}/{p.drel.denominator}\n"
    )
    return 0


def cmd_scheme(args: argparse.Namespace) -> int:
    _emit(format_scheme(build_scheme(args.q, args.s)), args.out)
    return 0


def cmd_search_a(args: argparse.Namespace) -> int:
    sys.stdout.write(format_a_t_table(args.n_max, args.t_max, args.q))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_cap, default=None, help="codeword enumeration cap, e.g. 2^24")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None, help="output file (or directory for pipeline)")

    parser = argparse.ArgumentParser(prog="schurcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run every finite verification")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipeline", parents=[common], help="concatenate a Reed-Solomon code and report")
    for name in ("q", "s", "n", "m"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("asymptotics", parents=[common], help="exact asymptotic bounds")
    p.add_argument("q", type=int)
    p.add_argument("s", help="an integer s, or 'search'")
    p.add_argument("--A", default=None, help="lower bound on A(q^(2s+1)) as num/den")
    p.add_argument("--mu", default=None)
    p.add_argument("--s-max", type=int, default=8)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("census", parents=[common], help="square roots of all codes of length n")
    p.add_argument("n", type=int)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("power", parents=[common], help="parameters of C^<t> for t = 1..T")
    p.add_argument("codefile")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("mindist", parents=[common], help="exact parameters of a code file")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("scheme", parents=[common], help="dump G_phi and theta")
    p.add_argument("q", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("search-a", parents=[common], help="exhaustive a_q^<t>(n, d) table")
    p.add_argument("n_max", type=int)
    p.add_argument("t_max", type=int)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_search_a)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "asymptotics" and args.s != "search":
        try:
            int(args.s)
        except ValueError:
            parser.error("s must be an integer or 'search'")
    if args.cap is not None:
        codemod.set_enumeration_cap(args.cap)
    try:
        return args.func(args)
    except (SchurCodesError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    finally:
        codemod.set_enumeration_cap(codemod.DEFAULT_CAP)


if __name__ == "__main__":
    sys.exit(main())
