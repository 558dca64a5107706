"""``thomkit`` command-line interface.

Exit codes: 0 success, 1 parse error, 2 precondition violation,
3 verification or positivity failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import ParseError, Polynomial, TruncatedSeries, format_poly, parse_poly, terms_to_json
from .catalog import (
    CATALOG,
    BoardmanSymbol,
    WindowError,
    aij,
    catalog_document,
    codim_contact,
    codim_sigma_ij,
    specialize,
    ts_terms,
)
from .lowering import lower, twist_expand
from .schur import schur_positive
from .verify import DEFAULT_SEED, SUITES, run_suite

EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_FAILED = 3


class PreconditionError(Exception):
    pass


def _default_window() -> int:
    raw = os.environ.get("THOMKIT_WINDOW")
    if not raw:
        return 4
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"THOMKIT_WINDOW must be an integer, got {raw!r}") from None


def _strict(args: argparse.Namespace) -> bool:
    return os.environ.get("THOMKIT_STRICT") == "1" and not getattr(args, "extrapolate", False)


def _read_poly(args: argparse.Namespace) -> Polynomial:
    text = args.poly if args.poly is not None else sys.stdin.read()
    return parse_poly(text)


def _emit(p: Polynomial, args: argparse.Namespace) -> None:
    if args.json_terms:
        print(json.dumps(terms_to_json(p, sort=args.sort)))
    else:
        print(format_poly(p, sort=args.sort))


def _degree_label(d: int, args: argparse.Namespace) -> int:
    return 2 * d if args.cohomological else d


def cmd_ts(args: argparse.Namespace) -> int:
    window = args.window if args.window is not None else _default_window()
    _emit(ts_terms(args.name, window, strict=_strict(args), policy=args.policy), args)
    return 0


def cmd_tp(args: argparse.Namespace) -> int:
    window = args.window if args.window is not None else _default_window()
    series = ts_terms(args.name, window, strict=_strict(args), policy=args.policy)
    _emit(specialize(series, args.reldim), args)
    return 0


def cmd_lower(args: argparse.Namespace) -> int:
    _emit(lower(_read_poly(args), args.i), args)
    return 0


def cmd_twist(args: argparse.Namespace) -> int:
    p = _read_poly(args)
    cap = args.cap
    num = TruncatedSeries.from_graded(parse_poly(args.num), cap)
    den = TruncatedSeries.from_graded(parse_poly(args.den), cap)
    expansion = twist_expand(p, num, den, cap)
    if args.json_terms:
        doc = {
            "top_degree": _degree_label(expansion.top_degree, args),
            "parts": {str(e): terms_to_json(q, sort=args.sort) for e, q in sorted(expansion.parts.items(), reverse=True)},
        }
        print(json.dumps(doc))
    else:
        for e, q in sorted(expansion.parts.items(), reverse=True):
            print(f"y^{e} [deg {_degree_label(expansion.top_degree - e, args)}]: {format_poly(q, sort=args.sort)}")
    return 0


def cmd_specialize(args: argparse.Namespace) -> int:
    _emit(specialize(_read_poly(args), args.reldim), args)
    return 0


def cmd_schur(args: argparse.Namespace) -> int:
    verdict = schur_positive(_read_poly(args))
    if args.json_terms:
        print(json.dumps({
            "positive": verdict.positive,
            "expansion": [{"partition": list(lam), "coeff": f"{c.numerator}/{c.denominator}"}
                          for lam, c in verdict.expansion.items()],
        }))
    else:
        terms = [f"s{lam}" if c == 1 else f"{c}*s{lam}" for lam, c in verdict.expansion.items()]
        print(" + ".join(terms).replace("+ -", "- ") or "0")
        print("positive" if verdict.positive else "not positive")
    if args.require_positive and not verdict.positive:
        return EXIT_FAILED
    return 0


def cmd_codim(args: argparse.Namespace) -> int:
    if args.algebra is not None:
        value = codim_contact(args.algebra, args.reldim, strict=_strict(args))
    else:
        try:
            parts = [int(x) for x in args.sigma.split(",")]
        except ValueError:
            raise ParseError(f"--sigma expects I or I,J, got {args.sigma!r}") from None
        if len(parts) not in (1, 2):
            raise ParseError(f"--sigma expects I or I,J, got {args.sigma!r}")
        value = codim_sigma_ij(BoardmanSymbol(*parts), args.reldim)
    print(_degree_label(value, args))
    return 0


def cmd_aij(args: argparse.Namespace) -> int:
    print(aij(args.i, args.j))
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    print(json.dumps(catalog_document(), indent=2))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, seed=args.seed)
    for r in reports:
        if args.json:
            print(json.dumps(r.to_dict(), sort_keys=True))
        else:
            print(f"{r.status.upper():4}  {r.name:32} [{r.provenance}] {r.anchor}")
    failed = [r for r in reports if not r.passed]
    if not args.json:
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return EXIT_FAILED if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-terms", action="store_true", help="emit machine-readable term lists")
    common.add_argument("--sort", action="store_true", help="order terms by degree, then monomial")
    common.add_argument("--cohomological", action="store_true", help="show doubled (cohomological) degrees")

    window = argparse.ArgumentParser(add_help=False)
    window.add_argument("--window", type=int, help="largest |index| kept (default $THOMKIT_WINDOW or 4)")
    window.add_argument("--extrapolate", action="store_true", help="allow windows past the anchored range")
    window.add_argument("--policy", choices=["second-sum-from-one", "literal"], help="A3 summation range")

    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--poly", help="polynomial text (default: read standard input)")

    parser = argparse.ArgumentParser(prog="thomkit", description="Thom series and lowering operators")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ts", parents=[common, window], help="terms of a Thom series")
    p.add_argument("name", choices=list(CATALOG))
    p.set_defaults(func=cmd_ts)

    p = sub.add_parser("tp", parents=[common, window], help="Thom polynomial at a relative dimension")
    p.add_argument("name", choices=list(CATALOG))
    p.add_argument("--reldim", type=int, required=True)
    p.set_defaults(func=cmd_tp)

    p = sub.add_parser("lower", parents=[common, poly], help="apply the lowering operator")
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("twist", parents=[common, poly], help="substitute twisted classes and split by y")
    p.add_argument("--num", default="1 + y", help="twist numerator as a graded polynomial in y")
    p.add_argument("--den", default="1", help="twist denominator as a graded polynomial in y")
    p.add_argument("--cap", type=int, default=12)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("specialize", parents=[common, poly], help="substitute d[i] -> c[i+k+1]")
    p.add_argument("--reldim", type=int, required=True)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("schur", parents=[common, poly], help="expand in the Schur basis")
    p.add_argument("--require-positive", action="store_true")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("codim", parents=[common], help="codimension formulas")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--algebra", choices=list(CATALOG))
    group.add_argument("--sigma", help="Boardman symbol I or I,J")
    p.add_argument("--reldim", type=int, required=True)
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("aij", help="coefficient a_{i,j} of the A3 generating function")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_aij)

    p = sub.add_parser("catalog", help="dump the catalog as JSON")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"thomkit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (WindowError, PreconditionError, ValueError, KeyError) as exc:
        print(f"thomkit: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
