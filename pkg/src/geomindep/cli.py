"""Command line front end.

Every successful command prints exactly one JSON object on stdout and
exits 0 (a determination of "not independent" is still success).  Input
and usage errors print a JSON object with an "error" key on stderr and
exit 1; anything else is an internal fault and exits 2.  Output bytes are
deterministic for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    build_pair,
    build_sequence,
    build_triple,
    finite_space_check,
    golden_ratio_counterexample,
    multiples_pair,
)
from .independence import indep_family_at, indep_family_mod, indep_family_symbolic
from .measure import measure_at, measure_symbolic
from .polynomials import RationalFunction
from .search import enumerate_independent, gap_tail_bound, verify_converse
from .textforms import (
    ParseError,
    format_poly,
    format_rational,
    format_set,
    parse_poly,
    parse_rational,
    parse_set,
)
from .thresholds import truncated_value


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract wants 1
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="geomindep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("measure", help="measure of a set, symbolic or at a ratio")
    p.add_argument("--set", required=True, metavar="SET")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--symbolic", action="store_true")
    g.add_argument("--r", metavar="RAT")

    p = sub.add_parser("indep", help="mutual independence of two or more sets")
    p.add_argument("--set", action="append", required=True, metavar="SET")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--symbolic", action="store_true")
    g.add_argument("--r", metavar="RAT")
    g.add_argument("--minpoly", metavar="POLY")

    p = sub.add_parser("construct", help="build one of the known families")
    csub = p.add_subparsers(dest="what", required=True)
    c = csub.add_parser("pair", help="seed inside the blocks, summed with {0,n-1}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--T", required=True, metavar="SET")
    c = csub.add_parser("triple", help="divisor refinement of the blocks")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--T", required=True, metavar="SET")
    csub.add_parser("remark1", help="the golden-ratio pair and its modulus")
    c = csub.add_parser("remark2", help="the pair {1..n}, {n,2n,...}")
    c.add_argument("--n", type=int, required=True)
    c = csub.add_parser("sequence", help="iterated quotient construction")
    c.add_argument("--params", required=True, metavar="N0,N1,...")

    p = sub.add_parser("threshold", help="truncated decimal of the ratio threshold")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--digits", type=int, default=10)

    p = sub.add_parser("search", help="brute-force checks at a fixed ratio")
    ssub = p.add_subparsers(dest="what", required=True)
    s = ssub.add_parser("converse", help="independent sets vs the grown form")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", required=True, metavar="RAT")
    s.add_argument("--max", type=int, required=True)
    s = ssub.add_parser("enum", help="all finite sets independent of a set")
    s.add_argument("--set", required=True, metavar="SET")
    s.add_argument("--r", required=True, metavar="RAT")
    s.add_argument("--max", type=int, required=True)
    s = ssub.add_parser("bound", help="tail bound for a set avoiding the blocks")
    s.add_argument("--set", required=True, metavar="SET")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", required=True, metavar="RAT")

    p = sub.add_parser("finite-space", help="finite truncation residual check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    return parser


def _ratfn_json(f: RationalFunction) -> dict:
    return {"num": format_poly(f.num), "den": format_poly(f.den)}


def _cmd_measure(args) -> dict:
    s = parse_set(args.set)
    if args.symbolic:
        return _ratfn_json(measure_symbolic(s))
    return {"value": format_rational(measure_at(s, parse_rational(args.r)))}


def _cmd_indep(args) -> dict:
    sets = [parse_set(text) for text in args.set]
    if len(sets) < 2:
        raise _UsageError("indep needs at least two --set arguments")
    if args.symbolic:
        report = indep_family_symbolic(sets)
    elif args.r is not None:
        report = indep_family_at(sets, parse_rational(args.r))
    else:
        report = indep_family_mod(sets, parse_poly(args.minpoly))
    out = {"independent": report.independent, "mode": report.mode}
    if report.r is not None:
        out["r"] = format_rational(report.r)
    if report.minpoly is not None:
        out["minpoly"] = format_poly(report.minpoly)
    rows = []
    for cond in report.conditions:
        if report.mode == "at_rational":
            lhs, rhs = format_rational(cond.lhs), format_rational(cond.rhs)
        else:
            lhs, rhs = _ratfn_json(cond.lhs), _ratfn_json(cond.rhs)
        rows.append(
            {
                "subset": list(cond.index_subset),
                "lhs": lhs,
                "rhs": rhs,
                "passed": cond.passed,
            }
        )
    out["conditions"] = rows
    return out


def _cmd_construct(args) -> dict:
    if args.what == "pair":
        spec = build_pair(args.n, parse_set(args.T))
        return {
            "n": spec.n,
            "T": format_set(spec.T),
            "A": format_set(spec.A),
            "B": format_set(spec.B),
        }
    if args.what == "triple":
        spec = build_triple(args.n, args.b, parse_set(args.T))
        return {
            "n": spec.n,
            "b": spec.b,
            "k": spec.k,
            "T": format_set(spec.T),
            "B1": format_set(spec.B1),
            "A1": format_set(spec.A1),
            "A2": format_set(spec.A2),
            "B": format_set(spec.B),
        }
    if args.what == "remark1":
        a, b, minpoly = golden_ratio_counterexample()
        return {"A": format_set(a), "B": format_set(b), "minpoly": format_poly(minpoly)}
    if args.what == "remark2":
        a, b = multiples_pair(args.n)
        return {"n": args.n, "A": format_set(a), "B": format_set(b)}
    spec = build_sequence(_parse_params(args.params))
    return {"params": list(spec.params), "sets": [format_set(s) for s in spec.sets]}


def _parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"bad --params value: {text!r}") from None


def _cmd_threshold(args) -> dict:
    if args.digits > 200:
        raise ValueError("digits capped at 200")
    return {"m": args.m, "t": truncated_value(args.m, args.digits)}


def _cmd_search(args) -> dict:
    if args.what == "converse":
        report = verify_converse(args.n, parse_rational(args.r), args.max)
        lo, hi = report.threshold.bracket
        return {
            "n": report.n,
            "r": format_rational(report.r),
            "max": report.bound,
            "bracket": {"lo": format_rational(lo), "hi": format_rational(hi)},
            "found": [format_set(a) for a in report.found],
            "violations": [format_set(a) for a in report.violations],
        }
    if args.what == "enum":
        s = parse_set(args.set)
        r = parse_rational(args.r)
        found = enumerate_independent(s, r, args.max)
        return {
            "set": format_set(s),
            "r": format_rational(r),
            "max": args.max,
            "found": [format_set(a) for a in found],
        }
    s = parse_set(args.set)
    r = parse_rational(args.r)
    check = gap_tail_bound(s, args.n, r)
    return {
        "set": format_set(s),
        "n": args.n,
        "r": format_rational(r),
        "s": check.s,
        "i": check.i,
        "j": check.j,
        "lhs": format_rational(check.lhs),
        "rhs": format_rational(check.rhs),
        "holds": check.holds,
    }


def _cmd_finite_space(args) -> dict:
    check = finite_space_check(args.n, args.s)
    return {
        "n": check.n,
        "s": check.s,
        "t": check.t,
        "q": f"{check.q:.15f}",
        "residual": f"{check.residual:.3e}",
        "A": format_set(check.A),
        "B": format_set(check.B),
    }


_HANDLERS = {
    "measure": _cmd_measure,
    "indep": _cmd_indep,
    "construct": _cmd_construct,
    "threshold": _cmd_threshold,
    "search": _cmd_search,
    "finite-space": _cmd_finite_space,
}


def _emit_error(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")), file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        result = _HANDLERS[args.verb](args)
    except _UsageError as exc:
        _emit_error({"error": str(exc)})
        return 1
    except ParseError as exc:
        _emit_error({"error": str(exc), "position": exc.pos})
        return 1
    except ValueError as exc:
        _emit_error({"error": str(exc)})
        return 1
    except Exception as exc:  # invariant violation somewhere below
        _emit_error({"error": f"internal: {exc}"})
        return 2
    print(json.dumps(result, separators=(",", ":")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
