"""``realroots`` command-line interface.

Usage: ``realroots <command> [flags] <poly>...``.  Exit status is 0 on
success, 2 for usage / input errors and 3 for mathematical domain errors
(zero polynomial, ideal not zero-dimensional, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from .arith import format_rational, parse_point, parse_rational
from .errors import DomainError, InputError
from .groebner import QuotientRing, buchberger
from .multipoly import order_by_name
from .parser import parse_poly, to_multipoly, to_unipoly, variables_of
from . import univariate as uni
from . import zerodim

__all__ = ["main", "run", "build_parser", "COMMANDS"]


class UsageError(InputError):
    pass


COMMANDS = [
    ("variations", "sign variations of a sequence of rationals"),
    ("descartes", "Descartes bound on positive roots"),
    ("budan-fourier", "Budan-Fourier bound on roots in (a, b]"),
    ("sylvester-seq", "Sylvester sequence of f and g (g defaults to 1)"),
    ("sylvester-count", "signed root count of f weighted by the sign of g"),
    ("sturm-count", "number of real roots in (a, b]"),
    ("isolate", "dyadic isolating intervals"),
    ("multiplicity-count", "real roots in (a, b] counted with multiplicity"),
    ("hurwitz-matrix", "Hurwitz matrix"),
    ("hurwitz-determinants", "Hurwitz determinants"),
    ("hurwitz-stable", "Hurwitz stability test"),
    ("groebner", "reduced Groebner basis of the generators"),
    ("regular-rep", "matrix of multiplication by f (first polynomial) modulo the rest"),
    ("eliminant", "eliminant of f (first polynomial) modulo the rest"),
    ("rur", "rational univariate representation"),
    ("trace-form", "trace form S_h, h first, generators after"),
    ("trace-count", "number of complex points"),
    ("real-count", "number of real points"),
    ("trace-signature", "signature of S_h, h first, generators after"),
]


def _flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    p.add_argument("--vars", help="comma-separated ordered variable list")
    p.add_argument("--a", default="-inf", help="left endpoint (rational or -inf)")
    p.add_argument("--b", default="inf", help="right endpoint (rational or inf)")
    p.add_argument("--tolerance", default="1/64", help="isolation width bound (positive rational)")
    p.add_argument("--multiplicity", action="store_true", help="count roots with multiplicity")
    p.add_argument("--left-closed", action="store_true", help="count on [a, b) instead of (a, b]")
    p.add_argument("--reduced", action="store_true", help="sylvester-seq: print the reduced sequence")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--order", default="grevlex", choices=["grevlex", "lex", "grlex"])
    p.add_argument("--eliminant-var", default="Z", help="variable name for the eliminant")
    p.add_argument("polys", nargs="*", metavar="poly")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realroots", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)
    flags = _flags()
    for name, help_ in COMMANDS:
        sub.add_parser(name, parents=[flags], help=help_, description=help_, allow_abbrev=False)
    return parser


def _option_strings(parser: argparse.ArgumentParser) -> set:
    opts = set(parser._option_string_actions)
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sp in action.choices.values():
                opts |= set(sp._option_string_actions)
    return opts


def _protect_negatives(argv: Sequence[str], known: set) -> List[str]:
    """Keep argparse from reading ``-3*x^2`` or ``-inf`` as an option.

    A leading space is harmless to the polynomial and rational parsers but
    makes argparse treat the word as a positional value.
    """
    out = []
    rest = False
    for arg in argv:
        if rest or arg == "--":
            rest = True
            out.append(arg)
        elif arg.startswith("-") and len(arg) > 1 and arg.split("=", 1)[0] not in known:
            out.append(" " + arg)
        else:
            out.append(arg)
    return out


def _var_list(args) -> Optional[Tuple[str, ...]]:
    if not args.vars:
        return None
    names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    if not names:
        raise UsageError("--vars is empty")
    return names


def _unipolys(args, count: Tuple[int, int]):
    lo, hi = count
    if not lo <= len(args.polys) <= hi:
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        raise UsageError(f"{args.command} takes {want} polynomial argument(s), got {len(args.polys)}")
    names = _var_list(args)
    if names is not None and len(names) != 1:
        raise UsageError("univariate commands take a single variable in --vars")
    trees = [parse_poly(src, names) for src in args.polys]
    if names is None:
        used = set().union(*(variables_of(t) for t in trees)) if trees else set()
        if len(used) > 1:
            raise UsageError(f"univariate command got several variables: {', '.join(sorted(used))}")
        var = next(iter(used), "x")
    else:
        var = names[0]
    return [to_unipoly(t, var) for t in trees]


def _multipolys(args, min_count: int = 1):
    if len(args.polys) < min_count:
        raise UsageError(f"{args.command} needs at least {min_count} polynomial argument(s)")
    names = _var_list(args)
    trees = [parse_poly(src, names) for src in args.polys]
    if names is None:
        names = tuple(sorted(set().union(*(variables_of(t) for t in trees)))) or ("x",)
    return [to_multipoly(t, names) for t in trees]


def _interval(args):
    a, b = parse_point(args.a), parse_point(args.b)
    return a, b


def _quotient(args, gens):
    return QuotientRing(buchberger(gens, order_by_name(args.order)))


def _matrix_strings(M):
    return [[format_rational(x) for x in row] for row in M]


def _matrix_text(M) -> str:
    rows = _matrix_strings(M)
    width = max((len(s) for row in rows for s in row), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in rows)


def _dispatch(args):
    """Return ``(json_document, text)`` for the parsed command."""
    cmd = args.command

    if cmd == "variations":
        seq = [parse_rational(s) for s in args.polys]
        v = uni.variations(seq)
        return {"value": v}, str(v)

    if cmd in ("descartes", "budan-fourier", "sturm-count", "multiplicity-count", "isolate",
               "hurwitz-matrix", "hurwitz-determinants", "hurwitz-stable"):
        (f,) = _unipolys(args, (1, 1))
        if cmd == "descartes":
            v = uni.descartes_bound(f)
        elif cmd == "budan-fourier":
            v = uni.budan_fourier_bound(f, *_interval(args))
        elif cmd in ("sturm-count", "multiplicity-count"):
            a, b = _interval(args)
            v = uni.sturm_count(f, a, b, multiplicity=args.multiplicity or cmd == "multiplicity-count",
                                left_closed=args.left_closed)
        elif cmd == "isolate":
            tol = parse_rational(args.tolerance)
            if tol <= 0:
                raise UsageError("--tolerance must be positive")
            ivs = uni.real_root_isolation(f, tol)
            doc = {"intervals": [iv.as_dict() for iv in ivs]}
            text = "\n".join(f"({d['lo']}, {d['hi']}] multiplicity {d['multiplicity']}" for d in doc["intervals"])
            return doc, text
        elif cmd == "hurwitz-matrix":
            H = uni.hurwitz_matrix(f)
            return {"matrix": _matrix_strings(H)}, _matrix_text(H)
        elif cmd == "hurwitz-determinants":
            ds = [format_rational(d) for d in uni.hurwitz_determinants(f)]
            return {"deltas": ds}, " ".join(ds)
        else:
            s = uni.is_hurwitz_stable(f)
            return {"value": s}, "true" if s else "false"
        return {"value": v}, str(v)

    if cmd == "sylvester-seq":
        polys = _unipolys(args, (1, 2))
        f = polys[0]
        g = polys[1] if len(polys) > 1 else 1
        seq = uni.reduced_sylvester_sequence(f, g) if args.reduced else uni.sylvester_sequence(f, g)
        strs = [str(p) for p in seq]
        return {"sequence": strs}, "\n".join(strs)

    if cmd == "sylvester-count":
        f, g = _unipolys(args, (2, 2))
        a, b = _interval(args)
        v = uni.sylvester_count(f, g, a, b, multiplicity=args.multiplicity)
        return {"value": v}, str(v)

    if cmd == "groebner":
        gens = _multipolys(args)
        gb = buchberger(gens, order_by_name(args.order))
        strs = [g.to_str(gb.order) for g in gb]
        return {"basis": strs}, "\n".join(strs)

    if cmd in ("regular-rep", "eliminant", "trace-form", "trace-signature"):
        polys = _multipolys(args, 2)
        f, gens = polys[0], polys[1:]
        R = _quotient(args, gens)
        if cmd == "regular-rep":
            M = zerodim.regular_representation(f, R)
            return {"basis": R.basis_strings(), "matrix": _matrix_strings(M)}, _matrix_text(M)
        if cmd == "eliminant":
            g = zerodim.univariate_eliminant(f, R, args.eliminant_var)
            return {"eliminant": str(g)}, str(g)
        if cmd == "trace-form":
            S = zerodim.trace_form(f, R)
            return {"basis": R.basis_strings(), "matrix": _matrix_strings(S)}, _matrix_text(S)
        v = zerodim.trace_signature(f, R)
        return {"value": v}, str(v)

    if cmd in ("rur", "trace-count", "real-count"):
        R = _quotient(args, _multipolys(args))
        if cmd == "rur":
            rur = zerodim.rational_univariate_representation(R)
            doc = rur.as_dict()
            lines = [f"separating form: {doc['separating_form']}", f"char poly: {doc['char_poly']}"]
            lines += [f"{c['var']} = ({c['numerator']}) / ({c['denominator']})" for c in doc["coords"]]
            return doc, "\n".join(lines)
        v = zerodim.trace_count(R) if cmd == "trace-count" else zerodim.real_count(R)
        return {"value": v}, str(v)

    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def run(argv: Sequence[str]) -> Tuple[int, str, str]:
    """Execute one job; return ``(exit_status, stdout_text, stderr_text)``."""
    parser = build_parser()
    argv = _protect_negatives(list(argv), _option_strings(parser) | {"-h", "--help"})
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        doc, text = _dispatch(args)
    except InputError as exc:
        return 2, "", f"realroots {args.command}: error: {exc}\n"
    except (DomainError, ZeroDivisionError) as exc:
        return 3, "", f"realroots {args.command}: {type(exc).__name__}: {exc}\n"
    out = json.dumps(doc) if args.json else text
    return 0, out + "\n", ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
