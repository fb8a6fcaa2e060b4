"""Command-line interface: ``macpos {compute,check,scan-lr,spec,fiber}``.

Exit status is 0 on success, 1 when an identity or bound fails and 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import diffusivity, specializations as sp
from .macdonald import (
    e_poly,
    g_poly,
    lr_coefficient,
    macdonald_poly,
    schur_jacobi_trudi,
)
from .partitions import (
    contains,
    format_partition,
    parse_partition,
    partitions_upto,
    size,
)
from .qt import DEFAULT_DEGREE, MAX_DEGREE, QTParams, format_rational, parse_rational
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- argument types -------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _degree(text: str) -> int:
    n = int(text)
    if not 0 <= n <= MAX_DEGREE:
        raise argparse.ArgumentTypeError(f"degree must lie in 0..{MAX_DEGREE}")
    return n


def _builtin(text: str) -> tuple[str, Fraction]:
    kind, _, value = text.partition(":")
    if kind == "trivial":
        return kind, Fraction(0)
    if not value:
        raise argparse.ArgumentTypeError(f"expected kind:value, got {text!r}")
    return kind, _rational(value)


# --- output -------------------------------------------------------------------

def _emit(data, fmt: str, table: Optional[Callable[[], Iterable[str]]] = None) -> None:
    if fmt == "json" or table is None:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in table():
            print(line)


def _pmap(fn, items: Sequence, jobs: int) -> list:
    """Ordered map; a process pool when ``jobs > 1``."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _params(args) -> QTParams:
    try:
        return QTParams(args.q, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- compute ------------------------------------------------------------------

def cmd_compute(args) -> int:
    params = _params(args)
    obj, lam, inner = args.object, args.partition, args.inner
    if obj in ("g", "e"):
        if len(lam) > 1:
            raise UsageError(f"{obj} takes a single integer degree")
        r = lam[0] if lam else 0
        if r > args.degree:
            raise UsageError(f"degree {r} exceeds --degree {args.degree}")
        f = g_poly(r, params) if obj == "g" else e_poly(r)
    else:
        if not contains(inner, lam):
            raise UsageError(f"{format_partition(inner)} is not contained in {format_partition(lam)}")
        if size(lam) - size(inner) > args.degree:
            raise UsageError(f"|lambda| - |inner| exceeds --degree {args.degree}")
        if obj == "schur":
            f = schur_jacobi_trudi(lam, inner)
        else:
            f = macdonald_poly(lam, inner, obj, params)

    def table():
        for term in f.to_json()["terms"]:
            yield f"{term['coeff']:>24}  m[{term['partition']}]"

    _emit(f.to_json(), args.output, table)
    return EXIT_OK


# --- check --------------------------------------------------------------------

def cmd_check(args) -> int:
    params = _params(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name == "schur-degeneration":
            rep = SUITES[name](params.q, max_size=args.max_size or 6)
        elif name == "qgauss":
            rep = SUITES[name](params, degree=args.degree)
        elif name in ("duality", "union"):
            rep = SUITES[name](params, max_size=args.max_size or 5)
        else:
            rep = SUITES[name](params, max_size=args.max_size or 6)
        reports.append(rep)

    def table():
        for r in reports:
            yield f"{r.name:<20} {'PASS' if r.passed else 'FAIL'}  ({r.checked} checks)"
            for msg in r.failures[:20]:
                yield f"    {msg}"

    _emit([r.to_json() for r in reports], args.output, table)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# --- scan-lr ------------------------------------------------------------------

def _lr_point(task):
    lam, mu, nu, q, t = task
    return lr_coefficient(lam, mu, nu, QTParams(q, t))


def grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise UsageError("grid step must be positive")
    out, x = [], lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def cmd_scan_lr(args) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    if size(nu) != size(lam) + size(mu):
        raise UsageError("|nu| must equal |lambda| + |mu|")
    lo, _, hi = args.range.partition(":")
    lo, hi = _rational(lo), _rational(hi)
    if not (-1 < lo <= hi < 1):
        raise UsageError("grid range must lie inside (-1, 1)")
    axis = grid(lo, hi, args.step)
    points = [(x, x) for x in axis] if args.diagonal else [(q, t) for q in axis for t in axis]
    values = _pmap(_lr_point, [(lam, mu, nu, q, t) for q, t in points], args.jobs)
    rows = [{"q": format_rational(q), "t": format_rational(t), "value": format_rational(v),
             "negative": v < 0} for (q, t), v in zip(points, values)]
    summary = {"lambda": format_partition(lam), "mu": format_partition(mu), "nu": format_partition(nu),
               "points": len(rows), "negative": sum(r["negative"] for r in rows),
               "min": format_rational(min(values)), "max": format_rational(max(values))}

    def table():
        for r in rows:
            yield f"{r['q']:>6} {r['t']:>6}  {r['value']}{'  <0' if r['negative'] else ''}"
        yield f"# {summary['negative']} negative of {summary['points']}"

    _emit({"summary": summary, "values": rows}, args.output, table)
    return EXIT_OK


# --- spec ---------------------------------------------------------------------

def _build_spec(args, params: QTParams) -> sp.Specialization:
    parts = []
    try:
        if args.kerov:
            parts.append(sp.kerov_spec(sp.KerovParams.from_json(json.loads(args.kerov)), params, args.degree))
        for kind, value in args.builtin or ():
            if kind == "trivial":
                parts.append(sp.trivial_spec(params, args.degree))
            else:
                parts.append(sp.builtin_spec(kind, value, params, args.degree))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from None
    if not parts:
        raise UsageError("give --kerov JSON and/or --builtin kind:value")
    return sp.union_spec(*parts)


def _values_json(pairs) -> list[dict]:
    return [{"partition": format_partition(lam), "value": format_rational(v)} for lam, v in pairs]


def _eval_task(task):
    theta, lam = task
    return sp.eval_Q(theta, lam)


def cmd_spec(args) -> int:
    params = _params(args)
    theta = _build_spec(args, params)
    max_size = args.max_size or 6
    if args.action in ("eval", "positivity", "harmonic") and max_size > args.degree:
        raise UsageError(f"--max-size {max_size} exceeds --degree {args.degree}")
    status = EXIT_OK

    if args.action == "eval":
        lams = [args.lam] if args.lam is not None else partitions_upto(max_size)
        if args.lam is not None and size(args.lam) > args.degree:
            raise UsageError("|lambda| exceeds --degree")
        vals = _pmap(_eval_task, [(theta, lam) for lam in lams], args.jobs)
        data = {"values": _values_json(zip(lams, vals))}
    elif args.action == "positivity":
        lams = partitions_upto(max_size)
        vals = _pmap(_eval_task, [(theta, lam) for lam in lams], args.jobs)
        data = {"max_size": max_size, "negative": _values_json((l, v) for l, v in zip(lams, vals) if v < 0)}
    elif args.action == "pole-removal":
        if args.alpha is None or args.alpha <= 0:
            raise UsageError("pole-removal needs --alpha > 0")
        out = sp.pole_removal(theta, args.alpha)
        data = {"alpha": format_rational(args.alpha), "series": out.generating_series().to_json(),
                "trivial": all(v == 0 for v in out.g_values)}
    elif args.action == "limit":
        lam = args.lam if args.lam is not None else (1,)
        if args.alpha is None or args.alpha <= 0:
            raise UsageError("limit needs --alpha > 0")
        if args.n_max + size(lam) > args.degree:
            raise UsageError(f"--degree must be at least N-max + |lambda| = {args.n_max + size(lam)}")
        try:
            data = sp.main_limit_check(theta, args.alpha, lam, args.n_max).to_json()
        except ZeroDivisionError as exc:
            raise UsageError(str(exc)) from None
    else:  # harmonic
        try:
            normed = sp.normalize(theta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rep = sp.harmonicity_check(normed, max_size)
        data = {"max_size": max_size, "checked": rep.checked, "holds": rep.holds,
                "failures": [{"partition": format_partition(m), "lhs": format_rational(a),
                              "rhs": format_rational(b)} for m, a, b in rep.failures]}
        status = EXIT_OK if rep.holds else EXIT_FAIL
    data["action"] = args.action
    _emit(data, args.output)
    return status


# --- fiber --------------------------------------------------------------------

def cmd_fiber(args) -> int:
    if not 0 <= args.n <= 4 or not 0 <= args.d <= 2:
        raise UsageError("fiber census supports n <= 4 and d <= 2")
    census = diffusivity.fiber_census(args.n, args.d)

    def table():
        c = census.to_json()
        yield f"n={c['n']} d={c['d']} max_fiber={c['max_fiber']} bound={c['bound']}"

    _emit(census.to_json(), args.output, table)
    return EXIT_OK if census.holds else EXIT_FAIL


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_rational, default=Fraction(1, 3), help="rational q, |q| < 1")
    common.add_argument("--t", type=_rational, default=Fraction(1, 5), help="rational t, |t| < 1")
    common.add_argument("--degree", type=_degree, default=DEFAULT_DEGREE, help="truncation degree N")
    common.add_argument("--max-size", type=int, default=None, help="largest partition size")
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="macpos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="a symmetric function in the m-basis")
    p.add_argument("object", choices=("P", "Q", "g", "e", "schur"))
    p.add_argument("partition", type=_partition, help='e.g. "2,1"; an integer for g/e')
    p.add_argument("--inner", type=_partition, default=(), help="inner shape of a skew function")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", parents=[common], help="run an exact identity suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan-lr", parents=[common], help="scan c^nu_{lambda,mu}(q,t) over a grid")
    p.add_argument("lam", type=_partition, metavar="LAMBDA")
    p.add_argument("mu", type=_partition, metavar="MU")
    p.add_argument("nu", type=_partition, metavar="NU")
    p.add_argument("--step", type=_rational, default=Fraction(1, 10))
    p.add_argument("--range", default="-9/10:9/10", help="lo:hi, both axes")
    p.add_argument("--diagonal", action="store_true", help="only the line q = t")
    p.set_defaults(func=cmd_scan_lr)

    p = sub.add_parser("spec", parents=[common], help="specialization reports")
    p.add_argument("action", choices=("eval", "positivity", "pole-removal", "limit", "harmonic"))
    p.add_argument("--kerov", help='JSON, e.g. {"alphas":["1/2"],"betas":[],"gamma":"0"}')
    p.add_argument("--builtin", type=_builtin, action="append",
                   help="alpha:A, beta_dual:B, plancherel:G or trivial; repeat for a union")
    p.add_argument("--alpha", type=_rational, default=None)
    p.add_argument("--lambda", dest="lam", type=_partition, default=None)
    p.add_argument("--N-max", dest="n_max", type=int, default=20)
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("fiber", parents=[common], help="fiber census of the filling map")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_fiber)
    return parser


_VALUE_FLAGS = ("--q", "--t", "--alpha", "--step", "--range")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--q -1/3`` into ``--q=-1/3``; argparse would read ``-1/3`` as a flag."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = _join_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"macpos: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
