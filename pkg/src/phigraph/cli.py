"""Command-line interface.

Exit status: 0 on success, 1 when a mathematical violation is detected, 2 on
input or precision errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import mp

from . import __version__
from .density import mad, max_density_exact
from .extremal import (
    MATERIALIZE_CAP,
    ExtremalParams,
    MaterializationError,
    PrecisionError,
    analytic_report,
    blow_up,
    choose_params,
    materialized_check,
)
from .flow import orient_bounded_outdegree, pseudoarboricity
from .generators import GenSpec, random_k_degenerate, random_tree
from .golden import DEFAULT_PRECISION, GUARD_DIGITS, MIN_PRECISION
from .graph import GraphError, read_edge_list, to_edge_list
from .inequality import arc_certificate, check_cubed_bound, check_main

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_decimal(x: Fraction, places: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = places + len(str(abs(x.numerator) // x.denominator)) + 5
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places)))


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _precision(value: str) -> int:
    p = int(value)
    if p < MIN_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_PRECISION}")
    return p


def _positive(value: str) -> int:
    k = int(value)
    if k < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return k


def _int_list(value: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {value!r}") from exc


def _default_k(g, k: int | None) -> int:
    return k if k is not None else max(1, pseudoarboricity(g))


def cmd_mad(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    w = max_density_exact(g)
    value = 2 * w.density
    if args.format == "json":
        return _dump_json({
            "n": g.n,
            "m": g.m,
            "mad": fraction_str(value),
            "mad_decimal": fraction_decimal(value),
            "max_density": fraction_str(w.density),
            "witness": list(w.subgraph),
        }), EXIT_OK
    return f"{fraction_str(value)} ({fraction_decimal(value)})\n", EXIT_OK


def cmd_orient(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    k = _default_k(g, args.k)
    o = orient_bounded_outdegree(g, k)
    if args.format == "json":
        return _dump_json({
            "k": k,
            "possible": o is not None,
            "arcs": [list(a) for a in o.arcs] if o else None,
            "max_outdegree": o.max_outdegree() if o else None,
        }), EXIT_OK
    return ("impossible\n" if o is None else o.format()), EXIT_OK


def cmd_check(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    k = _default_k(g, args.k)
    verified = mad(g) <= 2 * k if args.verify_hypothesis else None
    report = check_main(g, k, args.precision, hypothesis_verified=verified)
    # outside the hypothesis a failure is not a counterexample
    status = EXIT_VIOLATION if not report.holds and verified is not False else EXIT_OK
    data = report.to_json()
    if args.format == "json":
        return _dump_json(data), status
    return "".join(f"{key}: {_text(val)}\n" for key, val in data.items()), status


def _text(val) -> str:
    if val is None:
        return "n/a"
    if isinstance(val, bool):
        return str(val).lower()
    return str(val)


def cmd_eq1(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    r = check_cubed_bound(g)
    data = {
        "n": g.n,
        "m": g.m,
        "lhs": str(r.lhs),
        "rhs": fraction_str(r.rhs),
        "holds": r.holds,
        "equality": r.equality,
        "regular": r.regular,
    }
    status = EXIT_OK if r.holds else EXIT_VIOLATION
    if args.format == "json":
        return _dump_json(data), status
    return "".join(f"{key}: {_text(val)}\n" for key, val in data.items()), status


def cmd_certificate(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    k = _default_k(g, args.k)
    o = orient_bounded_outdegree(g, k)
    if o is None:
        raise InputError(f"no orientation with outdegree <= {k} exists (mad > {2 * k})")
    cert = arc_certificate(g, o, k, args.precision)
    status = EXIT_OK if cert.holds else EXIT_VIOLATION
    digits = args.precision

    def fmt(x) -> str:
        with mp.workdps(digits + GUARD_DIGITS):
            return mpmath.nstr(x, digits, strip_zeros=False)

    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["tail", "head", "lhs_term", "rhs_term", "holds"])
        for r in cert.records:
            w.writerow([r.tail, r.head, fmt(r.lhs_term), fmt(r.rhs_term), str(r.holds).lower()])
        return buf.getvalue(), status
    data = {
        "n": g.n,
        "m": g.m,
        "k": k,
        "precision": digits,
        "arcs": [
            {"tail": r.tail, "head": r.head, "lhs_term": fmt(r.lhs_term),
             "rhs_term": fmt(r.rhs_term), "holds": r.holds}
            for r in cert.records
        ],
        "lhs_sum": fmt(cert.lhs_sum),
        "rhs_sum": fmt(cert.rhs_sum),
        "degree_power_total": fmt(cert.degree_power_total),
        "edge_product_sum": str(cert.edge_products),
        "all_arcs_hold": cert.all_arcs_hold,
        "lhs_consistent": cert.lhs_consistent,
        "rhs_collapses": cert.rhs_collapses,
        "holds": cert.holds,
    }
    if args.format == "json":
        return _dump_json(data), status
    data.pop("arcs")
    return "".join(f"{key}: {_text(val)}\n" for key, val in data.items()), status


def _params(args) -> ExtremalParams:
    if args.epsilon is not None:
        p = choose_params(args.epsilon, args.precision)
        return ExtremalParams(p.a, p.R, args.k, args.epsilon)
    if args.a is None or args.R is None:
        raise InputError("give either --epsilon or both --a and --R")
    return ExtremalParams(args.a, args.R, args.k)


def cmd_extremal(args) -> tuple[str, int]:
    params = _params(args)
    report = analytic_report(params, args.precision)
    data = report.to_json()
    data["epsilon"] = params.epsilon
    ok = report.within_bound and report.profile.sandwich_ok and report.lower_bound_ok
    if args.materialize:
        check = materialized_check(params, args.cap, args.precision)
        data["materialized"] = check.to_json()
        ok = ok and check.ok
    status = EXIT_OK if ok else EXIT_VIOLATION
    if args.format == "json":
        return _dump_json(data), status
    lines = [f"{key}: {_text(val)}" for key, val in data.items() if key != "materialized"]
    lines += [f"materialized.{key}: {_text(val)}" for key, val in data.get("materialized", {}).items()]
    return "\n".join(lines) + "\n", status


SCAN_COLUMNS = ["a", "R", "k", "log10_lhs", "log10_rhs", "ratio", "epsilon_bound", "within_bound"]


def _scan_row(job: tuple[int, int, int, int]) -> dict:
    a, R, k, precision = job
    rep = analytic_report(ExtremalParams(a, R, k), precision).to_json()
    return {
        "a": a,
        "R": R,
        "k": k,
        "log10_lhs": rep["log10_lhs"],
        "log10_rhs": rep["log10_rhs"],
        "ratio": rep["measured_ratio"],
        "epsilon_bound": rep["epsilon_bound"],
        "within_bound": rep["within_bound"],
    }


def cmd_scan(args) -> tuple[str, int]:
    jobs = [(a, R, k, args.precision) for a in args.a for R in args.R for k in args.k]
    for a, R, k, _ in jobs:
        ExtremalParams(a, R, k)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_row, jobs))
    else:
        rows = [_scan_row(j) for j in jobs]
    status = EXIT_OK if all(r["within_bound"] for r in rows) else EXIT_VIOLATION
    if args.format == "json":
        return _dump_json(rows), status
    buf = io.StringIO()
    w = csv.DictWriter(buf, SCAN_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "within_bound": str(r["within_bound"]).lower()})
    return buf.getvalue(), status


def cmd_blowup(args) -> tuple[str, int]:
    g = read_edge_list(args.file)
    return to_edge_list(blow_up(g, args.k), [f"blow-up k={args.k} of {args.file}"]), EXIT_OK


def cmd_gen(args) -> tuple[str, int]:
    if args.family == "tree":
        if args.n < 1:
            raise InputError("n must be at least 1")
        g = random_tree(args.n, args.seed)
        header = f"random_tree n={args.n} seed={args.seed} rng=MT19937"
    else:
        spec = GenSpec(args.n, args.k, args.edge_prob, args.seed)
        g = random_k_degenerate(spec)
        header = f"random_k_degenerate {spec.describe()}"
    return to_edge_list(g, [header]), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phigraph",
        description="Maximum average degree, bounded-outdegree orientations and "
        "golden-ratio degree-product inequalities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str, formats: Sequence[str], default: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="edge-list file")
        p.add_argument("--format", choices=formats, default=default)
        return p

    graph_cmd("mad", "exact maximum average degree", ["text", "json"], "text")

    p = graph_cmd("orient", "orientation with outdegree <= k", ["text", "json"], "text")
    p.add_argument("--k", type=_positive, help="outdegree bound (default: pseudoarboricity)")

    p = graph_cmd("check", "evaluate the golden-ratio inequality", ["json", "text"], "json")
    p.add_argument("--k", type=_positive, help="mad bound 2k (default: pseudoarboricity)")
    p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    p.add_argument("--verify-hypothesis", action="store_true", help="compute mad and test mad <= 2k")

    graph_cmd("eq1", "evaluate the cubed-degree bound", ["json", "text"], "json")

    p = graph_cmd("certificate", "per-arc AM-GM certificate", ["json", "csv", "text"], "json")
    p.add_argument("--k", type=_positive, help="outdegree bound (default: pseudoarboricity)")
    p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)

    p = sub.add_parser("extremal", help="tightness report for the extremal tree T(a, R)")
    p.add_argument("--a", type=int)
    p.add_argument("--R", type=int)
    p.add_argument("--epsilon", type=float, help="choose (a, R) for this epsilon instead")
    p.add_argument("--k", type=_positive, default=1, help="blow-up factor")
    p.add_argument("--materialize", action="store_true", help="also build the graph and cross-check")
    p.add_argument("--cap", type=int, default=MATERIALIZE_CAP, help="vertex cap for --materialize")
    p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("scan", help="tightness reports over an (a, R, k) grid")
    p.add_argument("--a", type=_int_list, required=True, help="comma-separated a values")
    p.add_argument("--R", type=_int_list, required=True, help="comma-separated R values")
    p.add_argument("--k", type=_int_list, default=[1], help="comma-separated blow-up factors")
    p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("blowup", help="K_{k,k} blow-up of a graph, as an edge list")
    p.add_argument("file")
    p.add_argument("--k", type=_positive, required=True)

    p = sub.add_parser("gen", help="random graph as an edge list")
    p.add_argument("family", choices=["tree", "degenerate"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--edge-prob", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "mad": cmd_mad,
    "orient": cmd_orient,
    "check": cmd_check,
    "eq1": cmd_eq1,
    "certificate": cmd_certificate,
    "extremal": cmd_extremal,
    "scan": cmd_scan,
    "blowup": cmd_blowup,
    "gen": cmd_gen,
}


def run(argv: Sequence[str] | None = None) -> tuple[str, str, int]:
    """Execute a command; returns (stdout, stderr, exit status)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", "", int(exc.code or 0)
    try:
        out, status = COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        return "", f"error: file not found: {exc.filename}\n", EXIT_INPUT
    except GraphError as exc:
        return "", f"error: invalid graph: {exc}\n", EXIT_INPUT
    except PrecisionError as exc:
        return "", f"error: precision: {exc}\n", EXIT_INPUT
    except MaterializationError as exc:
        return "", f"error: {exc}\n", EXIT_INPUT
    except (InputError, ValueError) as exc:
        return "", f"error: {exc}\n", EXIT_INPUT
    return out, "", status


def main(argv: Sequence[str] | None = None) -> int:
    out, err, status = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
