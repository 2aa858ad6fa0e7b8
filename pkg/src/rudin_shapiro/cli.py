"""Command-line entry point: ``rudin-shapiro <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or cap error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys

import numpy as np

from . import bounds as bounds_mod
from .campaign import COLUMNS, HEADER_NOTE, CampaignConfig, run_campaign
from .circle import (
    eval_grid,
    eval_point,
    modulus_reflection_deviation,
    tol_grid,
    verify_lemma31,
    verify_parallelogram,
)
from .core import check_invariants, generate, reversal_identity_check
from .errors import IdentityViolation, RudinShapiroError
from .formats import dumps_csv, dumps_json, format_coeffs, read_coeffs, write_grid
from .roots import find_roots, verify_theorem11
from .zeros import Arc, count_zeros, oracle_count, parse_angle, proof_construction

class UsageError(Exception):
    pass


def parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        return int(text), int(text)
    return int(lo), int(hi)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(obj, fmt: str, columns=None) -> str:
    if fmt == "json":
        return dumps_json(obj)
    rows = obj if isinstance(obj, list) else [obj]
    return dumps_csv(rows, columns or list(rows[0]))


def _require_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    return args.k


# -- subcommands -----------------------------------------------------------


def cmd_gen(args) -> int:
    _emit(format_coeffs(generate(_require_k(args))), args.out)
    return 0


def cmd_eval(args) -> int:
    pair = generate(_require_k(args))
    rows = []
    for t in args.t or []:
        p, q = eval_point(pair, t)
        rows.append({"t": t, "p_re": p.real, "p_im": p.imag, "q_re": q.real,
                     "q_im": q.imag, "r": abs(p) ** 2})
    if args.dump_grid:
        write_grid(args.dump_grid, eval_grid(pair, args.grid_factor * pair.n))
    if rows:
        _emit(_render(rows, args.format), args.out)
    return 0


def _verify_level(pair, lemma31: bool) -> tuple[dict, str | None]:
    """Run every check on one pair; returns the record and the first failed check."""
    k = pair.k
    tol = tol_grid(k)
    rec = {"k": k, "n": pair.n, "tol_grid": tol}
    failed = None
    try:
        check_invariants(pair)
        rec["structure"] = True
    except IdentityViolation as exc:
        rec["structure"] = False
        rec["structure_error"] = f"{exc} (index {exc.index})"
        failed = failed or "structure"
    grid = eval_grid(pair, 8 * pair.n)
    rec["parallelogram"] = verify_parallelogram(grid)
    if rec["parallelogram"] > tol:
        failed = failed or "parallelogram"
    rec["reflection"] = modulus_reflection_deviation(grid)
    if rec["reflection"] > tol:
        failed = failed or "reflection"
    if lemma31 and k >= 2:
        rec["lemma31"] = verify_lemma31(k, pair=pair)
        if rec["lemma31"] > tol:
            failed = failed or "lemma31"
    try:
        rec["reversal_sign"] = reversal_identity_check(pair)
    except IdentityViolation as exc:
        rec["reversal_sign"] = None
        rec["reversal_error"] = str(exc)
        failed = failed or "reversal"
    rec["pass"] = failed is None
    return rec, failed


def cmd_verify(args) -> int:
    if args.coeffs:
        pairs = [read_coeffs(args.coeffs)]
    else:
        lo, hi = parse_k_range(args.k_range) if args.k_range else (_require_k(args),) * 2
        pairs = [generate(k) for k in range(lo, hi + 1)]
    levels = []
    first = None
    for pair in pairs:
        rec, failed = _verify_level(pair, lemma31=pair.k <= 20)
        levels.append(rec)
        if failed and first is None:
            first = f"k={pair.k}: {failed}"
    result = {"passed": first is None, "first_failure": first or "", "levels": levels}
    _emit(dumps_json(result), args.out)
    if first:
        print(f"verification failed: {first}", file=sys.stderr)
        return 1
    return 0


def cmd_count(args) -> int:
    pair = generate(_require_k(args))
    arc = args.arc[0] if args.arc else Arc.full()
    rep = count_zeros(pair, arc, args.grid_factor * pair.n, refine=args.refine)
    out = rep.to_dict()
    if args.oracle:
        out["oracle_count"] = oracle_count(pair, arc)
    _emit(dumps_json(out), args.out)
    return 0


def cmd_proof_count(args) -> int:
    k = _require_k(args)
    arc = args.arc[0] if args.arc else Arc.full()
    rep = proof_construction(k, arc)
    out = {
        "k": k, "n": 1 << k, "alpha": arc.alpha, "beta": arc.beta, "h": rep.h, "M": rep.M,
        "N_pairs": rep.N_pairs, "certified_distinct_lower": rep.certified_distinct_lower,
        "uncertain": rep.uncertain, "intervals": [list(iv) for iv in rep.intervals],
    }
    _emit(dumps_json(out), args.out)
    return 0


def cmd_bounds(args) -> int:
    arcs = args.arc or [Arc.full()]
    k_or_m = args.m if args.m is not None else _require_k(args)
    if args.kind in ("lemma32", "theorem11_classic", "theorem11_sound") and args.H is None:
        raise UsageError(f"--H is required for {args.kind}")
    rows = []
    for arc in arcs:
        row = bounds_mod.report(args.kind, k_or_m, arc, args.H, args.log_base).row()
        if args.clamp and row["lower"] < 0:
            row["lower"] = "0 (clamped)"
        rows.append(row)
    cols = ["kind", "k_or_m", "alpha", "beta", "lower", "upper", "log_base"]
    _emit(_render(rows, args.format, cols), args.out)
    return 0


def cmd_roots(args) -> int:
    if args.poly:
        coeffs = np.array([complex(c) for c in args.poly.split(",")])
    else:
        coeffs = generate(_require_k(args)).coeffs(args.which)
    rs = find_roots(coeffs)
    if args.arc:
        rep = verify_theorem11(coeffs, args.arc, args.constant, rs=rs)
        rows = [{"alpha": r.arc.alpha, "beta": r.arc.beta, "count": r.count,
                 "expected": r.expected, "discrepancy": r.discrepancy, "bound": r.bound,
                 "violated": r.violated} for r in rep.rows]
        _emit(_render(rows, args.format), args.out)
        return 1 if rep.violations else 0
    _emit(_render(list(rs.rows()), args.format, ["re", "im", "rho", "theta"]), args.out)
    return 0


def cmd_campaign(args) -> int:
    lo, hi = parse_k_range(args.k_range) if args.k_range else (_require_k(args),) * 2
    arcs = list(args.arc or [])
    arcs += args.arcs.split(",") if args.arcs else ["full", f"random:20:{args.seed}"]
    cfg = CampaignConfig(lo, hi, arcs, args.grid_factor, args.log_base, args.oracle_samples)
    rows = run_campaign(cfg)
    if args.format == "json":
        text = dumps_json({"note": HEADER_NOTE, "rows": rows})
    else:
        text = f"# {HEADER_NOTE}\n" + dumps_csv(rows, COLUMNS)
    _emit(text, args.out)
    return 0 if all(r["pass"] for r in rows) else 1


# -- parser ----------------------------------------------------------------


def _arc(text):
    try:
        return Arc.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _angle(text):
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _log_base(text):
    return math.e if text in ("e", "E") else float(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--k-range", help="inclusive range A..B")
    common.add_argument("--arc", type=_arc, action="append",
                        help="alpha:beta, angles may use pi (repeatable)")
    common.add_argument("--grid-factor", type=int, default=8)
    common.add_argument("--log-base", type=_log_base, default=math.e)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rudin-shapiro", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write the coefficient file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", parents=[common], help="evaluate P, Q, R at angles")
    p.add_argument("--t", type=_angle, action="append")
    p.add_argument("--dump-grid", metavar="PATH")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run the circle identities")
    p.add_argument("--coeffs", metavar="PATH", help="check a coefficient file instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="certified zero count on an arc")
    p.add_argument("--refine", action="store_true")
    p.add_argument("--oracle", action="store_true", help="add the dense-scan count (k <= 8)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("proof-count", parents=[common], help="level k-2 sign construction")
    p.set_defaults(func=cmd_proof_count)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bounds")
    p.add_argument("--kind", choices=bounds_mod.KINDS, default="theorem21")
    p.add_argument("--m", type=int, help="degree parameter for lemma32 / theorem11")
    p.add_argument("--H", type=float)
    p.add_argument("--clamp", action="store_true", help="show negative lower bounds as 0")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("roots", parents=[common], help="roots and angular counts")
    p.add_argument("--which", choices=("P", "Q"), default="P")
    p.add_argument("--poly", help="comma-separated coefficients, constant term first")
    p.add_argument("--constant", choices=sorted(bounds_mod.CONSTANTS), default="sound8pi")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("campaign", parents=[common], help="bound sandwich sweep")
    p.add_argument("--arcs", help="comma list of full | random:COUNT:SEED | alpha:beta")
    p.add_argument("--oracle-samples", type=int, default=10**6)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, RudinShapiroError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
