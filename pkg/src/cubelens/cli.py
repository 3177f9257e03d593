"""cubelens command line.

Every subcommand prints records (JSON lines by default, or CSV / a table).
Big integers are written as decimal strings.

Exit codes: 0 success, 1 property violated (witness printed), 2 usage
error, 3 unresolved precision comparison under --strict-precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import cube_sets, divisor_windows, l4_analysis, pell, primes
from .exact_arith import DEFAULT_PRECISION_CAP, isqrt

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_UNRESOLVED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _natural(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return n


def _positive(text):
    n = _natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return n


def _ratio(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _cap(text):
    n = _positive(text)
    if n < 128:
        raise argparse.ArgumentTypeError("precision cap must be >= 128 bits")
    return n


def _default_cap():
    env = os.environ.get("CUBELENS_PRECISION_CAP")
    return _cap(env) if env else DEFAULT_PRECISION_CAP


def _s(x):
    return str(x)


# ---------------------------------------------------------------- commands

def _set_from(args):
    if args.values is not None:
        try:
            vals = [int(v) for v in args.values.split(",") if v.strip()]
        except ValueError:
            raise UsageError("--values must be a comma-separated list of integers")
        if len(set(vals)) != len(vals):
            raise UsageError("--values contains duplicates")
        return sorted(vals)
    if args.start is None or args.len is None:
        raise UsageError("give either --start/--len or --values")
    return cube_sets.CubeInterval(args.start, args.len).elements()


def cmd_elements(args):
    A = cube_sets.CubeInterval(args.start, args.len).elements()
    return [{"N": _s(args.start), "k": _s(args.len), "elements": [_s(a) for a in A]}], 0


def cmd_rep(args):
    A = _set_from(args)
    return [{"m": _s(args.m), "ordered": cube_sets.rep_ordered(A, args.m),
             "unordered": cube_sets.rep_unordered(A, args.m)}], 0


def cmd_maxrep(args):
    prof = cube_sets.rep_profile(_set_from(args), workers=args.workers)
    m, r = prof.max_rep
    return [{"m": _s(m), "r": r}], 0


def cmd_energy(args):
    A = _set_from(args)
    prof = cube_sets.rep_profile(A, workers=args.workers)
    return [{"size": len(A), "energy": _s(prof.energy),
             "energy_if_sidon": _s(2 * len(A) ** 2 - len(A))}], 0


def _witness(w):
    return [_s(x) for x in w] if w else None


def cmd_sidon_check(args):
    res = cube_sets.is_sidon(_set_from(args), workers=args.workers)
    rec = {"is_sidon": res.is_sidon}
    if not res.is_sidon:
        rec["witness"] = _witness(res.witness)
    return [rec], 0 if res.is_sidon else EXIT_VIOLATED


def cmd_sidon_threshold(args):
    k = cube_sets.sidon_threshold(args.start, args.k_max)
    return [{"N": _s(args.start), "k_max": _s(args.k_max),
             "threshold": None if k is None else _s(k),
             "isqrt_half_N": _s(isqrt(args.start // 2))}], 0


def _poly(args):
    text = args.poly
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return l4_analysis.CoeffPoly.from_json(text)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad polynomial JSON: {exc}")


def cmd_l4(args):
    f = _poly(args)
    rec = {"l2_sq": _s(l4_analysis.l2_sq(f)), "l4_4": _s(l4_analysis.l4_fourth(f))}
    rec["ratio"] = l4_analysis.ratio_l4_l2(f) if f else None
    return [rec], 0


def cmd_lemma21(args):
    rep = l4_analysis.lemma21_check(_poly(args))
    return [{"l2_sq": _s(rep.l2_sq), "l4_4": _s(rep.l4_4), "max_rep": rep.max_rep,
             "bound_rhs": _s(rep.bound_rhs), "holds": rep.holds}], \
        0 if rep.holds else EXIT_VIOLATED


def cmd_factor(args):
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    fs = primes.factor(args.m)
    return [{"m": _s(args.m), "factors": [f"{p}^{e}" for p, e in fs]}], 0


def cmd_divisors(args):
    if args.m < 1 or args.lo > args.hi:
        raise UsageError("need m >= 1 and lo <= hi")
    ds = divisor_windows.divisors_in(args.m, args.lo, args.hi)
    return [{"m": _s(args.m), "lo": _s(args.lo), "hi": _s(args.hi), "count": len(ds),
             "divisors": [_s(d) for d in ds]}], 0


def _window_record(w):
    return {"m": _s(w.m), "lo": w.lo_desc, "hi": w.hi_desc, "count": w.count,
            "divisors": [_s(d) for d in w.divisors], "unresolved": w.unresolved}


def cmd_divwindow_cuberoot(args):
    w = divisor_windows.window_count_below_cuberoot(args.M, args.delta, args.symmetric)
    return [_window_record(w)], 0


def cmd_divwindow_exp(args):
    w = divisor_windows.window_count_exponent(args.m, args.alpha, args.beta,
                                              args.precision_cap)
    return [_window_record(w)], _unresolved_code(args, w.unresolved)


def _unresolved_code(args, unresolved):
    return EXIT_UNRESOLVED if args.strict_precision and unresolved else 0


def _scan_summary(r):
    return {"event": "summary", "m_from": _s(r.m_from), "m_to": _s(r.m_to),
            "alpha": _s(r.alpha), "beta": _s(r.beta), "regime": r.regime,
            "max_count": r.max_count,
            "argmax_m": None if r.argmax_m is None else _s(r.argmax_m),
            "histogram": {_s(c): n for c, n in r.histogram.items()},
            "maxima": [[_s(m), c] for m, c in r.maxima],
            "unresolved": r.unresolved}


def _scan_records(r, fmt):
    recs = []
    if fmt == "json":
        recs = [{"event": "max", "m": _s(m), "count": c} for m, c in r.maxima]
    return recs + [_scan_summary(r)]


def cmd_thm22_scan(args):
    m_to = args.m_to if args.m_to is not None else args.m_max
    if m_to is None:
        raise UsageError("give --m-max or --m-to")
    r = divisor_windows.thm22_scan(m_to, args.alpha, args.beta, m_from=args.m_from,
                                   workers=args.workers, precision_cap=args.precision_cap)
    return _scan_records(r, args.format), _unresolved_code(args, r.unresolved)


def _summary_to_scan(rec):
    return divisor_windows.ScanResult(
        int(rec["m_from"]), int(rec["m_to"]), Fraction(rec["alpha"]), Fraction(rec["beta"]),
        rec["max_count"], None if rec["argmax_m"] is None else int(rec["argmax_m"]),
        {int(c): n for c, n in rec["histogram"].items()}, rec.get("unresolved", 0),
        [(int(m), c) for m, c in rec.get("maxima", [])])


def cmd_merge(args):
    parts = []
    for path in args.files:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if rec.get("event") == "summary":
                    parts.append(_summary_to_scan(rec))
    if not parts:
        raise UsageError("no scan summaries found in the given files")
    r = divisor_windows.merge_scans(parts)
    return _scan_records(r, args.format), _unresolved_code(args, r.unresolved)


def cmd_repbound_check(args):
    rep = divisor_windows.rep_bound_check(args.start, args.len, symmetric=args.symmetric,
                                          workers=args.workers)
    rec = {"N": _s(rep.N), "k": _s(rep.k), "delta": _s(rep.delta),
           "symmetric": rep.symmetric, "sums_checked": rep.sums_checked,
           "max_ratio": _s(rep.max_ratio),
           "argmax_ratio": None if rep.argmax_ratio is None else _s(rep.argmax_ratio),
           "violations": [[_s(m), r, c] for m, r, c in rep.violations],
           "reconstruction_failures": [_s(m) for m in rep.reconstruction_failures]}
    return [rec], 0 if rep.ok else EXIT_VIOLATED


def _pell_record(sol):
    return {"k": sol.k, "X": _s(sol.X), "Y": _s(sol.Y)}


def cmd_pell(args):
    return [_pell_record(s) for s in pell.pell_family(args.count)], 0


def _quad_record(sol, q):
    rec = _pell_record(sol)
    rec.update({"u": [_s(x) for x in q.u], "v": _s(q.v), "N": _s(q.N), "U": _s(q.U)})
    return rec


def cmd_quadruple(args):
    sol = pell.pell_solution(args.k)
    return [_quad_record(sol, pell.quadruple(sol))], 0


def cmd_sharpness(args):
    if args.k < 1:
        raise UsageError("sharpness needs --k >= 1 (N is negative at k = 0)")
    rep = pell.sharpness_report(pell.pell_solution(args.k))
    return [{"k": rep.k, "N": _s(rep.N), "spread": _s(rep.spread), "ratio": rep.ratio}], 0


def cmd_verify_family(args):
    try:
        rows = pell.verify_family(args.count)
    except pell.InvariantError as exc:
        return [{"ok": False, "error": str(exc)}], EXIT_VIOLATED
    out = []
    for row in rows:
        rec = _quad_record(row.solution, row.quadruple)
        rec["ratio"] = row.sharpness.ratio if row.sharpness else None
        rec["witness"] = _witness(row.witness)
        out.append(rec)
    return out, 0


# ---------------------------------------------------------------- output

def _cell(v):
    if isinstance(v, list):
        return ";".join(":".join(map(_cell, x)) if isinstance(x, list) else _cell(x)
                        for x in v)
    if isinstance(v, dict):
        return ";".join(f"{k}:{_cell(x)}" for k, x in v.items())
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(records, fmt):
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records)
    keys = []
    for r in records:
        keys.extend(k for k in r if k not in keys)
    rows = [[_cell(r.get(k)) for k in keys] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max([len(k)] + [len(row[i]) for row in rows]) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--precision-cap", type=_cap, default=None,
                        help="bits (default 4096, or $CUBELENS_PRECISION_CAP)")
    common.add_argument("--output", "-o", default=None)
    common.add_argument("--strict-precision", action="store_true",
                        help="exit 3 on any unresolved endpoint comparison")

    parser = argparse.ArgumentParser(prog="cubelens", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    def interval(p, required=True):
        p.add_argument("--start", type=_positive, required=required, help="N")
        p.add_argument("--len", type=_natural, required=required, help="k")

    def set_source(p):
        interval(p, required=False)
        p.add_argument("--values", help="explicit comma-separated set instead")

    interval(add("elements", cmd_elements, "list the cubes n^3, N <= n <= N+k"))
    p = add("rep", cmd_rep, "ordered / unordered representation count of m")
    set_source(p)
    p.add_argument("--m", type=_natural, required=True)
    set_source(add("maxrep", cmd_maxrep, "max ordered representation count"))
    set_source(add("energy", cmd_energy, "additive energy"))
    set_source(add("sidon-check", cmd_sidon_check, "Sidon test with witness"))
    p = add("sidon-threshold", cmd_sidon_threshold, "smallest non-Sidon length k")
    p.add_argument("--start", type=_positive, required=True)
    p.add_argument("--k-max", type=_natural, required=True)

    for name, fn, h in (("l4", cmd_l4, "exact L2^2 and L4^4"),
                        ("lemma21", cmd_lemma21, "L4^4 <= max r(m) * (L2^2)^2 check")):
        p = add(name, fn, h)
        p.add_argument("--poly", required=True,
                       help='JSON {"terms": [{"n": ..., "re": ..., "im": ...}]} or @file')

    add("factor", cmd_factor, "prime factorization").add_argument(
        "--m", type=_positive, required=True)
    p = add("divisors", cmd_divisors, "divisors of m in [lo, hi]")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--lo", type=_natural, required=True)
    p.add_argument("--hi", type=_natural, required=True)
    p = add("divwindow-cuberoot", cmd_divwindow_cuberoot,
            "divisors of M in [M^(1/3) - delta, M^(1/3)]")
    p.add_argument("--M", type=_positive, required=True)
    p.add_argument("--delta", type=_ratio, required=True)
    p.add_argument("--symmetric", action="store_true")
    p = add("divwindow-exp", cmd_divwindow_exp,
            "divisors of m in [m^alpha, m^alpha + m^beta]")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--alpha", type=_ratio, required=True)
    p.add_argument("--beta", type=_ratio, required=True)
    p = add("thm22-scan", cmd_thm22_scan, "max window count over a range of m")
    p.add_argument("--alpha", type=_ratio, required=True)
    p.add_argument("--beta", type=_ratio, required=True)
    p.add_argument("--m-max", type=_positive)
    p.add_argument("--m-from", type=_positive, default=2)
    p.add_argument("--m-to", type=_positive)
    p = add("merge", cmd_merge, "fold partial thm22-scan outputs (JSON lines files)")
    p.add_argument("files", nargs="+")
    p = add("repbound-check", cmd_repbound_check,
            "rep_unordered(m) <= divisors of 4m in the cube-root window")
    interval(p)
    p.add_argument("--symmetric", action="store_true")

    add("pell", cmd_pell, "solutions of 7X^2 + 114 = Y^2").add_argument(
        "--count", type=_positive, required=True)
    add("quadruple", cmd_quadruple, "equal sums of two cubes from solution k").add_argument(
        "--k", type=_natural, required=True)
    add("sharpness", cmd_sharpness, "interval width constant for solution k").add_argument(
        "--k", type=_natural, required=True)
    add("verify-family", cmd_verify_family, "check rows k = 0..count-1").add_argument(
        "--count", type=_positive, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.precision_cap is None:
        try:
            args.precision_cap = _default_cap()
        except argparse.ArgumentTypeError as exc:
            print(f"cubelens: CUBELENS_PRECISION_CAP: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        records, code = args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"cubelens {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(records, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
