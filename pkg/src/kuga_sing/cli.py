"""Batch front end.

Reports go to ``--out`` (or stdout) as a single JSON or CSV document;
progress messages go to stderr.  Exit status: 0 success, 1 verification
failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import asymptotics, cones, cusp_tables, harness
from .cyclic_rep import HodgeSplitting, RepError, enumerate_splittings, parse_angle, parse_rep
from .reid_tai import classify, scan

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"2..6"`` -> ``(2, 6)``; ``"3"`` -> ``(3, 3)``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected A..B") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _log(msg: str):
    print(msg, file=sys.stderr)


def _emit(payload, rows, args) -> str:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        return buf.getvalue()
    return json.dumps(payload, indent=2) + "\n"


# each command returns (status, payload, csv rows)

def cmd_rt_scan(args):
    (g0, g1), (n0, n1) = args.g, args.n
    if g0 < 2 or n0 < 1:
        raise UsageError("need g >= 2 and n >= 1")
    _log(f"scanning g={g0}..{g1}, n={n0}..{n1}")
    res = scan(g0, g1, n0, n1, workers=args.workers)
    payload = {"g": [g0, g1], "n": [n0, n1], **res.to_dict()}
    rows = [["g", "n", "rep", "v_angles", "rt", "canonical", "quasi_reflection"]]
    rows += [[c.g, c.n, c.rep.label, " ".join(c.splitting.labels()), str(c.rt),
              c.is_canonical_cert, c.is_quasi_reflection] for c in res.exceptional]
    return (EXIT_FAIL if res.quasi_reflections else EXIT_OK), payload, rows


def cmd_rt_check(args):
    try:
        rep = parse_rep(args.rep)
    except RepError as e:
        raise UsageError(str(e)) from None
    g = rep.g if args.g is None else args.g
    if g != rep.g:
        raise UsageError(f"--g {g} does not match {rep.label} (g={rep.g})")
    if args.splitting:
        sp = HodgeSplitting(tuple(parse_angle(a) for a in args.splitting.split(",")))
        if not sp.is_compatible_with(rep):
            raise UsageError(f"{sp} is not a Hodge half of {rep.label}")
        splittings = [sp]
    else:
        splittings = enumerate_splittings(rep)
    cases = [classify(g, args.n, rep, sp) for sp in splittings]
    worst = min(cases, key=lambda c: c.rt)
    payload = {
        "rep": rep.label,
        "g": g,
        "n": args.n,
        "rt": str(worst.rt),
        "v_angles": worst.splitting.labels(),
        "canonical": all(c.is_canonical_cert for c in cases),
        "cases": [c.to_dict() for c in cases],
    }
    rows = [["g", "n", "rep", "v_angles", "rt", "canonical", "quasi_reflection"]]
    rows += [[c.g, c.n, c.rep.label, " ".join(c.splitting.labels()), str(c.rt),
              c.is_canonical_cert, c.is_quasi_reflection] for c in cases]
    return EXIT_OK, payload, rows


def cmd_symplectic_verify(args):
    _log(f"checking transvection relations on {args.trials} instances, seed {args.seed}")
    rep = harness.symplectic_trials(args.seed, args.trials, tuple(args.g))
    payload = {"seed": args.seed, "g": args.g, **rep.to_dict()}
    rows = [["trials", "failures"], [rep.trials, len(rep.failures)]]
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, rows


def cmd_siegel_verify(args):
    _log(f"checking Siegel identities on {args.trials} points, seed {args.seed}")
    rep = harness.siegel_trials(tuple(args.g), args.trials, args.seed, args.tol)
    payload = {"seed": args.seed, "g": args.g, "tol": args.tol, **rep.to_dict()}
    rows = [["trials", "failures", "max_error"], [rep.trials, len(rep.failures), repr(rep.max_error)]]
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, rows


def _asym_rows(points):
    rows = [["eps", "integral", "class", "fitted_exponent"]]
    for eps, val, kind, exp in points:
        rows.append([repr(float(eps)), repr(float(val)), kind, "" if exp is None else repr(float(exp))])
    return rows


def cmd_asymptotics(args):
    if args.model == "flow":
        Q = cones.QuadForm.from_coords(args.form)
        P = np.eye(Q.g_prime) if args.im_omega0 is None else \
            np.array(cones.QuadForm.from_coords(args.im_omega0).matrix(), dtype=float)
        t = np.logspace(0, math.log10(args.t_max), 61)
        Qm = np.array(Q.matrix(), dtype=float)
        try:
            exp = asymptotics.petersson_flow_exponent(P, Qm, t)
        except ValueError as e:
            raise UsageError(str(e)) from None
        _, rank = cones.cone_membership(Q)
        ok = abs(exp - rank) <= 0.05
        payload = {"model": "flow", "form": list(Q.coords), "rank": rank, "fitted_exponent": exp, "ok": ok}
        # eps plays the role of 1/t
        points = [(1 / ti, np.linalg.det(P + ti * Qm), "power", exp) for ti in t]
        return (EXIT_OK if ok else EXIT_FAIL), payload, _asym_rows(points)

    eps_grid = asymptotics.geometric_grid(count=args.points)
    if args.model == "boundary":
        if not 0 < args.R < 1:
            raise UsageError("--R must lie in (0, 1)")
        grid = [e for e in eps_grid if e < args.R]
        try:
            vals = [asymptotics.boundary_integral(args.a, e, args.R)[0] for e in grid]
        except ArithmeticError as e:
            return EXIT_FAIL, {"model": "boundary", "error": str(e)}, [["error"], [str(e)]]
        decay = [v * e**args.alpha for v, e in zip(vals, grid)]
        # growth is a power of log(1/eps); fit that power (a + 1) on the last decade
        tail = [i for i, e in enumerate(grid) if e <= 10 * grid[-1]]
        log_power = asymptotics.loglog_slope([-math.log(grid[i]) for i in tail], [vals[i] for i in tail]) \
            if len(tail) >= 2 else None
        payload = {
            "model": "boundary", "a": args.a, "R": args.R, "alpha": args.alpha,
            "log_power": log_power, "eps": grid, "integral": vals, "scaled": decay,
        }
        points = [(e, v, "logarithmic", log_power) for e, v in zip(grid, vals)]
        return EXIT_OK, payload, _asym_rows(points)

    # pole
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    try:
        cls = asymptotics.pole_model_classify(args.nu, args.m, eps_grid)
    except ArithmeticError as e:
        return EXIT_FAIL, {"model": "pole", "error": str(e)}, [["error"], [str(e)]]
    except ValueError as e:
        raise UsageError(str(e)) from None
    vals = [asymptotics.pole_integral_quad(args.nu, args.m, e) for e in eps_grid]
    payload = {"model": "pole", "nu": args.nu, "m": args.m, "class": cls.kind, "fitted_exponent": cls.exponent}
    points = [(e, v, cls.kind, cls.exponent) for e, v in zip(eps_grid, vals)]
    return EXIT_OK, payload, _asym_rows(points)


def cmd_cone_check(args):
    try:
        Q = cones.QuadForm.from_coords(args.form)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not any(Q.coords):
        raise UsageError("the zero form has no ray")
    where, rank = cones.cone_membership(Q)
    primitive = cones.is_primitive(Q)
    payload = {
        "form": list(Q.coords),
        "g_prime": Q.g_prime,
        "membership": where.value,
        "rank": rank,
        "primitive": primitive,
        "dual_character": cones.dual_character(Q).to_list() if primitive else None,
    }
    if args.chi is not None:
        chi = cones.Character(tuple(args.chi))
        try:
            payload["pairing"] = chi.pair(Q)
        except ValueError as e:
            raise UsageError(str(e)) from None
        payload["extension"] = cones.character_extends(chi, Q).value
    rows = [list(payload.keys()), [json.dumps(v) if isinstance(v, list) else v for v in payload.values()]]
    return EXIT_OK, payload, rows


def cmd_tables(args):
    g0, g1 = args.g
    if g0 < 2 or g1 > 6:
        raise UsageError("the cusp-form table covers g = 2..6")
    rows_json = []
    ok = True
    for g in range(g0, g1 + 1):
        f = cusp_tables.CUSP_FACTS[g]
        consistent = cusp_tables.weight_of(g, f.min_n, 1) == f.weight
        ok &= consistent
        rows_json.append({
            "g": g, "min_cusp_weight": f.weight, "dim_at_min": f.dim,
            "dim_is_lower_bound": f.dim_is_lower_bound, "is_minimal_weight": f.is_minimal_weight,
            "min_n": f.min_n, "kodaira": f.kodaira, "consistent": consistent, "source": f.source,
        })
    rows = [list(rows_json[0].keys())] + [list(r.values()) for r in rows_json]
    return (EXIT_OK if ok else EXIT_FAIL), {"tables": rows_json}, rows


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="report file (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    p = argparse.ArgumentParser(prog="kuga-sing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rt-scan", parents=[common], help="exhaustive Reid-Tai scan")
    s.add_argument("--g", type=parse_range, default=(2, 6))
    s.add_argument("--n", type=parse_range, default=(1, 4))
    s.add_argument("--workers", type=int, default=None, help="processes (default: KUGA_SING_THREADS or 1)")
    s.set_defaults(func=cmd_rt_scan)

    s = sub.add_parser("rt-check", parents=[common], help="Reid-Tai sums of one representation")
    s.add_argument("--rep", required=True, help='label such as "V6+V1^2"')
    s.add_argument("--g", type=int, default=None)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--splitting", help='comma-separated angles, e.g. "1/6,0"; default: all')
    s.set_defaults(func=cmd_rt_check)

    s = sub.add_parser("symplectic-verify", parents=[common], help="transvection relations on random instances")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--g", type=parse_int_list, default=[2, 3])
    s.set_defaults(func=cmd_symplectic_verify)

    s = sub.add_parser("siegel-verify", parents=[common], help="cocycle and metric invariance on random points")
    s.add_argument("--g", type=parse_int_list, default=[2, 3])
    s.add_argument("--trials", type=int, default=500)
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_siegel_verify)

    s = sub.add_parser("asymptotics", parents=[common], help="boundary growth models")
    s.add_argument("--model", choices=("flow", "boundary", "pole"), required=True)
    s.add_argument("--form", type=parse_int_list, default=[1, 0, 0], help="flow: Q as upper-triangle list")
    s.add_argument("--im-omega0", type=parse_int_list, default=None, help="flow: Im Ω_0 as upper-triangle list")
    s.add_argument("--t-max", type=float, default=1e6)
    s.add_argument("--a", type=float, default=1.0, help="boundary: log exponent")
    s.add_argument("--alpha", type=float, default=0.5, help="boundary: decay exponent")
    s.add_argument("--R", type=float, default=0.5)
    s.add_argument("--nu", type=int, default=1, help="pole: pole order")
    s.add_argument("--m", type=int, default=1, help="pole: m of the m-canonical form")
    s.add_argument("--points", type=int, default=40)
    s.set_defaults(func=cmd_asymptotics)

    s = sub.add_parser("cone-check", parents=[common], help="cone membership, primitivity and dual character of a form")
    s.add_argument("--form", type=parse_int_list, required=True)
    s.add_argument("--chi", type=parse_int_list, default=None)
    s.set_defaults(func=cmd_cone_check)

    s = sub.add_parser("tables", parents=[common], help="cusp-form weight table")
    s.add_argument("--g", type=parse_range, default=(2, 6))
    s.set_defaults(func=cmd_tables)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        status, payload, rows = args.func(args)
    except UsageError as e:
        _log(f"kuga-sing: error: {e}")
        return EXIT_USAGE
    text = _emit(payload, rows, args)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _log(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
