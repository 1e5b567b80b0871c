"""Command-line front end.

    duorat approx single|duo
    duorat hyperbola solve|min|lift|coverage|classify
    duorat sums et|s1s2|drprofile|thm7
    duorat chars table|ortho|count|pv
    duorat lab conj0|conj2|conj3|thm4

Exit status: 0 on success, 2 on a usage error, 3 when a computation refuses
its input (guards, coprimality, preconditions); in that case a JSON error
object is written to stdout.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from . import characters as ch
from . import duo, harmonic, hyperbola as hb, lab, single
from .arith import as_rational, fmt_rational, primes_in_range
from .errors import DuoratError

EXIT_USAGE = 2
EXIT_COMPUTE = 3

# fixed CSV columns per subcommand
CSV_COLUMNS = {
    ("approx", "single"): ["alpha", "N", "method", "a", "q", "error"],
    ("approx", "duo"): ["alpha", "N", "method", "a1", "q1", "a2", "q2", "error"],
    ("hyperbola", "solve"): ["x", "y"],
    ("hyperbola", "min"): ["q", "c", "x", "y", "max", "exponent"],
    ("hyperbola", "lift"): ["q", "c", "found", "k", "x", "y"],
    ("hyperbola", "coverage"): ["modulus", "covered", "fraction"],
    ("hyperbola", "classify"): ["a", "q", "N", "good", "q1", "q2"],
    ("sums", "et"): ["J", "L", "hypothesis_ok", "lhs", "rhs", "holds"],
    ("sums", "s1s2"): ["q", "a", "N", "L", "P_size", "S1", "S2", "threshold", "passes"],
    ("sums", "drprofile"): ["d", "count"],
    ("sums", "thm7"): ["q", "N", "L", "T_exact", "cap"],
    ("chars", "table"): ["index", "exponents"],
    ("chars", "ortho"): ["q", "phi", "max_deviation", "tolerance", "holds"],
    ("chars", "count"): ["q", "a", "N", "B", "P_size", "direct", "via_characters", "main_term", "discrepancy"],
    ("chars", "pv"): ["q", "chi", "max_partial", "pv_bound", "glh_shape", "glh_ratio", "holds"],
    ("lab", "conj0"): ["alpha", "N", "beta", "a1", "q1", "a2", "q2", "error", "ratio"],
    ("lab", "conj2"): ["q", "c", "x", "y", "max", "exponent"],
    ("lab", "conj3"): ["q", "c", "N", "holds", "x", "y"],
    ("lab", "thm4"): ["a", "q"],
}


# ---------------------------------------------------------------------------
# serialisation


def jsonable(obj):
    """Exact rationals become "p/q" strings, reals keep 12 significant digits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return str(x)
        return float(f"{x:.12g}")
    if isinstance(obj, np.bool_):
        return bool(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def render(doc: dict, rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(jsonable(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow(["" if r.get(c) is None else jsonable(r.get(c)) for c in columns])
        return buf.getvalue()
    lines = []
    for k, v in jsonable(doc).items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument types


def alpha_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def box_arg(text: str) -> hb.Box:
    try:
        return hb.Box.parse(text)
    except (ValueError, DuoratError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def points_arg(text: str) -> list[Fraction]:
    return [alpha_arg(p) for p in text.split(",") if p.strip()]


# ---------------------------------------------------------------------------
# handlers: each returns (document, csv rows)


def _single_row(alpha, N, method, s):
    return {"alpha": alpha, "N": N, "method": method, "a": s.a, "q": s.q, "error": s.error}


def cmd_approx_single(a):
    s = single.best_single(a.alpha, a.n) if a.best else single.dirichlet_approx(a.alpha, a.n)
    row = _single_row(a.alpha, a.n, "best" if a.best else "dirichlet", s)
    doc = dict(row, bound=Fraction(1, s.q * a.n), holds=s.error * s.q * a.n <= 1)
    return doc, [row]


def _duo_row(alpha, N, d: duo.DuoApprox) -> dict:
    return {"alpha": alpha, "N": N, "method": d.method, "a1": d.a1, "q1": d.q1, "a2": d.a2, "q2": d.q2, "error": d.error}


def cmd_approx_duo(a):
    s = single.dirichlet_approx(a.alpha, a.n * a.n)
    if a.oracle:
        res = duo.brute_best_duo(a.alpha, a.n, distinct_primes=a.distinct_primes)
        trace, cands = None, {}
    else:
        out = duo.duo_from_reduction(a.alpha, a.n, a.r_max, distinct_primes=a.distinct_primes)
        res, trace, cands = out.result, out.trace, out.candidates
    row = _duo_row(a.alpha, a.n, res)
    eps = float(a.epsilon)
    doc = dict(row)
    doc["single"] = {"a": s.a, "q": s.q, "error": s.error}
    doc["trace"] = trace
    doc["candidates"] = {k: _duo_row(a.alpha, a.n, v) for k, v in sorted(cands.items())}
    doc["conj1_ratio"] = float(res.error) * s.q * a.n ** (2 - eps)
    doc["epsilon"] = a.epsilon
    return doc, [row]


def cmd_hyp_solve(a):
    inst = hb.HyperbolaInstance(a.q, a.c)
    box = a.box or hb.Box.square(1, max(1, a.q - 1))
    sols = hb.solutions_in_box(inst, box, a.coprime)
    rows = [{"x": s.x, "y": s.y} for s in sols]
    doc = {"q": a.q, "c": a.c, "box": box, "coprime": a.coprime, "count": len(sols), "solutions": [[s.x, s.y] for s in sols]}
    return doc, rows


def cmd_hyp_min(a):
    r = hb.smallest_max_solution(hb.HyperbolaInstance(a.q, a.c))
    row = {"q": a.q, "c": a.c, "x": r.sol.x, "y": r.sol.y, "max": r.sol.max, "exponent": r.exponent}
    return row, [row]


def cmd_hyp_lift(a):
    inst = hb.HyperbolaInstance(a.q, a.c)
    box = a.box or hb.Box.square(1, max(1, a.q - 1))
    k_max = a.k_max if a.k_max is not None else a.q - 1
    hit = next(hb.iter_lift_solutions(inst, box, k_max, a.coprime), None)
    row = {"q": a.q, "c": a.c, "found": hit is not None, "k": None, "x": None, "y": None}
    if hit is not None:
        row.update(k=hit[0], x=hit[1].x, y=hit[1].y)
    return dict(row, box=box, k_max=k_max), [row]


def cmd_hyp_coverage(a):
    box = a.box or hb.Box.square(1, a.q)
    cov = hb.coverage_count(a.q, (box.x_lo, box.x_hi), (box.y_lo, box.y_hi), a.coprime)
    row = {"modulus": a.q, "covered": cov.covered, "fraction": cov.fraction}
    return dict(row, box=box, coprime=a.coprime), [row]


def cmd_hyp_classify(a):
    r = hb.classify_interval(a.a, a.q, a.n)
    row = {"a": a.a, "q": a.q, "N": a.n, "good": r.good, "q1": r.witness[0] if r.good else None, "q2": r.witness[1] if r.good else None}
    return row, [row]


def cmd_sums_et(a):
    r = harmonic.et_inequality(a.points, a.l)
    row = {"J": len(a.points), "L": a.l, "hypothesis_ok": r.hypothesis_ok, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}
    return row, [row]


def _resolve_L(a) -> int:
    if a.l is not None:
        return a.l
    return harmonic.default_L(a.q, a.n, float(a.phi), float(a.epsilon))


def cmd_sums_s1s2(a):
    L = _resolve_L(a)
    r = harmonic.s_sums_thm6(a.q, a.a, a.n, L)
    row = {"q": a.q, "a": a.a, "N": a.n, "L": L, "P_size": r.P_size, "S1": r.S1, "S2": r.S2, "threshold": r.threshold, "passes": r.passes}
    return row, [row]


def cmd_sums_drprofile(a):
    L = a.l if a.l is not None else a.n * a.n
    P = primes_in_range(Fraction(a.n, 2), a.n)
    prof = harmonic.d_r_profile(L, P, a.n)
    hist = prof.histogram()
    rows = [{"d": d, "count": c} for d, c in hist.items()]
    doc = {"N": a.n, "L": L, "P": P, "max_d": prof.max_d, "bound_checked": prof.bound_checked, "bound_holds": prof.bound_holds, "histogram": hist}
    return doc, rows


def cmd_sums_thm7(a):
    r = harmonic.s1_bound_thm7(a.q, a.n, a.l)
    row = {"q": a.q, "N": a.n, "L": a.l, "T_exact": r.T_exact, "cap": r.cap}
    return row, [row]


def cmd_chars_table(a):
    t = ch.character_table(a.q)
    chars = t.characters()
    rows = [{"index": i, "exponents": " ".join(map(str, v))} for i, v in enumerate(chars)]
    doc = {"q": a.q, "phi": t.phi, "generators": [list(g) for g in t.generators], "characters": chars}
    return doc, rows


ORTHO_TOL = 1e-9


def cmd_chars_ortho(a):
    dev = ch.orthogonality_check(a.q)
    phi = ch.character_table(a.q).phi
    tol = ORTHO_TOL * phi
    row = {"q": a.q, "phi": phi, "max_deviation": dev, "tolerance": tol, "holds": dev <= tol}
    return row, [row]


def cmd_chars_count(a):
    P = [p for p in primes_in_range(Fraction(a.n, 2), a.n) if math.gcd(p, a.q) == 1]
    r = ch.solution_count_via_characters(a.q, a.a, P, a.b)
    row = {"q": a.q, "a": a.a, "N": a.n, "B": a.b, "P_size": len(P), "direct": r.direct, "via_characters": r.via_characters, "main_term": r.main_term, "discrepancy": r.discrepancy}
    return row, [row]


def cmd_chars_pv(a):
    r = ch.char_sum_max(a.q, a.chi)
    row = {"q": a.q, "chi": a.chi, "max_partial": r.max_partial, "pv_bound": r.pv_bound, "glh_shape": r.glh_shape, "glh_ratio": r.glh_ratio, "holds": r.holds}
    return row, [row]


def cmd_lab_conj0(a):
    if a.alpha:
        alphas = list(a.alpha)
    else:
        alphas = lab.sample_alphas(a.samples, a.seed)
    rep = lab.conj0_sweep(alphas, a.n, a.beta, jobs=a.jobs)
    rep.params["seed"] = a.seed
    return rep.to_dict(), rep.rows


def cmd_lab_conj2(a):
    rep = lab.conj2_sweep(a.q_lo, a.q_hi, jobs=a.jobs)
    return rep.to_dict(), rep.rows


def cmd_lab_conj3(a):
    if a.q_hi is not None:
        rep = lab.conj3_sweep(a.q_lo if a.q_lo is not None else 2, a.q_hi, a.theta, a.C, jobs=a.jobs)
        return rep.to_dict(), rep.rows
    if a.q is None or a.c is None or a.n is None:
        raise SystemExit(_usage("lab conj3 needs --q --c --n, or --q-hi for a sweep"))
    r = lab.conj3_check(a.q, a.c, a.theta, a.C, a.n)
    row = {"q": a.q, "c": a.c, "N": a.n, "holds": r.holds, "x": r.witness.x if r.witness else None, "y": r.witness.y if r.witness else None}
    return dict(row, box=r.box), [row]


def cmd_lab_thm4(a):
    r = lab.thm4_bad_measure(a.n, a.epsilon, a.q_cap, jobs=a.jobs)
    rows = [{"a": x, "q": q} for x, q in r.bad_pairs]
    doc = {
        "N": a.n,
        "epsilon": a.epsilon,
        "q_cap": a.q_cap,
        "bad_count": len(r.bad_pairs),
        "bad_weight": r.bad_weight,
        "bad_measure": r.bad_measure,
        "reference": r.reference,
        "bad_pairs": [list(p) for p in r.bad_pairs],
    }
    return doc, rows


def _usage(msg: str) -> int:
    print(f"duorat: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="duorat", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, fn, help_=None):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    g = groups.add_parser("approx", help="single and two-fraction approximation").add_subparsers(dest="cmd", required=True)
    sp = leaf(g, "single", cmd_approx_single)
    sp.add_argument("--alpha", type=alpha_arg, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--best", action="store_true", help="exhaustive best a/q instead of the convergent")
    sp = leaf(g, "duo", cmd_approx_duo)
    sp.add_argument("--alpha", type=alpha_arg, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r-max", type=int, default=None)
    sp.add_argument("--distinct-primes", action="store_true")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--epsilon", type=alpha_arg, default=Fraction(0))

    g = groups.add_parser("hyperbola", help="x*y = c (mod q)").add_subparsers(dest="cmd", required=True)
    for name, fn in [("solve", cmd_hyp_solve), ("min", cmd_hyp_min), ("lift", cmd_hyp_lift), ("coverage", cmd_hyp_coverage), ("classify", cmd_hyp_classify)]:
        sp = leaf(g, name, fn)
        sp.add_argument("--q", type=int, required=True)
        if name in ("solve", "min", "lift"):
            sp.add_argument("--c", type=int, required=True)
        if name in ("solve", "lift", "coverage"):
            sp.add_argument("--box", type=box_arg, default=None, help="xlo,xhi,ylo,yhi")
            sp.add_argument("--coprime", action="store_true")
        if name == "lift":
            sp.add_argument("--k-max", type=int, default=None)
        if name == "classify":
            sp.add_argument("--a", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)

    g = groups.add_parser("sums", help="exponential sums").add_subparsers(dest="cmd", required=True)
    sp = leaf(g, "et", cmd_sums_et)
    sp.add_argument("--points", type=points_arg, required=True, help="comma-separated rationals")
    sp.add_argument("--l", type=int, required=True)
    sp = leaf(g, "s1s2", cmd_sums_s1s2)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--phi", type=alpha_arg, default=Fraction(5, 4))
    sp.add_argument("--epsilon", type=alpha_arg, default=Fraction(1, 10))
    sp = leaf(g, "drprofile", cmd_sums_drprofile)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, default=None, help="defaults to N^2")
    sp = leaf(g, "thm7", cmd_sums_thm7)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)

    g = groups.add_parser("chars", help="Dirichlet characters").add_subparsers(dest="cmd", required=True)
    for name, fn in [("table", cmd_chars_table), ("ortho", cmd_chars_ortho), ("count", cmd_chars_count), ("pv", cmd_chars_pv)]:
        sp = leaf(g, name, fn)
        sp.add_argument("--q", type=int, required=True)
        if name == "count":
            sp.add_argument("--a", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--b", type=int, required=True)
        if name == "pv":
            sp.add_argument("--chi", type=int, required=True)

    g = groups.add_parser("lab", help="evidence sweeps").add_subparsers(dest="cmd", required=True)
    sp = leaf(g, "conj0", cmd_lab_conj0)
    sp.add_argument("--alpha", type=alpha_arg, action="append", default=None)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--n", type=int, action="append", required=True)
    sp.add_argument("--beta", type=alpha_arg, required=True)
    sp = leaf(g, "conj2", cmd_lab_conj2)
    sp.add_argument("--q-lo", type=int, required=True)
    sp.add_argument("--q-hi", type=int, required=True)
    sp = leaf(g, "conj3", cmd_lab_conj3)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--c", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--q-lo", type=int, default=None)
    sp.add_argument("--q-hi", type=int, default=None)
    sp.add_argument("--theta", type=alpha_arg, default=Fraction(1))
    sp.add_argument("--C", type=alpha_arg, default=Fraction(1))
    sp = leaf(g, "thm4", cmd_lab_thm4)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--epsilon", type=alpha_arg, required=True)
    sp.add_argument("--q-cap", type=int, required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    if args.jobs < 1:
        return _usage("--jobs must be >= 1")
    try:
        doc, rows = args.func(args)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except DuoratError as exc:
        print(json.dumps({"error": exc.to_dict()}, indent=2))
        print(f"duorat: {exc.kind}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    text = render(doc, rows, CSV_COLUMNS[(args.group, args.cmd)], args.format)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
