"""Desk-scale sweeps producing evidence tables (conj0, conj2, conj3, thm4).

Rows are keyed by their input tuple and merged in sorted key order, so a
report does not depend on how many worker processes produced it.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import kernels
from ._config import check_span
from .arith import as_rational, as_real, fmt_rational
from .duo import DuoApprox, brute_best_duo
from .errors import NotCoprime, PreconditionViolated
from .hyperbola import Box, HyperbolaInstance, HyperbolaSolution, good_residue_table, iter_solutions

CONJ2_MAX_Q = 5000
ALPHA_MAX_DEN = 10**6


@dataclass
class SweepReport:
    name: str
    params: dict
    rows: list[dict]
    summary: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "params": self.params, "rows": self.rows, "summary": self.summary}


def summarize(rows: Sequence[dict], keys: Sequence[str]) -> dict:
    out = {}
    for k in keys:
        vals = [r[k] for r in rows if r.get(k) is not None]
        if vals:
            out[k] = {"min": min(vals), "max": max(vals), "mean": math.fsum(vals) / len(vals)}
    return out


def run_keyed(fn: Callable, items: Iterable, jobs: int = 1) -> list:
    """Map fn over items, optionally in worker processes, keeping input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def sample_alphas(count: int, seed: int, max_den: int = ALPHA_MAX_DEN) -> list[Fraction]:
    """Uniform rationals in [0, 1) with denominator <= max_den, reproducible from seed."""
    rng = np.random.default_rng(seed)
    dens = rng.integers(1, max_den + 1, size=count)
    out = []
    for d in dens.tolist():
        out.append(Fraction(int(rng.integers(0, d)), d))
    return out


# ---------------------------------------------------------------------------
# conj2: smallest max(x, y) over x*y = c (mod q)


def conj2_rows_for_q(q: int) -> list[dict]:
    bx, by = kernels.min_max_table(q)
    rows = []
    lq = math.log(q)
    for c in range(1, q):
        x = int(bx[c])
        if x == 0:
            continue
        y = int(by[c])
        m = max(x, y)
        rows.append({"q": q, "c": c, "x": x, "y": y, "max": m, "exponent": math.log(m) / lq})
    return rows


def conj2_sweep(q_lo: int, q_hi: int, jobs: int = 1) -> SweepReport:
    if q_lo < 2 or q_hi < q_lo:
        raise PreconditionViolated(f"need 2 <= q_lo <= q_hi, got {q_lo}, {q_hi}")
    if q_hi > CONJ2_MAX_Q:
        raise PreconditionViolated(f"conj2 sweep limited to q <= {CONJ2_MAX_Q}")
    per_q = run_keyed(conj2_rows_for_q, range(q_lo, q_hi + 1), jobs)
    rows = [r for block in per_q for r in block]
    worst = []
    for block in per_q:
        w = max(block, key=lambda r: (r["exponent"], -r["c"]))
        worst.append({"q": w["q"], "worst_c": w["c"], "worst_max": w["max"], "worst_exponent": w["exponent"]})
    summary = summarize(rows, ["exponent"])
    summary["worst_by_q"] = worst
    return SweepReport("conj2", {"q_lo": q_lo, "q_hi": q_hi}, rows, summary)


# ---------------------------------------------------------------------------
# conj3: coprime solutions in [C N, 2 C N]^2


@dataclass(frozen=True)
class Conj3Result:
    holds: bool
    witness: Optional[HyperbolaSolution]
    box: Box


def conj3_box(C, N: int) -> Optional[Box]:
    """[ceil(C N), floor(2 C N)]^2, or None when it holds no integer."""
    c = as_real(C)
    if c <= 0:
        raise PreconditionViolated("C must be positive")
    lo = math.ceil(c * N)
    hi = math.floor(2 * c * N)
    return Box.square(lo, hi) if hi >= lo else None


def conj3_check(q: int, c: int, theta, C, N: int) -> Conj3Result:
    th = float(as_real(theta))
    if not 0.5 < th <= 1:
        raise PreconditionViolated(f"theta must lie in (1/2, 1], got {theta}")
    if N < q**th:
        raise PreconditionViolated(f"N = {N} is below q^theta = {q ** th:.6g}")
    inst = HyperbolaInstance(q, c)
    box = conj3_box(C, N)
    if box is None:
        return Conj3Result(False, None, Box(1, 1, 1, 1))
    wit = next(iter_solutions(inst, box, require_coprime_xy=True), None)
    return Conj3Result(wit is not None, wit, box)


def _conj3_rows_for_q(args) -> list[dict]:
    q, theta, C = args
    N = math.ceil(q ** float(as_real(theta)))
    rows = []
    for c in range(1, q):
        if math.gcd(c, q) != 1:
            continue
        res = conj3_check(q, c, theta, C, N)
        w = res.witness
        rows.append({"q": q, "c": c, "N": N, "holds": res.holds, "x": w.x if w else None, "y": w.y if w else None})
    return rows


def conj3_sweep(q_lo: int, q_hi: int, theta, C, jobs: int = 1) -> SweepReport:
    per_q = run_keyed(_conj3_rows_for_q, [(q, str(theta), str(C)) for q in range(q_lo, q_hi + 1)], jobs)
    rows = [r for block in per_q for r in block]
    failing = sorted({r["q"] for r in rows if not r["holds"]})
    return SweepReport(
        "conj3",
        {"q_lo": q_lo, "q_hi": q_hi, "theta": str(theta), "C": str(C)},
        rows,
        {"rows": len(rows), "failures": sum(not r["holds"] for r in rows), "failing_q": failing},
    )


# ---------------------------------------------------------------------------
# conj0: interpolated bound for the oracle witness


@dataclass(frozen=True)
class Conj0Result:
    best: DuoApprox
    ratio: float


def conj0_quality(alpha, N: int, beta) -> Conj0Result:
    """error / (1 / ((q1 q2)^beta N^(2-beta))) for the oracle's best pair."""
    b = float(as_real(beta))
    if not 0 <= b <= 1:
        raise PreconditionViolated(f"beta must lie in [0, 1], got {beta}")
    best = brute_best_duo(alpha, N)
    ratio = float(best.error) * (best.q1 * best.q2) ** b * N ** (2 - b)
    return Conj0Result(best, ratio)


def _conj0_row(args) -> dict:
    alpha, N, beta = args
    res = conj0_quality(alpha, N, beta)
    d = res.best
    return {
        "alpha": fmt_rational(alpha),
        "N": N,
        "beta": str(beta),
        "a1": d.a1,
        "q1": d.q1,
        "a2": d.a2,
        "q2": d.q2,
        "error": fmt_rational(d.error),
        "ratio": res.ratio,
    }


def conj0_sweep(alphas: Sequence, Ns: Sequence[int], beta, jobs: int = 1) -> SweepReport:
    items = [(as_rational(a), N, str(beta)) for a in alphas for N in Ns]
    rows = run_keyed(_conj0_row, items, jobs)
    return SweepReport("conj0", {"N": list(Ns), "beta": str(beta), "samples": len(alphas)}, rows, summarize(rows, ["ratio"]))


# ---------------------------------------------------------------------------
# thm4: measure of bad intervals


@dataclass(frozen=True)
class BadMeasure:
    bad_weight: Fraction  # sum over bad (a, q) of 2/q
    bad_measure: float  # bad_weight / N^(2 - eps)
    reference: float
    bad_pairs: tuple


def _bad_for_q(args) -> list[int]:
    q, N = args
    wx, _ = good_residue_table(q, N)
    bad = []
    for a in range(1, q):
        if math.gcd(a, q) != 1:
            continue
        if wx[pow(a, -1, q)] == 0:
            bad.append(a)
    return bad


def thm4_bad_measure(N: int, epsilon, q_cap: int, jobs: int = 1) -> BadMeasure:
    """Total length 2/(q N^(2-eps)) of every bad interval I_{a,q}, N < q <= q_cap.

    Overlaps are counted twice, as in a union bound.
    """
    eps = float(as_real(epsilon))
    if N < 2:
        raise PreconditionViolated("N must be >= 2")
    if q_cap > N ** (2 - eps):
        raise PreconditionViolated(f"q_cap = {q_cap} exceeds N^(2-eps) = {N ** (2 - eps):.6g}")
    check_span(q_cap, "q range")
    qs = list(range(N + 1, q_cap + 1))
    per_q = run_keyed(_bad_for_q, [(q, N) for q in qs], jobs)
    weight = Fraction(0)
    pairs = []
    for q, bad in zip(qs, per_q):
        weight += Fraction(2 * len(bad), q)
        pairs.extend((a, q) for a in bad)
    return BadMeasure(weight, float(weight) / N ** (2 - eps), 1 / math.sqrt(math.log(N)), tuple(pairs))
