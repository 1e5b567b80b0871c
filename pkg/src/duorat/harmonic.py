"""Exponential sums behind the uniform-distribution argument.

Every angle is reduced mod 1 in exact integer arithmetic before a float is
formed; repeated residues are merged into integer weights so each distinct
angle costs one complex exponential. Summation is compensated (Kahan in the
numba kernel, ``math.fsum`` in the numpy path); the documented absolute
tolerance is 1e-9 per 1e3 terms.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from ._config import check_work
from .arith import as_rational, divisor_count, primes_in_range
from .errors import NotCoprime, PreconditionViolated


def frac_part(x) -> Fraction:
    x = as_rational(x)
    return x - math.floor(x)


def dist_to_int(x) -> Fraction:
    """||x||, the exact distance from x to the nearest integer."""
    f = frac_part(x)
    return min(f, 1 - f)


def _residue_sums(rows: np.ndarray, residues: Sequence[int], weights: Sequence[int], q: int) -> np.ndarray:
    """|sum_k w_k e(row * r_k / q)| for each multiplier in ``rows``."""
    res = np.asarray(residues, dtype=np.int64)
    w = np.asarray(weights, dtype=np.float64)
    mult = np.asarray(rows, dtype=np.int64) % q
    num = (mult[:, None] * res[None, :]) % q
    den = np.full(len(res), q, dtype=np.int64)
    return kernels.weighted_abs_exp_sums(num, den, w)


def _histogram(values: Iterable[int], q: int) -> tuple[list[int], list[int]]:
    cnt = Counter(v % q for v in values)
    keys = sorted(cnt)
    return keys, [cnt[k] for k in keys]


@dataclass(frozen=True)
class ETCheck:
    hypothesis_ok: bool
    lhs: float
    rhs: Fraction
    holds: bool


def et_inequality(points: Sequence, L: int) -> ETCheck:
    """Evaluate sum_{l<=L} |sum_j e(l x_j)| against J/6.

    ``holds`` is lhs > J/6; it is guaranteed whenever every point sits at
    distance >= 1/L from the integers.
    """
    if not points:
        raise PreconditionViolated("need at least one point")
    if L < 1:
        raise PreconditionViolated("L must be >= 1")
    pts = [frac_part(p) for p in points]
    hyp = all(dist_to_int(p) * L >= 1 for p in pts)
    nums = np.array([p.numerator for p in pts], dtype=np.int64)
    dens = np.array([p.denominator for p in pts], dtype=np.int64)
    ls = np.arange(1, L + 1, dtype=np.int64)
    num = (ls[:, None] * nums[None, :]) % dens[None, :]
    vals = kernels.weighted_abs_exp_sums(num, dens, np.ones(len(pts)))
    lhs = math.fsum(vals)
    rhs = Fraction(len(pts), 6)
    return ETCheck(hyp, lhs, rhs, lhs > rhs)


@dataclass(frozen=True)
class ExpSumReport:
    S1: float
    S2: float
    L: int
    P_size: int
    threshold: float
    passes: bool


def default_L(q: int, N: int, phi: float, eps: float) -> int:
    """[q N^(phi - 2 - eps)] + 1, the l-range used for the prime-pair sums."""
    return math.floor(q * N ** (phi - 2 - eps)) + 1


def s_sums_thm6(q: int, a: int, N: int, L: int) -> ExpSumReport:
    """S1 = sum_l |sum_{p1,p2} e(l p1 p2 a/q)| and S2 = sum_l |sum_p e(l p^2 a/q)|
    over primes p in [N/2, N]."""
    if math.gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) != 1")
    if L < 1:
        raise PreconditionViolated("L must be >= 1")
    P = primes_in_range(Fraction(N, 2), N)
    check_work(L * max(1, len(P)) ** 2, "exponential sum")
    if not P:
        return ExpSumReport(0.0, 0.0, L, 0, 0.0, True)
    ls = np.arange(1, L + 1)
    r1, w1 = _histogram((p1 * p2 * a for p1 in P for p2 in P), q)
    r2, w2 = _histogram((p * p * a for p in P), q)
    S1 = math.fsum(_residue_sums(ls, r1, w1, q))
    S2 = math.fsum(_residue_sums(ls, r2, w2, q))
    thr = len(P) ** 2 / 7
    return ExpSumReport(S1, S2, L, len(P), thr, S1 + S2 <= thr)


@dataclass(frozen=True)
class CauchySchwarzCheck:
    S2_squared: float
    bound: int
    congruent_pairs: int
    holds: bool


def s2_cauchy_schwarz(q: int, a: int, N: int, L: int, rel_slack: float = 1e-6) -> CauchySchwarzCheck:
    """S2^2 <= L q #{(p1, p2): p1^2 = p2^2 (mod q)}; needs L <= q."""
    if L > q:
        raise PreconditionViolated(f"the chain needs L <= q, got L={L}, q={q}")
    rep = s_sums_thm6(q, a, N, L)
    P = primes_in_range(Fraction(N, 2), N)
    sq = Counter(p * p % q for p in P)
    pairs = sum(v * v for v in sq.values())
    bound = L * q * pairs
    s2sq = rep.S2**2
    return CauchySchwarzCheck(s2sq, bound, pairs, s2sq <= bound * (1 + rel_slack) + rel_slack)


@dataclass(frozen=True)
class ParsevalCheck:
    lhs: float
    rhs: int
    rel_error: float


def parseval_check(q: int, a: int, N: int) -> ParsevalCheck:
    """sum_{l=1..q} |sum_p e(l p a/q)|^2 against q #{(p, p'): p = p' (mod q)}."""
    P = primes_in_range(Fraction(N, 2), N)
    check_work(q * max(1, len(P)), "Parseval sum")
    r, w = _histogram((p * a for p in P), q)
    mags = _residue_sums(np.arange(1, q + 1), r, w, q) if P else np.zeros(q)
    lhs = math.fsum(mags**2)
    cnt = Counter(p % q for p in P)
    rhs = q * sum(v * v for v in cnt.values())
    rel = abs(lhs - rhs) / max(1.0, rhs)
    return ParsevalCheck(lhs, rhs, rel)


@dataclass(frozen=True)
class DrProfile:
    counts: dict
    max_d: int
    bound_checked: bool
    bound_holds: bool

    def histogram(self) -> dict:
        return dict(sorted(Counter(self.counts.values()).items()))


def d_r_profile(L: int, P: Sequence[int], N: int | None = None) -> DrProfile:
    """d_r = #{(l, p): l <= L, p in P, l*p = r}.

    When N > 16 and P lies in [N/2, N] the bound d_r <= 3 for r <= L*N is
    checked as well.
    """
    if L < 1:
        raise PreconditionViolated("L must be >= 1")
    P = sorted(set(int(p) for p in P))
    if not P:
        return DrProfile({}, 0, False, True)
    check_work(L * len(P), "d_r profile")
    ls = np.arange(1, L + 1, dtype=np.int64)
    rs = (ls[:, None] * np.asarray(P, dtype=np.int64)[None, :]).ravel()
    bins = np.bincount(rs)
    nz = np.flatnonzero(bins)
    counts = {int(r): int(bins[r]) for r in nz}
    max_d = int(bins.max())
    checked = N is not None and N > 16 and all(2 * p >= N and p <= N for p in P)
    holds = True
    if checked:
        holds = int(bins[: L * N + 1].max()) <= 3
    return DrProfile(counts, max_d, checked, holds)


@dataclass(frozen=True)
class Thm7Report:
    T_exact: float
    cap: float


def s1_bound_thm7(q: int, N: int, L: int) -> Thm7Report:
    """(L N / q) sum_{r=1..q} |sum_{N/2 <= m <= N} e(r m / q)| next to L N d(q) ln q."""
    if q < 1:
        raise PreconditionViolated("q must be positive")
    if L < 0:
        raise PreconditionViolated("L must be >= 0")
    lo, hi = -(-N // 2), N
    cap = L * N * divisor_count(q) * math.log(q)
    if L == 0 or hi < lo:
        return Thm7Report(0.0, cap)
    check_work(q * min(q, hi - lo + 1), "thm7 sum")
    r, w = _histogram(range(lo, hi + 1), q)
    mags = _residue_sums(np.arange(1, q + 1), r, w, q)
    return Thm7Report(L * N / q * math.fsum(mags), cap)
