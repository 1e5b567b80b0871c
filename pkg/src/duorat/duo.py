"""Approximating alpha by a1/q1 + a2/q2 with 1 <= q1, q2 <= N.

Four constructions are provided:

* :func:`duo_from_reduction` takes a/q with q <= N**2 from the convergents and
  solves q1*q2 = r * inverse(a) (mod q) for small r > 0, so that
  a*q1*q2 - b*q = r and |a/q - b/(q1 q2)| = r / (q q1 q2).
* :func:`trivial_duo` pads a Dirichlet fraction with 0/1.
* :func:`prime_grid_approx` rounds to the grid k/(q1 q2) with q1, q2 two
  primes in [N/4, N] and gcd(k, q1 q2) = 1.
* :func:`brute_best_duo` is the exact oracle. a1/q1 + a2/q2 ranges over all
  multiples of 1/lcm(q1, q2), so it suffices to round alpha on each lcm grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import as_rational, is_prime, primes_in_range, split_fraction
from .errors import NotCoprime, PreconditionViolated, RangeTooLarge, RangeTooSmall
from .hyperbola import Box, HyperbolaInstance, iter_lift_solutions
from .single import SingleApprox, dirichlet_approx

ORACLE_MAX_N = 300
DEFAULT_EPS0 = Fraction(1, 10)


@dataclass(frozen=True)
class DuoApprox:
    a1: int
    q1: int
    a2: int
    q2: int
    error: Fraction
    method: str
    n: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.a1, self.q1) + Fraction(self.a2, self.q2)

    def recomputed_error(self, alpha) -> Fraction:
        return abs(as_rational(alpha) - self.value)

    def sort_key(self):
        # error first, then combined denominator, then numerator of the sum
        return (self.error, self.q1 * self.q2, self.a1 * self.q2 + self.a2 * self.q1)


@dataclass(frozen=True)
class ReductionTrace:
    single: SingleApprox
    r: int
    b: int
    q1: int
    q2: int


@dataclass(frozen=True)
class DuoResult:
    result: DuoApprox
    trace: Optional[ReductionTrace]
    candidates: dict = field(default_factory=dict)


def _from_fraction(alpha: Fraction, b: int, q1: int, q2: int, method: str, N: int) -> DuoApprox:
    a1, a2 = split_fraction(b, q1, q2)
    err = abs(alpha - Fraction(b, q1 * q2))
    return DuoApprox(a1, q1, a2, q2, err, method, N)


def trivial_duo(alpha, N: int) -> DuoApprox:
    alpha = as_rational(alpha)
    s = dirichlet_approx(alpha, N)
    return DuoApprox(s.a, s.q, 0, 1, s.error, "trivial", N)


def grid_primes(N: int) -> tuple[int, int]:
    """The two largest primes in [ceil(N/4), N]."""
    ps = primes_in_range(Fraction(N, 4), N)
    if len(ps) < 2:
        raise RangeTooSmall(f"fewer than two primes in [N/4, N] for N={N}")
    return ps[-2], ps[-1]


def prime_grid_approx(alpha, N: int) -> DuoApprox:
    alpha = as_rational(alpha)
    if N < 12:
        raise PreconditionViolated(f"prime grid needs N >= 12, got {N}")
    q1, q2 = grid_primes(N)
    Q = q1 * q2
    num, den = alpha.numerator, alpha.denominator
    lo = (num * Q) // den
    best = None
    # walk outward; one of any three consecutive k is coprime to Q
    for step in range(4):
        for k in (lo - step, lo + 1 + step):
            if math.gcd(k, Q) != 1:
                continue
            key = (abs(num * Q - k * den), k)
            if best is None or key < best:
                best = key
    k = best[1]
    out = _from_fraction(alpha, k, q1, q2, "prime_grid", N)
    assert out.error * Q <= 3
    return out


def _lcm_witnesses(N: int, distinct_primes: bool = False) -> dict[int, tuple[int, int]]:
    """Map each reachable denominator L to the pair (q1, q2) with lcm L that
    minimises (q1*q2, q1)."""
    out: dict[int, tuple[int, int]] = {}
    if distinct_primes:
        ps = primes_in_range(2, N)
        for i, p in enumerate(ps):
            for p2 in ps[i + 1 :]:
                out[p * p2] = (p, p2)
        return out
    for q1 in range(1, N + 1):
        for q2 in range(q1, N + 1):
            L = q1 * q2 // math.gcd(q1, q2)
            prev = out.get(L)
            if prev is None or (q1 * q2, q1) < (prev[0] * prev[1], prev[0]):
                out[L] = (q1, q2)
    return out


def brute_best_duo(alpha, N: int, distinct_primes: bool = False) -> DuoApprox:
    """Exact minimum of |alpha - a1/q1 - a2/q2| over 1 <= q1, q2 <= N.

    Ties go to the smaller lcm, then the smaller numerator on that grid.
    """
    alpha = as_rational(alpha)
    if N < 1:
        raise PreconditionViolated("N must be >= 1")
    if N > ORACLE_MAX_N:
        raise RangeTooLarge(f"oracle limited to N <= {ORACLE_MAX_N}, got {N}")
    num, den = alpha.numerator, alpha.denominator
    wit = _lcm_witnesses(N, distinct_primes)
    if not wit:
        raise RangeTooSmall(f"no admissible denominator pair for N={N}")
    best = None
    for L in sorted(wit):
        lo = (num * L) // den
        for k in (lo, lo + 1):
            e = abs(num * L - k * den)
            # compare e/L exactly; strict < keeps the smaller L, then k
            if best is None or e * best[1] < best[0] * L:
                best = (e, L, k)
    _, L, k = best
    q1, q2 = wit[L]
    # k/L = a1/q1 + a2/q2 with a1*(L/q1) + a2*(L/q2) = k, gcd(L/q1, L/q2) = 1
    a1, a2 = split_fraction(k, L // q2, L // q1)
    out = DuoApprox(a1, q1, a2, q2, abs(alpha - Fraction(k, L)), "oracle", N)
    assert out.value == Fraction(k, L)
    return out


def default_r_max(q: int, N: int, eps0: Fraction = DEFAULT_EPS0) -> int:
    """max(1, ceil(ceil(q/N^2) * N^eps0)), the width of the r window."""
    return max(1, math.ceil(-(-q // (N * N)) * N ** float(eps0)))


def _reduction_candidates(alpha: Fraction, s: SingleApprox, N: int, r_max: int, distinct_primes: bool):
    a, q = s.a, s.q
    inv = pow(a, -1, q)
    box = Box.square(1, N)
    for r in range(1, r_max + 1):
        c = (r * inv) % q
        if math.gcd(c, q) != 1:
            continue
        inst = HyperbolaInstance(q, c)
        k_max = max(0, (N * N - c) // q)
        for _, sol in iter_lift_solutions(inst, box, k_max, require_coprime_xy=True):
            q1, q2 = sol.x, sol.y
            if distinct_primes and not (q1 != q2 and is_prime(q1) and is_prime(q2)):
                continue
            b, rem = divmod(a * q1 * q2 - r, q)
            assert rem == 0
            cand = _from_fraction(alpha, b, q1, q2, "reduction", N)
            yield cand, ReductionTrace(s, r, b, q1, q2)


def duo_from_reduction(alpha, N: int, r_max: Optional[int] = None, distinct_primes: bool = False) -> DuoResult:
    """Best of the reduction scan and the fallback constructions.

    When the Dirichlet fraction for N**2 already has q <= N the scan is
    skipped, since a/q + 0/1 is admissible as it stands.
    """
    alpha = as_rational(alpha)
    if N < 1:
        raise PreconditionViolated("N must be >= 1")
    s = dirichlet_approx(alpha, N * N)
    if r_max is None:
        r_max = default_r_max(s.q, N)
    if r_max < 1:
        raise PreconditionViolated("r_max must be >= 1")

    pool: list[tuple[DuoApprox, Optional[ReductionTrace]]] = []
    cands: dict[str, DuoApprox] = {}
    if s.q > N:
        best_red = None
        for cand, tr in _reduction_candidates(alpha, s, N, r_max, distinct_primes):
            if best_red is None or cand.sort_key() < best_red[0].sort_key():
                best_red = (cand, tr)
        if best_red is not None:
            cands["reduction"] = best_red[0]
            pool.append(best_red)
    if not distinct_primes:
        triv = trivial_duo(alpha, N)
        cands["trivial"] = triv
        pool.append((triv, None))
    if N >= 12:
        try:
            grid = prime_grid_approx(alpha, N)
        except RangeTooSmall:
            grid = None
        if grid is not None:
            cands["prime_grid"] = grid
            pool.append((grid, None))
    if not pool:
        raise RangeTooSmall(f"no construction applies for N={N} in distinct-primes mode")
    result, trace = min(pool, key=lambda t: t[0].sort_key())
    return DuoResult(result, trace, cands)


@dataclass(frozen=True)
class LowerBoundCheck:
    min_error: Fraction
    bound: Fraction
    holds: bool
    witness: DuoApprox


def verify_lower_bound(a: int, p: int, N: int) -> LowerBoundCheck:
    """For a prime N < p <= 2N, every a1/q1 + a2/q2 misses a/p by >= 1/(p N^2)."""
    if not (N < p <= 2 * N):
        raise PreconditionViolated(f"need N < p <= 2N, got p={p}, N={N}")
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    if math.gcd(a, p) != 1:
        raise NotCoprime(f"gcd({a}, {p}) != 1")
    best = brute_best_duo(Fraction(a, p), N)
    bound = Fraction(1, p * N * N)
    return LowerBoundCheck(best.error, bound, best.error >= bound, best)
