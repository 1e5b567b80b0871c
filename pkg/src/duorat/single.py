"""Approximation of a rational alpha by a single fraction a/q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import as_rational
from .errors import PreconditionViolated


@dataclass(frozen=True)
class SingleApprox:
    a: int
    q: int
    error: Fraction

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.q)


def _make(alpha: Fraction, a: int, q: int) -> SingleApprox:
    g = math.gcd(a, q)
    a, q = a // g, q // g
    return SingleApprox(a, q, abs(alpha - Fraction(a, q)))


def partial_quotients(alpha) -> list[int]:
    alpha = as_rational(alpha)
    num, den = alpha.numerator, alpha.denominator
    out = []
    while den:
        t, r = divmod(num, den)
        out.append(t)
        num, den = den, r
    return out


def convergents(alpha) -> list[SingleApprox]:
    """Every continued-fraction convergent of alpha, ending with alpha itself."""
    alpha = as_rational(alpha)
    h2, h1 = 0, 1
    k2, k1 = 1, 0
    out = []
    for t in partial_quotients(alpha):
        h = t * h1 + h2
        k = t * k1 + k2
        out.append(SingleApprox(h, k, abs(alpha - Fraction(h, k))))
        h2, h1 = h1, h
        k2, k1 = k1, k
    return out


def dirichlet_approx(alpha, N: int) -> SingleApprox:
    """Last convergent with denominator <= N.

    If the next convergent has denominator q' > N then
    |alpha - a/q| <= 1/(q q') <= 1/(q N); the bound is re-checked exactly.
    """
    alpha = as_rational(alpha)
    if N < 1:
        raise PreconditionViolated(f"N must be >= 1, got {N}")
    best = None
    for conv in convergents(alpha):
        if conv.q > N:
            break
        best = conv
    assert best is not None  # the first convergent has q = 1
    if best.error * best.q * N > 1:
        raise AssertionError(f"Dirichlet bound failed for {alpha}, N={N}")
    return best


def best_single(alpha, N: int) -> SingleApprox:
    """Exhaustive minimum of |alpha - a/q| over 1 <= q <= N.

    Ties go to the smaller q, then the smaller a.
    """
    alpha = as_rational(alpha)
    if N < 1:
        raise PreconditionViolated(f"N must be >= 1, got {N}")
    num, den = alpha.numerator, alpha.denominator
    best_key = None
    best_aq = None
    for q in range(1, N + 1):
        lo = (num * q) // den
        for a in (lo, lo + 1):
            # |alpha - a/q| = e / (den*q); compare e1*q2 against e2*q1
            e = abs(num * q - a * den)
            if best_key is None or e * best_key[1] < best_key[0] * q:
                best_key = (e, q)
                best_aq = (a, q)
    return _make(alpha, *best_aq)
