"""Exact integer and rational arithmetic used throughout the package.

Rationals are :class:`fractions.Fraction` values; they are always reduced and
carry arbitrary-precision parts, so every comparison below is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

import numpy as np

from .errors import NotCoprime, PreconditionViolated, RangeTooLarge

Rational = Fraction

# trial division covers every n below TRIAL_LIMIT**2
TRIAL_LIMIT = 10**6
_SEGMENT = 1 << 18


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and exact strings ("p/q", "0.125") to a Fraction.

    Binary floats are rejected: they cannot be told apart from the decimal the
    caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def fmt_rational(x: Fraction) -> str:
    """Serialise as the exact string ``num/den`` (den always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def as_real(value) -> Fraction:
    """Exact value of a real parameter (floats are converted bit-exactly)."""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("real parameter must be finite")
        return Fraction(value)
    return as_rational(value)


def mod_inverse(a: int, q: int) -> int:
    if q < 2:
        raise PreconditionViolated(f"modulus must be >= 2, got {q}")
    g = math.gcd(a, q)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {q}) = {g}")
    return pow(a, -1, q)


def split_fraction(b: int, q1: int, q2: int) -> tuple[int, int]:
    """Write b/(q1*q2) as a1/q1 + a2/q2 with 0 <= a1 < q1.

    Returns ``(a1, a2)`` with ``a1*q2 + a2*q1 == b``.
    """
    if q1 < 1 or q2 < 1:
        raise PreconditionViolated("denominators must be positive")
    g = math.gcd(q1, q2)
    if g != 1:
        raise NotCoprime(f"gcd({q1}, {q2}) = {g}")
    if q1 == 1:
        a1 = 0
    else:
        a1 = (b * pow(q2, -1, q1)) % q1
    a2, rem = divmod(b - a1 * q2, q1)
    assert rem == 0
    return a1, a2


# ---------------------------------------------------------------------------
# primes


def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


@lru_cache(maxsize=None)
def _base_primes_cached(limit: int) -> np.ndarray:
    arr = _simple_sieve(limit)
    arr.setflags(write=False)
    return arr


def base_primes(limit: int) -> np.ndarray:
    """Primes <= limit, from a per-process cache keyed on a power of two."""
    size = 1024
    while size < limit:
        size *= 2
    arr = _base_primes_cached(size)
    return arr[: np.searchsorted(arr, limit, side="right")]


def _segment_primes(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi] by a segmented sieve over blocks of _SEGMENT."""
    base = base_primes(math.isqrt(hi))
    found = []
    start = lo
    while start <= hi:
        stop = min(start + _SEGMENT - 1, hi)
        flags = np.ones(stop - start + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > stop:
                break
            first = max(p * p, -(-start // p) * p)
            if first <= stop:
                flags[first - start :: p] = False
        if start <= 1:
            flags[: 2 - start] = False
        found.append(np.flatnonzero(flags) + start)
        start = stop + 1
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def primes_in_range(lo, hi) -> list[int]:
    """All primes p with lo <= p <= hi (inclusive, real endpoints)."""
    lo_i = max(2, math.ceil(as_real(lo)))
    hi_i = math.floor(as_real(hi))
    if hi_i < lo_i:
        return []
    if hi_i <= 1 << 20:
        arr = base_primes(hi_i)
        return arr[np.searchsorted(arr, lo_i) :].tolist()
    return _segment_primes(lo_i, hi_i).tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


# ---------------------------------------------------------------------------
# factorisation and multiplicative functions


@dataclass(frozen=True)
class ArithmeticFunctions:
    phi: int
    mobius: int
    d: int
    omega: int
    factors: tuple[tuple[int, int], ...]


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation as increasing ``(prime, exponent)`` pairs."""
    if n < 1:
        raise PreconditionViolated(f"cannot factor {n}")
    out = []
    rest = n
    limit = min(math.isqrt(rest), TRIAL_LIMIT)
    if limit >= 2:
        for p in base_primes(limit).tolist():
            if p * p > rest:
                break
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                out.append((p, e))
    if rest > 1:
        if rest >= TRIAL_LIMIT * TRIAL_LIMIT:
            raise RangeTooLarge(f"cofactor {rest} of {n} exceeds the trial-division range")
        out.append((rest, 1))
    return tuple(out)


def arithmetic_functions(n: int) -> ArithmeticFunctions:
    fac = factorize(n)
    phi = 1
    d = 1
    for p, e in fac:
        phi *= (p - 1) * p ** (e - 1)
        d *= e + 1
    if any(e > 1 for _, e in fac):
        mobius = 0
    else:
        mobius = -1 if len(fac) % 2 else 1
    return ArithmeticFunctions(phi=phi, mobius=mobius, d=d, omega=len(fac), factors=fac)


def euler_phi(n: int) -> int:
    return arithmetic_functions(n).phi


def divisor_count(n: int) -> int:
    return arithmetic_functions(n).d


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_divisors(n: int) -> list[tuple[int, int]]:
    """``(d, mu(d))`` for every squarefree divisor d of n."""
    out = [(1, 1)]
    for p, _ in factorize(n):
        out += [(d * p, -mu) for d, mu in out]
    return out


@dataclass(frozen=True)
class CoprimeCount:
    count: int
    main_term: Fraction
    error_bound: int

    @property
    def deviation(self) -> Fraction:
        return abs(self.count - self.main_term)


def coprime_count(q: int, B) -> CoprimeCount:
    """Count 1 <= n <= B with gcd(n, q) = 1 by Moebius inclusion-exclusion.

    The main term is B*phi(q)/q; ``error_bound`` is 2*d(q). Writing the count
    as sum over squarefree d | q of mu(d)*floor(B/d), the gap to the main term
    is at most one per squarefree divisor (fractional parts for d <= B, the
    B/d < 1 tail for d > B), so 2**omega(q) <= d(q) already suffices.
    """
    if q < 1:
        raise PreconditionViolated("q must be positive")
    b = as_real(B)
    if b < 1:
        raise PreconditionViolated(f"B must be >= 1, got {B}")
    fb = math.floor(b)
    count = sum(mu * (fb // d) for d, mu in squarefree_divisors(q))
    af = arithmetic_functions(q)
    return CoprimeCount(count=count, main_term=b * af.phi / q, error_bound=2 * af.d)
