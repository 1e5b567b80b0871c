"""Small solutions of the modular hyperbola x*y = c (mod q)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from . import kernels
from ._config import check_span, check_work
from .arith import divisors
from .errors import NotCoprime, PreconditionViolated


@dataclass(frozen=True)
class HyperbolaInstance:
    q: int
    c: int

    def __post_init__(self):
        if self.q < 1:
            raise PreconditionViolated(f"modulus must be positive, got {self.q}")
        if math.gcd(self.c, self.q) != 1:
            raise NotCoprime(f"gcd({self.c}, {self.q}) = {math.gcd(self.c, self.q)}")
        object.__setattr__(self, "c", self.c % self.q)

    def holds(self, x: int, y: int) -> bool:
        return (x * y - self.c) % self.q == 0


@dataclass(frozen=True)
class Box:
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int

    def __post_init__(self):
        if min(self.x_lo, self.y_lo) < 1:
            raise PreconditionViolated("box bounds must be positive")
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise PreconditionViolated(f"empty box {self}")

    @classmethod
    def square(cls, lo: int, hi: int) -> "Box":
        return cls(lo, hi, lo, hi)

    @classmethod
    def parse(cls, text: str) -> "Box":
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("box needs four comma-separated integers xlo,xhi,ylo,yhi")
        return cls(*parts)

    def contains(self, x: int, y: int) -> bool:
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi


@dataclass(frozen=True, order=True)
class HyperbolaSolution:
    x: int
    y: int

    @property
    def max(self) -> int:
        return max(self.x, self.y)


def _check_box(box: Box) -> None:
    check_span(box.x_hi - box.x_lo + 1, "x range")
    check_span(box.y_hi - box.y_lo + 1, "y range")


def iter_solutions(inst: HyperbolaInstance, box: Box, require_coprime_xy: bool = False) -> Iterator[HyperbolaSolution]:
    """Solutions in the box, in increasing (x, y) order."""
    _check_box(box)
    q, c = inst.q, inst.c
    for x in range(box.x_lo, box.x_hi + 1):
        if math.gcd(x, q) != 1:
            continue
        y0 = (c * pow(x, -1, q)) % q if q > 1 else 0
        y = box.y_lo + (y0 - box.y_lo) % q
        while y <= box.y_hi:
            if not require_coprime_xy or math.gcd(x, y) == 1:
                yield HyperbolaSolution(x, y)
            y += q


def solutions_in_box(inst: HyperbolaInstance, box: Box, require_coprime_xy: bool = False) -> list[HyperbolaSolution]:
    return list(iter_solutions(inst, box, require_coprime_xy))


@dataclass(frozen=True)
class MinMaxSolution:
    sol: HyperbolaSolution
    exponent: float


def smallest_max_solution(inst: HyperbolaInstance) -> MinMaxSolution:
    """Minimise max(x, y) over solutions with 1 <= x, y <= q-1 (ties: smaller x).

    Every unit x has exactly one partner y in [1, q-1], so one pass over x
    covers the full residue square.
    """
    q, c = inst.q, inst.c
    if q < 2:
        raise PreconditionViolated("modulus must be >= 2")
    check_span(q, "modulus")
    best = None
    for x in range(1, q):
        if best is not None and x > best[0]:
            break
        if math.gcd(x, q) != 1:
            continue
        y = (c * pow(x, -1, q)) % q
        key = (max(x, y), x)
        if best is None or key < best:
            best = key
            best_sol = HyperbolaSolution(x, y)
    return MinMaxSolution(best_sol, math.log(best_sol.max) / math.log(q))


def iter_lift_solutions(inst: HyperbolaInstance, box: Box, k_max: int, require_coprime_xy: bool = False) -> Iterator[tuple[int, HyperbolaSolution]]:
    """Factor the lifts c + k*q, k = 0..k_max, and yield ``(k, solution)`` for
    divisor pairs inside the box, ordered by k then x."""
    if k_max < 0:
        raise PreconditionViolated("k_max must be >= 0")
    q, c = inst.q, inst.c
    if c == 0:
        c = q  # q == 1: every product is a lift of 0 mod 1; start at 1
    top = box.x_hi * box.y_hi
    for k in range(k_max + 1):
        n = c + k * q
        if n > top:
            break
        if n < box.x_lo * box.y_lo:
            continue
        for x in divisors(n):
            if x > box.x_hi:
                break
            if x < box.x_lo:
                continue
            y = n // x
            if box.y_lo <= y <= box.y_hi and (not require_coprime_xy or math.gcd(x, y) == 1):
                yield k, HyperbolaSolution(x, y)


def lift_and_factor_search(inst: HyperbolaInstance, box: Box, k_max: int, require_coprime_xy: bool = False) -> Optional[HyperbolaSolution]:
    hit = next(iter_lift_solutions(inst, box, k_max, require_coprime_xy), None)
    return None if hit is None else hit[1]


def min_max_via_lifts(inst: HyperbolaInstance) -> int:
    """Smallest m such that the lift search finds a solution in [1, m]^2.

    Bisection over m, each probe a full-box lift search with k_max = q-1.
    """
    q = inst.q
    lo, hi = 1, q - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if lift_and_factor_search(inst, Box.square(1, mid), q - 1) is None:
            lo = mid + 1
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class Coverage:
    covered: int
    fraction: float
    modulus: int


def coverage_count(m: int, x_range: tuple[int, int], y_range: tuple[int, int], require_coprime_xy: bool = False) -> Coverage:
    """Number of distinct residues x*y mod m with x, y in the given ranges."""
    if m < 1:
        raise PreconditionViolated("modulus must be positive")
    box = Box(x_range[0], x_range[1], y_range[0], y_range[1])
    _check_box(box)
    check_span(m, "modulus")
    check_work((box.x_hi - box.x_lo + 1) * (box.y_hi - box.y_lo + 1), "coverage enumeration")
    wx, _ = kernels.pair_residue_witness(box.x_lo, box.x_hi, box.y_lo, box.y_hi, m, require_coprime_xy)
    covered = int((wx != 0).sum())
    return Coverage(covered, covered / m, m)


def interval_box(N: int) -> tuple[int, int]:
    """Integer range [ceil(N/4), N] used for good/bad interval tests."""
    return max(1, -(-N // 4)), N


@dataclass(frozen=True)
class IntervalClass:
    good: bool
    witness: Optional[tuple[int, int]]


def classify_interval(a: int, q: int, N: int) -> IntervalClass:
    """Good iff inverse(a) = q1*q2 (mod q) for coprime q1, q2 in [ceil(N/4), N]."""
    if math.gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) = {math.gcd(a, q)}")
    lo, hi = interval_box(N)
    check_span(hi - lo + 1, "interval")
    target = pow(a, -1, q) if q > 1 else 0
    for q1 in range(lo, hi + 1):
        if math.gcd(q1, q) != 1:
            continue
        y0 = (target * pow(q1, -1, q)) % q if q > 1 else 0
        q2 = lo + (y0 - lo) % q
        while q2 <= hi:
            if math.gcd(q1, q2) == 1:
                return IntervalClass(True, (q1, q2))
            q2 += q
    return IntervalClass(False, None)


def good_residue_table(q: int, N: int):
    """Witness arrays over all residues r: (q1, q2) coprime in the interval box
    with q1*q2 = r (mod q); zero where none exists."""
    lo, hi = interval_box(N)
    check_span(hi - lo + 1, "interval")
    check_work((hi - lo + 1) ** 2, "interval pair enumeration")
    return kernels.pair_residue_witness(lo, hi, lo, hi, q, True)
