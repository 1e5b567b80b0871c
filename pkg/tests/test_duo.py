import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from duorat.arith import primes_in_range
from duorat.duo import (
    brute_best_duo,
    default_r_max,
    duo_from_reduction,
    grid_primes,
    prime_grid_approx,
    trivial_duo,
    verify_lower_bound,
)
from duorat.errors import PreconditionViolated, RangeTooLarge, RangeTooSmall

from conftest import rand_rational


def naive_duo_error(alpha, N):
    """min over q1, q2 <= N and integer a1, a2 of |alpha - a1/q1 - a2/q2|,
    scanning a1 over a full period and rounding a2."""
    best = None
    for q1 in range(1, N + 1):
        base = math.floor(alpha * q1)
        for a1 in range(base - q1, base + q1 + 1):
            rest = alpha - Fraction(a1, q1)
            for q2 in range(1, N + 1):
                f = math.floor(rest * q2)
                for a2 in (f, f + 1):
                    e = abs(rest - Fraction(a2, q2))
                    if best is None or e < best:
                        best = e
    return best


def check_consistent(alpha, d, N):
    assert 1 <= d.q1 <= N and 1 <= d.q2 <= N
    assert d.error == abs(alpha - Fraction(d.a1, d.q1) - Fraction(d.a2, d.q2))


def test_reduction_examples():
    r = duo_from_reduction(Fraction(5, 7), 3, 7)
    assert r.result.error == Fraction(1, 21)
    assert r.trace.q1 * r.trace.q2 == 3 and r.trace.b == 2
    assert (r.result.a1, r.result.q1, r.result.a2, r.result.q2) == (0, 1, 2, 3)
    assert duo_from_reduction(Fraction(1, 2), 4, 3).result.error == 0
    r = duo_from_reduction(Fraction(5, 7), 5, 7)
    assert r.result.error == Fraction(1, 70)
    assert (r.trace.q1 * r.trace.q2, r.trace.b, r.trace.r) == (10, 7, 1)
    assert (r.result.a1, r.result.q1, r.result.a2, r.result.q2) == (1, 2, 1, 5)


def test_trace_invariants(rng):
    for _ in range(300):
        alpha = rand_rational(rng)
        N = rng.randint(2, 40)
        out = duo_from_reduction(alpha, N)
        check_consistent(alpha, out.result, N)
        if out.trace is not None:
            t = out.trace
            a, q = t.single.a, t.single.q
            assert (t.q1 * t.q2 - t.r * pow(a, -1, q)) % q == 0
            assert a * t.q1 * t.q2 - t.r == t.b * q
            assert math.gcd(t.q1, t.q2) == 1


@pytest.mark.parametrize("alpha,N,err", [(Fraction(5, 7), 3, Fraction(1, 21)), (Fraction(1, 2), 2, 0), (Fraction(5, 7), 5, Fraction(1, 70))])
def test_brute_examples(alpha, N, err):
    d = brute_best_duo(alpha, N)
    assert d.error == err
    check_consistent(alpha, d, N)


def test_brute_example_lcm():
    d = brute_best_duo(Fraction(5, 7), 5)
    assert d.q1 * d.q2 // math.gcd(d.q1, d.q2) == 10


def test_brute_vs_naive(rng):
    for _ in range(60):
        alpha = rand_rational(rng, 500)
        N = rng.randint(1, 9)
        assert brute_best_duo(alpha, N).error == naive_duo_error(alpha, N)


def test_brute_guard():
    with pytest.raises(RangeTooLarge):
        brute_best_duo(Fraction(1, 3), 301)


@pytest.mark.parametrize("alpha,num,err", [(Fraction(1, 2), 38, Fraction(1, 154)), (Fraction(5, 7), 54, Fraction(1, 77))])
def test_prime_grid_examples(alpha, num, err):
    d = prime_grid_approx(alpha, 12)
    assert (d.q1, d.q2) == (7, 11)
    assert d.value == Fraction(num, 77)
    assert d.error == err


def test_prime_grid_zero_uses_coprime_numerator():
    # the nearest admissible numerators to 0 on the 1/77 grid are +-1
    d = prime_grid_approx(Fraction(0), 12)
    assert d.error == Fraction(1, 77)


def test_prime_grid_needs_n12():
    with pytest.raises(PreconditionViolated):
        prime_grid_approx(Fraction(1, 3), 11)


def test_grid_primes():
    assert grid_primes(12) == (7, 11)
    assert grid_primes(100) == (89, 97)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**6), st.integers(0, 10**6), st.integers(12, 200))
def test_prime_grid_bound(den, num, N):
    alpha = Fraction(num % den, den)
    d = prime_grid_approx(alpha, N)
    assert math.gcd(d.a1 * d.q2 + d.a2 * d.q1, d.q1 * d.q2) == 1
    assert d.error <= Fraction(3, d.q1 * d.q2)
    check_consistent(alpha, d, N)


@pytest.mark.parametrize("alpha,N,q1,err", [(Fraction(3, 7), 5, 2, Fraction(1, 14)), (Fraction(1, 2), 5, 2, 0), (Fraction(5, 7), 3, 3, Fraction(1, 21))])
def test_trivial_examples(alpha, N, q1, err):
    d = trivial_duo(alpha, N)
    assert d.q1 == q1 and (d.a2, d.q2) == (0, 1) and d.error == err


def test_orderings(rng):
    for _ in range(200):
        alpha = rand_rational(rng)
        N = rng.randint(12, 30)
        red = duo_from_reduction(alpha, N).result
        grid = prime_grid_approx(alpha, N)
        triv = trivial_duo(alpha, N)
        best = brute_best_duo(alpha, N)
        assert best.error <= red.error <= min(grid.error, triv.error)
        assert triv.error * triv.q1 * N <= 1


def test_short_circuit_when_convergent_is_small():
    # q of the N^2 convergent is <= N, so the scan is skipped
    out = duo_from_reduction(Fraction(3, 5), 5)
    assert out.trace is None and out.result.error == 0


def test_distinct_primes_mode(rng):
    for _ in range(50):
        alpha = rand_rational(rng)
        N = rng.randint(12, 40)
        d = duo_from_reduction(alpha, N, distinct_primes=True).result
        assert d.q1 != d.q2
        assert all(len(primes_in_range(q, q)) == 1 for q in (d.q1, d.q2))
        assert brute_best_duo(alpha, N, distinct_primes=True).error <= d.error


def test_distinct_primes_needs_a_construction():
    with pytest.raises(RangeTooSmall):
        duo_from_reduction(Fraction(1, 2), 2, distinct_primes=True)


def test_default_r_max():
    assert default_r_max(7, 3) == 2
    assert default_r_max(10**6, 1000) == 2
    assert default_r_max(5, 1) == 5


@pytest.mark.parametrize("a,p,N,err,bound", [(5, 7, 5, Fraction(1, 70), Fraction(1, 175)), (1, 3, 2, Fraction(1, 6), Fraction(1, 12))])
def test_lower_bound_examples(a, p, N, err, bound):
    r = verify_lower_bound(a, p, N)
    assert (r.min_error, r.bound, r.holds) == (err, bound, True)


def test_lower_bound_preconditions():
    with pytest.raises(PreconditionViolated):
        verify_lower_bound(5, 7, 8)
    with pytest.raises(PreconditionViolated):
        verify_lower_bound(1, 9, 5)
