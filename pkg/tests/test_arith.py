import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from duorat.arith import (
    arithmetic_functions,
    as_rational,
    coprime_count,
    divisors,
    factorize,
    fmt_rational,
    mod_inverse,
    primes_in_range,
    split_fraction,
)
from duorat.errors import NotCoprime, RangeTooLarge

from conftest import naive_phi, naive_primes


@pytest.mark.parametrize("a,q,expected", [(3, 7, 5), (1, 9, 1)])
def test_mod_inverse_examples(a, q, expected):
    assert mod_inverse(a, q) == expected


def test_mod_inverse_not_coprime():
    with pytest.raises(NotCoprime):
        mod_inverse(6, 9)


@given(st.integers(2, 10**6), st.integers(-(10**9), 10**9))
def test_mod_inverse_property(q, a):
    if math.gcd(a, q) != 1:
        return
    x = mod_inverse(a, q)
    assert 1 <= x <= q - 1 or q == 2
    assert a * x % q == 1


@pytest.mark.parametrize("b,q1,q2,expected", [(7, 3, 5, (2, -1)), (0, 4, 9, (0, 0)), (7, 2, 5, (1, 1))])
def test_split_fraction_examples(b, q1, q2, expected):
    assert split_fraction(b, q1, q2) == expected


def test_split_fraction_not_coprime():
    with pytest.raises(NotCoprime):
        split_fraction(5, 4, 6)


@given(st.integers(-(10**12), 10**12), st.integers(1, 10**6), st.integers(1, 10**6))
def test_split_fraction_property(b, q1, q2):
    if math.gcd(q1, q2) != 1:
        return
    a1, a2 = split_fraction(b, q1, q2)
    assert a1 * q2 + a2 * q1 == b
    assert 0 <= a1 < q1
    assert Fraction(a1, q1) + Fraction(a2, q2) == Fraction(b, q1 * q2)


@pytest.mark.parametrize(
    "n,phi,mu,d,omega",
    [(12, 4, 0, 6, 2), (1, 1, 1, 1, 0), (13, 12, -1, 2, 1), (30, 8, -1, 8, 3), (36, 12, 0, 9, 2)],
)
def test_arithmetic_functions(n, phi, mu, d, omega):
    af = arithmetic_functions(n)
    assert (af.phi, af.mobius, af.d, af.omega) == (phi, mu, d, omega)
    assert math.prod(p**e for p, e in af.factors) == n


@pytest.mark.parametrize("n", range(1, 400))
def test_arithmetic_functions_vs_naive(n):
    af = arithmetic_functions(n)
    assert af.phi == naive_phi(n)
    assert af.d == sum(1 for k in range(1, n + 1) if n % k == 0)
    assert divisors(n) == [k for k in range(1, n + 1) if n % k == 0]


def test_factorize_large():
    n = 999983 * 1000003  # two primes straddling 10^6
    assert factorize(n) == ((999983, 1), (1000003, 1))
    assert factorize(2**40) == ((2, 40),)
    assert arithmetic_functions(10**12).d == 169


def test_factorize_refuses_beyond_trial_range():
    with pytest.raises(RangeTooLarge):
        factorize(1000003 * 1000033)


@pytest.mark.parametrize("lo,hi,expected", [(10, 20, [11, 13, 17, 19]), (6, 6, []), (3, 6, [3, 5]), (0, 1, []), (Fraction(7, 2), 7.5, [5, 7])])
def test_primes_in_range_examples(lo, hi, expected):
    assert primes_in_range(lo, hi) == expected


@pytest.mark.parametrize("lo,hi", [(0, 1000), (990, 1200), (2**20 - 500, 2**20 + 3000), (5_000_000, 5_001_000)])
def test_primes_in_range_vs_trial_division(lo, hi):
    assert primes_in_range(lo, hi) == naive_primes(lo, hi)


def test_segmented_sieve_crosses_blocks():
    lo, hi = 3_000_000, 3_000_000 + (1 << 18) * 2 + 77
    got = primes_in_range(lo, hi)
    assert got == naive_primes(lo, hi)


@pytest.mark.parametrize("q,B,count", [(6, 10, 3), (1, Fraction(15, 2), 7), (12, 12, 4), (1, 1, 1)])
def test_coprime_count_examples(q, B, count):
    assert coprime_count(q, B).count == count


def test_coprime_count_float_B_is_exact():
    r = coprime_count(1, 7.5)
    assert r.count == 7 and r.main_term == Fraction(15, 2)


@pytest.mark.parametrize("q", range(1, 80))
def test_coprime_count_vs_naive(q):
    for B in range(1, 120, 7):
        r = coprime_count(q, B)
        assert r.count == sum(1 for n in range(1, B + 1) if math.gcd(n, q) == 1)
        assert abs(r.count - r.main_term) <= r.error_bound
        assert r.main_term == Fraction(B * naive_phi(q), q)


@settings(max_examples=300)
@given(st.integers(1, 500), st.integers(1, 500))
def test_coprime_count_property(q, B):
    r = coprime_count(q, B)
    assert r.count == sum(1 for n in range(1, B + 1) if math.gcd(n, q) == 1)
    assert abs(r.count - r.main_term) <= 2 * arithmetic_functions(q).d


def test_rational_round_trip(rng):
    for _ in range(10**4):
        x = Fraction(rng.randint(-(10**9), 10**9), rng.randint(1, 10**9))
        y = Fraction(rng.randint(-(10**9), 10**9), rng.randint(1, 10**9))
        assert (x + y) - y == x


def test_rational_parsing_is_exact():
    assert as_rational("0.1") == Fraction(1, 10)
    assert as_rational("-7/15") == Fraction(-7, 15)
    assert fmt_rational(Fraction(-7, 15)) == "-7/15"
    assert fmt_rational(Fraction(3)) == "3/1"
    with pytest.raises(TypeError):
        as_rational(0.1)
    with pytest.raises(ValueError):
        as_rational("abc")
