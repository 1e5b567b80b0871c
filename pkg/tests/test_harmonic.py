import cmath
import math
import random
from fractions import Fraction

import pytest

from duorat.arith import primes_in_range
from duorat.errors import NotCoprime, PreconditionViolated
from duorat.harmonic import (
    d_r_profile,
    default_L,
    dist_to_int,
    et_inequality,
    parseval_check,
    s1_bound_thm7,
    s2_cauchy_schwarz,
    s_sums_thm6,
)


def e(x):
    return cmath.exp(2j * math.pi * x)


def direct_s(q, a, N, L):
    P = [p for p in range(2, N + 1) if 2 * p >= N and all(p % d for d in range(2, math.isqrt(p) + 1))]
    s1 = sum(abs(sum(e(l * p1 * p2 * a / q) for p1 in P for p2 in P)) for l in range(1, L + 1))
    s2 = sum(abs(sum(e(l * p * p * a / q) for p in P)) for l in range(1, L + 1))
    return s1, s2


def test_dist_to_int():
    assert dist_to_int(Fraction(3, 4)) == Fraction(1, 4)
    assert dist_to_int(Fraction(-1, 3)) == Fraction(1, 3)
    assert dist_to_int(5) == 0


def test_et_examples():
    r = et_inequality([Fraction(1, 2)], 2)
    assert r.hypothesis_ok and r.lhs == pytest.approx(2) and r.holds
    r = et_inequality([Fraction(1, 4), Fraction(3, 4)], 4)
    assert r.hypothesis_ok and r.lhs == pytest.approx(4) and r.rhs == Fraction(1, 3)
    assert not et_inequality([0], 3).hypothesis_ok


def test_et_matches_direct():
    r = random.Random(1)
    for _ in range(100):
        pts = [Fraction(r.randint(0, 60), r.randint(1, 60)) for _ in range(r.randint(1, 8))]
        L = r.randint(1, 30)
        direct = sum(abs(sum(e(l * float(x)) for x in pts)) for l in range(1, L + 1))
        assert et_inequality(pts, L).lhs == pytest.approx(direct, abs=1e-9)


def test_et_law_random():
    r = random.Random(11)
    for _ in range(1000):
        J = r.randint(1, 50)
        pts = []
        while len(pts) < J:
            d = r.randint(2, 1000)
            n = r.randint(1, d - 1)
            pts.append(Fraction(n, d))
        L = math.ceil(1 / min(dist_to_int(p) for p in pts)) + r.randint(0, 5)
        res = et_inequality(pts, L)
        assert res.hypothesis_ok and res.holds


def test_s_sums_example():
    rep = s_sums_thm6(7, 1, 6, 1)
    assert rep.S2 == pytest.approx(abs(e(2 / 7) + e(4 / 7)), abs=1e-12)
    assert rep.S2 == pytest.approx(1.2470, abs=1e-4)
    assert rep.S1 == pytest.approx(abs(e(2 / 7) + 2 * e(1 / 7) + e(4 / 7)), abs=1e-12)
    assert rep.S1 == pytest.approx(2.108, abs=1e-3)
    assert rep.P_size == 2 and rep.threshold == pytest.approx(4 / 7)
    assert rep.passes == (rep.S1 + rep.S2 <= 4 / 7)


def test_s_sums_empty_prime_set():
    rep = s_sums_thm6(7, 1, 1, 3)
    assert rep.S1 == rep.S2 == 0 and rep.P_size == 0


@pytest.mark.parametrize("q,a,N,L", [(11, 3, 20, 4), (30, 7, 15, 6), (101, 5, 40, 10), (64, 9, 25, 3)])
def test_s_sums_vs_direct(q, a, N, L):
    rep = s_sums_thm6(q, a, N, L)
    s1, s2 = direct_s(q, a, N, L)
    assert rep.S1 == pytest.approx(s1, abs=1e-9)
    assert rep.S2 == pytest.approx(s2, abs=1e-9)


def test_s_sums_not_coprime():
    with pytest.raises(NotCoprime):
        s_sums_thm6(10, 4, 20, 2)


def test_cauchy_schwarz_chain():
    r = random.Random(4)
    for _ in range(100):
        q = r.randint(2, 500)
        a = r.randint(1, q)
        if math.gcd(a, q) != 1:
            continue
        chk = s2_cauchy_schwarz(q, a, r.randint(1, 100), r.randint(1, min(20, q)))
        assert chk.holds


def test_cauchy_schwarz_needs_l_le_q():
    with pytest.raises(PreconditionViolated):
        s2_cauchy_schwarz(5, 1, 20, 6)


@pytest.mark.parametrize("q,a,N", [(7, 1, 30), (97, 5, 100), (360, 7, 80), (2, 1, 50)])
def test_parseval(q, a, N):
    chk = parseval_check(q, a, N)
    assert chk.rel_error <= 1e-6


def test_d_r_examples():
    prof = d_r_profile(15, [3, 5])
    assert prof.counts[15] == 2
    assert prof.counts[9] == 1
    assert prof.counts.get(7, 0) == 0


def test_d_r_vs_direct():
    P = [11, 13, 17, 19]
    L = 60
    prof = d_r_profile(L, P, 20)
    for r in range(1, L * 20 + 1):
        direct = sum(1 for l in range(1, L + 1) for p in P if l * p == r)
        assert prof.counts.get(r, 0) == direct
    assert prof.bound_checked and prof.bound_holds


def test_d_r_bound_can_fail_for_small_primes():
    # 2, 3, 5, 7 all divide 210, so d_210 = 4 once L >= 105
    prof = d_r_profile(105, [2, 3, 5, 7])
    assert prof.counts[210] == 4 and not prof.bound_checked


def test_thm7_examples():
    r = s1_bound_thm7(7, 6, 1)
    # the r = 7 term contributes |4| = 4 (four integers in [3, 6])
    direct = (1 * 6 / 7) * sum(abs(sum(e(r_ * m / 7) for m in range(3, 7))) for r_ in range(1, 8))
    assert r.T_exact == pytest.approx(direct, abs=1e-9)
    assert r.cap == pytest.approx(6 * 2 * math.log(7))
    assert r.cap == pytest.approx(23.35, abs=0.01)
    assert s1_bound_thm7(7, 6, 0).T_exact == 0


def test_default_L():
    assert default_L(100, 10, 1.25, 0.1) == math.floor(100 * 10 ** (1.25 - 2.1)) + 1
