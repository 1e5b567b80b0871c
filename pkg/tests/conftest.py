import math
from fractions import Fraction

import pytest


def naive_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def naive_primes(lo, hi):
    return [p for p in range(max(2, math.ceil(lo)), math.floor(hi) + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]


@pytest.fixture
def rng():
    import random

    return random.Random(20240607)


def rand_rational(r, max_den=10**6):
    d = r.randint(1, max_den)
    return Fraction(r.randrange(d), d)


# one invocation per CLI leaf command, shared by the CLI and determinism tests
CLI_CASES = [
    "approx single --alpha 355/113 --n 50",
    "approx single --alpha 0.375 --n 7 --best",
    "approx duo --alpha 5/7 --n 3",
    "approx duo --alpha 123457/1000003 --n 40 --oracle",
    "approx duo --alpha 2/97 --n 30 --distinct-primes",
    "hyperbola solve --q 7 --c 3 --box 1,10,1,10",
    "hyperbola min --q 13 --c 5",
    "hyperbola lift --q 101 --c 7 --box 1,12,1,12 --coprime",
    "hyperbola coverage --q 97 --box 3,12,3,12",
    "hyperbola classify --a 9 --q 11 --n 8",
    "sums et --points 1/4,3/4,1/3 --l 4",
    "sums s1s2 --q 211 --a 5 --n 40",
    "sums drprofile --n 30",
    "sums thm7 --q 7 --n 6 --l 1",
    "chars table --q 12",
    "chars ortho --q 60",
    "chars count --q 31 --a 3 --n 40 --b 15",
    "chars pv --q 31 --chi 5",
    "lab conj0 --samples 6 --n 10 --n 17 --beta 1/2",
    "lab conj2 --q-lo 2 --q-hi 120",
    "lab conj3 --q-lo 2 --q-hi 40 --theta 3/4",
    "lab conj3 --q 7 --c 3 --n 7",
    "lab thm4 --n 10 --epsilon 1/2 --q-cap 31",
]


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
