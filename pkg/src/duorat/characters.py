"""Dirichlet characters mod q stored as exponent vectors.

The unit group is split into cyclic factors: a primitive root for each odd
prime power, -1 and 5 for 2**e (e >= 3), -1 alone for 4. A character is a
vector (e_1, ..., e_k) with e_i taken mod the order n_i of generator g_i, and

    chi(n) = e( sum_i e_i * log_i(n) / n_i ).

With lam = lcm(n_i) the phase is the integer sum_i e_i log_i(n) (lam/n_i)
mod lam, so all group arithmetic stays exact until the final exponential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from ._config import check_span
from .arith import arithmetic_functions, coprime_count, factorize
from .errors import NotCoprime, PreconditionViolated, PrincipalCharacter

MAX_TABLE_Q = 10**6


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    qs = [r for r, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in qs):
            return g
    raise AssertionError(f"no primitive root mod {p}")


def _crt_lift(residue: int, mod: int, q: int) -> int:
    """The n mod q with n = residue (mod `mod`) and n = 1 modulo q/mod."""
    rest = q // mod
    if rest == 1:
        return residue % q
    # n = residue + mod*t, need residue + mod*t = 1 (mod rest)
    t = ((1 - residue) * pow(mod, -1, rest)) % rest
    return (residue + mod * t) % q


@dataclass(frozen=True)
class _Component:
    modulus: int  # prime power p**e
    gen: int  # generator mod p**e
    order: int


class CharacterTable:
    """All phi(q) characters mod q; immutable once built."""

    def __init__(self, q: int):
        if q < 1:
            raise PreconditionViolated("q must be positive")
        if q > MAX_TABLE_Q:
            raise PreconditionViolated(f"character tables limited to q <= {MAX_TABLE_Q}")
        check_span(q, "character table")
        self.q = q
        comps: list[_Component] = []
        for p, e in factorize(q):
            pe = p**e
            if p == 2:
                if e == 2:
                    comps.append(_Component(pe, pe - 1, 2))
                elif e >= 3:
                    comps.append(_Component(pe, pe - 1, 2))
                    comps.append(_Component(pe, 5, 2 ** (e - 2)))
            else:
                g = primitive_root(p)
                if e > 1 and pow(g, p - 1, p * p) == 1:
                    g += p
                comps.append(_Component(pe, g, (p - 1) * p ** (e - 1)))
        self._comps = tuple(comps)
        self.orders = tuple(c.order for c in comps)
        self.generators = tuple((_crt_lift(c.gen, c.modulus, q), c.order) for c in comps)
        self.phi = arithmetic_functions(q).phi
        self.lam = math.lcm(*self.orders) if self.orders else 1
        assert math.prod(self.orders) == self.phi

    def __len__(self) -> int:
        return self.phi

    @cached_property
    def unit_mask(self) -> np.ndarray:
        return np.gcd(np.arange(self.q), self.q) == 1

    @cached_property
    def logs(self) -> np.ndarray:
        """(q, k) discrete logs per generator; -1 rows for non-units."""
        q = self.q
        k = len(self._comps)
        out = np.full((q, k), -1, dtype=np.int64)
        n = np.arange(q, dtype=np.int64)
        unit = self.unit_mask
        out[unit] = 0
        i = 0
        while i < k:
            c = self._comps[i]
            pe = c.modulus
            r = n % pe
            if pe % 2 == 0 and pe >= 8:
                # n = (-1)^s 5^t mod 2^e: s from n mod 4, t from the 5-power table
                s = np.where(r % 4 == 3, 1, 0)
                signed = np.where(s == 1, (pe - r) % pe, r)
                table = np.full(pe, -1, dtype=np.int64)
                x = 1
                for t in range(self._comps[i + 1].order):
                    table[x] = t
                    x = x * 5 % pe
                out[unit, i] = s[unit]
                out[unit, i + 1] = table[signed[unit]]
                i += 2
                continue
            table = np.full(pe, -1, dtype=np.int64)
            x = 1
            for t in range(c.order):
                table[x] = t
                x = x * c.gen % pe
            out[unit, i] = table[r[unit]]
            i += 1
        out.setflags(write=False)
        return out

    def exponent_vector(self, index: int) -> tuple[int, ...]:
        """Mixed-radix digits of ``index``, first generator least significant."""
        if not 0 <= index < self.phi:
            raise IndexError(f"character index {index} out of range for q={self.q}")
        out = []
        for n in self.orders:
            index, d = divmod(index, n)
            out.append(d)
        return tuple(out)

    def index_of(self, vec: Sequence[int]) -> int:
        idx = 0
        for d, n in zip(reversed(vec), reversed(self.orders)):
            idx = idx * n + d % n
        return idx

    def characters(self) -> list[tuple[int, ...]]:
        return [self.exponent_vector(i) for i in range(self.phi)]

    def _weights(self, vec) -> np.ndarray:
        return np.array([e * (self.lam // n) for e, n in zip(vec, self.orders)], dtype=np.int64)

    def phases(self, index: int) -> np.ndarray:
        """chi(n) = e(phase[n]/lam) for n = 0..q-1; -1 marks chi(n) = 0."""
        vec = self.exponent_vector(index)
        logs = self.logs
        ph = (logs * self._weights(vec)[None, :]).sum(axis=1) % self.lam
        ph[~self.unit_mask] = -1
        return ph

    def phase_matrix(self) -> np.ndarray:
        """(phi, q) integer phases of every character; -1 where chi vanishes."""
        W = np.array([self._weights(self.exponent_vector(i)) for i in range(self.phi)], dtype=np.int64)
        ph = (W.reshape(self.phi, len(self.orders)) @ self.logs.T) % self.lam
        ph[:, ~self.unit_mask] = -1
        return ph

    def values(self, index: int | None = None) -> np.ndarray:
        """Complex values; one row per character, or a single row."""
        ph = self.phase_matrix() if index is None else self.phases(index)
        out = np.exp(2j * np.pi * (ph % self.lam) / self.lam)
        out[ph < 0] = 0
        return out

    def value(self, index: int, n: int) -> complex:
        return complex(self.values(index)[n % self.q])

    def is_principal(self, index: int) -> bool:
        return all(e == 0 for e in self.exponent_vector(index))


@lru_cache(maxsize=32)
def character_table(q: int) -> CharacterTable:
    """Shared, immutable table for q; repeated calls reuse the discrete logs."""
    return CharacterTable(q)


def orthogonality_check(q: int) -> float:
    """max |sum_n chi(n) conj(chi'(n)) - phi(q)[chi = chi']| over all pairs."""
    if q > 10**4:
        raise PreconditionViolated("orthogonality check limited to q <= 10**4")
    t = character_table(q)
    V = t.values()
    G = V @ V.conj().T
    return float(np.abs(G - t.phi * np.eye(t.phi)).max())


@dataclass(frozen=True)
class CountComparison:
    direct: int
    via_characters: float
    main_term: float
    discrepancy: float


def solution_count_via_characters(q: int, a: int, P: Sequence[int], B: int) -> CountComparison:
    """Count (p1, p2, b), p1 != p2 in P, 1 <= b <= B, with a p1 p2 = b (mod q),
    directly and through character orthogonality."""
    if math.gcd(a, q) != 1:
        raise NotCoprime(f"gcd({a}, {q}) != 1")
    bad = [p for p in P if math.gcd(p, q) != 1]
    if bad:
        raise NotCoprime(f"primes {bad} share a factor with {q}")
    if not 1 <= B <= q:
        raise PreconditionViolated(f"need 1 <= B <= q, got B={B}")
    P = list(P)
    direct = 0
    for i, p1 in enumerate(P):
        for j, p2 in enumerate(P):
            if i == j:
                continue
            r = (a * p1 * p2) % q or q
            if r <= B:
                direct += 1

    t = character_table(q)
    V = t.values()
    Pi = np.asarray(P, dtype=np.int64) % q
    chi_p = V[:, Pi] if len(P) else np.zeros((t.phi, 0), dtype=complex)
    s = chi_p.sum(axis=1)
    s2 = (chi_p**2).sum(axis=1)
    pair_sum = V[:, a % q] * (s * s - s2)
    b_sum = V[:, np.arange(1, B + 1) % q].conj().sum(axis=1)
    via = float(np.real((pair_sum * b_sum).sum()) / t.phi)
    b_coprime = coprime_count(q, B).count
    main = len(P) * (len(P) - 1) * b_coprime / t.phi
    return CountComparison(direct, via, main, abs(direct - via))


@dataclass(frozen=True)
class CharSumMax:
    max_partial: float
    pv_bound: float
    glh_shape: float
    glh_ratio: float
    holds: bool


def char_sum_max(q: int, index: int) -> CharSumMax:
    """max_{M <= q} |sum_{n <= M} chi(n)| against sqrt(q) ln q.

    ``glh_ratio`` is max_M |S(M)| / sqrt(M), for eyeballing square-root
    cancellation; it is never checked against anything.
    """
    t = character_table(q)
    if t.is_principal(index):
        raise PrincipalCharacter(f"character {index} mod {q} is principal")
    vals = t.values(index)
    seq = np.concatenate([vals[1:], vals[:1]])  # n = 1..q
    partial = np.abs(np.cumsum(seq))
    M = np.arange(1, q + 1)
    mp = float(partial.max())
    pv = math.sqrt(q) * math.log(q)
    return CharSumMax(mp, pv, math.sqrt(q), float((partial / np.sqrt(M)).max()), mp <= pv)
