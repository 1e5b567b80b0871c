"""numba-compiled versions of the hot loops. Results match ``_numpy`` exactly
for the integer kernels and to rounding for the exponential sums."""

import math

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def pair_residue_witness(xlo, xhi, ylo, yhi, m, coprime):
    wx = np.zeros(m, dtype=np.int64)
    wy = np.zeros(m, dtype=np.int64)
    left = m
    for x in range(xlo, xhi + 1):
        xm = x % m
        for y in range(ylo, yhi + 1):
            r = (xm * (y % m)) % m
            if wx[r] != 0:
                continue
            if coprime and _gcd(x, y) != 1:
                continue
            wx[r] = x
            wy[r] = y
            left -= 1
        if left == 0:
            break
    return wx, wy


@njit(cache=True, nogil=True)
def min_max_table(q):
    bx = np.zeros(q, dtype=np.int64)
    by = np.zeros(q, dtype=np.int64)
    if q < 2:
        return bx, by
    unit = np.zeros(q, dtype=np.bool_)
    left = 0
    for c in range(q):
        if _gcd(c, q) == 1:
            unit[c] = True
            left += 1
    for m in range(1, q):
        # pairs with max(x, y) == m in (x, y) order
        for x in range(1, m + 1):
            ylo = m if x < m else 1
            for y in range(ylo, m + 1):
                r = (x * y) % q
                if unit[r] and bx[r] == 0:
                    bx[r] = x
                    by[r] = y
                    left -= 1
        if left == 0:
            break
    return bx, by


@njit(cache=True, nogil=True)
def weighted_abs_exp_sums(num, den, weight):
    rows, cols = num.shape
    out = np.empty(rows, dtype=np.float64)
    tau = 2.0 * math.pi
    for i in range(rows):
        # Kahan-compensated real and imaginary parts
        sr = 0.0
        cr = 0.0
        si = 0.0
        ci = 0.0
        for j in range(cols):
            ang = tau * (num[i, j] / den[j])
            w = weight[j]
            t = w * math.cos(ang) - cr
            s = sr + t
            cr = (s - sr) - t
            sr = s
            t = w * math.sin(ang) - ci
            s = si + t
            ci = (s - si) - t
            si = s
        out[i] = math.hypot(sr, si)
    return out
