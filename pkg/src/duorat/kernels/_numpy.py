"""Pure-numpy versions of the hot loops; reference path and numba fallback."""

import math

import numpy as np

# rows of the (x, y) product grid materialised at once
_CHUNK_CELLS = 1 << 22


def pair_residue_witness(xlo, xhi, ylo, yhi, m, coprime):
    wx = np.zeros(m, dtype=np.int64)
    wy = np.zeros(m, dtype=np.int64)
    if xhi < xlo or yhi < ylo:
        return wx, wy
    ys = np.arange(ylo, yhi + 1, dtype=np.int64)
    ymod = ys % m
    rows = max(1, _CHUNK_CELLS // len(ys))
    seen = np.zeros(m, dtype=bool)
    for start in range(xlo, xhi + 1, rows):
        xs = np.arange(start, min(start + rows, xhi + 1), dtype=np.int64)
        res = ((xs % m)[:, None] * ymod[None, :]) % m
        if coprime:
            ok = np.gcd.outer(xs, ys) == 1
        else:
            ok = np.ones(res.shape, dtype=bool)
        flat = res.ravel()
        idx = np.flatnonzero(ok.ravel())
        vals, first = np.unique(flat[idx], return_index=True)
        fresh = ~seen[vals]
        vals = vals[fresh]
        pos = idx[first[fresh]]
        wx[vals] = xs[pos // len(ys)]
        wy[vals] = ys[pos % len(ys)]
        seen[vals] = True
        if seen.all():
            break
    return wx, wy


def min_max_table(q):
    bx = np.zeros(q, dtype=np.int64)
    by = np.zeros(q, dtype=np.int64)
    if q < 2:
        return bx, by
    units = np.gcd(np.arange(q), q) == 1
    size = max(2, math.isqrt(q) + 1)
    while True:
        size = min(size, q - 1)
        v = np.arange(1, size + 1, dtype=np.int64)
        X, Y = np.meshgrid(v, v, indexing="ij")
        X = X.ravel()
        Y = Y.ravel()
        res = (X * Y) % q
        order = np.lexsort((Y, X, np.maximum(X, Y)))
        vals, first = np.unique(res[order], return_index=True)
        keep = units[vals]
        vals = vals[keep]
        pick = order[first[keep]]
        if len(vals) == int(units.sum()) or size == q - 1:
            bx[vals] = X[pick]
            by[vals] = Y[pick]
            return bx, by
        size *= 2


def weighted_abs_exp_sums(num, den, weight):
    num = np.asarray(num, dtype=np.int64)
    den = np.asarray(den, dtype=np.int64)
    weight = np.asarray(weight, dtype=np.float64)
    ang = 2.0 * np.pi * (num / den[None, :])
    re = np.cos(ang) * weight[None, :]
    im = np.sin(ang) * weight[None, :]
    out = np.empty(num.shape[0], dtype=np.float64)
    for i in range(num.shape[0]):
        out[i] = math.hypot(math.fsum(re[i]), math.fsum(im[i]))
    return out
