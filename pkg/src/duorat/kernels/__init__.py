"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

The backend is fixed at import time from ``DUORAT_ACCEL`` (``numba`` or
``numpy``); if numba cannot be imported the numpy path is used. Both
implementations stay importable as :mod:`._numpy` and :mod:`._numba` so the
two can be compared directly.
"""

import numpy as np

from .._config import accel_backend
from . import _numpy

BACKEND = accel_backend()
if BACKEND == "numba":
    try:
        from . import _numba as _impl
    except ImportError:  # pragma: no cover - numba missing
        BACKEND = "numpy"
        _impl = _numpy
else:
    _impl = _numpy


def pair_residue_witness(xlo: int, xhi: int, ylo: int, yhi: int, m: int, coprime: bool):
    """First (x, y) in lexicographic order hitting each residue x*y mod m.

    Returns two int64 arrays of length m; a zero entry means unreachable.
    """
    return _impl.pair_residue_witness(int(xlo), int(xhi), int(ylo), int(yhi), int(m), bool(coprime))


def min_max_table(q: int):
    """For every unit c mod q, the solution of x*y = c (mod q), 1 <= x, y < q,
    minimising max(x, y) with ties broken by smaller x. Non-units map to 0."""
    return _impl.min_max_table(int(q))


def weighted_abs_exp_sums(num, den, weight):
    """|sum_k weight[k] * e(num[i, k] / den[k])| for every row i."""
    num = np.ascontiguousarray(num, dtype=np.int64)
    den = np.ascontiguousarray(den, dtype=np.int64)
    weight = np.ascontiguousarray(weight, dtype=np.float64)
    if num.ndim != 2 or num.shape[1] != den.shape[0] or den.shape != weight.shape:
        raise ValueError("shape mismatch in weighted_abs_exp_sums")
    if num.shape[1] == 0:
        return np.zeros(num.shape[0], dtype=np.float64)
    return _impl.weighted_abs_exp_sums(num, den, weight)
