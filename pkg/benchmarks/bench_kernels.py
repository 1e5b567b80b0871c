"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--scale 1]

Each kernel is called once on both backends to warm the JIT, outputs are
checked for agreement, and the best of ``--repeat`` wall-clock runs is shown.
"""

import argparse
import time

import numpy as np

from duorat.kernels import _numba, _numpy


def best_time(fn, args, repeat):
    out = fn(*args)  # warm-up, also compiles the numba version
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(scale):
    rng = np.random.default_rng(0)
    q = 2003 * scale
    yield "pair_residue_witness", (1, 60 * scale, 1, 60 * scale, q, True)
    yield "min_max_table", (1999 * scale,)
    R, K = 400 * scale, 500
    den = rng.integers(2, 10**6, size=K, dtype=np.int64)
    num = rng.integers(0, 10**6, size=(R, K), dtype=np.int64) % den
    yield "weighted_abs_exp_sums", (num, den, rng.random(K))


def agree(a, b):
    if isinstance(a, tuple):
        return all(agree(x, y) for x, y in zip(a, b))
    if a.dtype.kind == "f":
        return np.allclose(a, b, rtol=0, atol=1e-9)
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--scale", type=int, default=1, help="multiply problem sizes")
    args = ap.parse_args()

    print(f"{'kernel':<24}{'numpy s':>12}{'numba s':>12}{'speedup':>10}  agree")
    for name, a in cases(args.scale):
        t_np, out_np = best_time(getattr(_numpy, name), a, args.repeat)
        t_nb, out_nb = best_time(getattr(_numba, name), a, args.repeat)
        print(f"{name:<24}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x  {agree(out_np, out_nb)}")


if __name__ == "__main__":
    main()
