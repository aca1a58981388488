"""Compare the compiled and pure-numpy kernel paths on identical scans.

Usage: python benchmarks/bench_kernels.py [--size 24] [--repeat 3]

The compiled path is whatever `quandlekit.kernels` selected at import
time (numba if installed and QUANDLEKIT_NO_NUMBA is unset); the fallback
path is always the private *_numpy implementation.
"""

import argparse
import time

import numpy as np

from quandlekit import finite_quandle as fq
from quandlekit import kernels
from quandlekit import welded as wd


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _row(name, fast, slow):
    speedup = slow / fast if fast > 0 else float("inf")
    print(f"{name:<34} {fast * 1e3:10.2f} ms {slow * 1e3:10.2f} ms {speedup:8.2f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=24, help="orbit size m = n")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    Q = fq.q_mn(args.size, args.size)
    table = np.asarray(Q.table, dtype=np.int64)
    print(f"backend: {kernels.backend_name()}   quandle size: {Q.n}")
    print(f"{'kernel':<34} {'selected':>13} {'numpy':>13} {'speedup':>9}")

    # warm up any JIT compilation outside the timed region
    kernels.distributive_witness(table)
    kernels.reductive_witness(table, 2)
    kernels.weak_witness(table, 2)

    fast, a = _time(lambda: kernels.distributive_witness(table), args.repeat)
    slow, b = _time(lambda: kernels._distributive_witness_numpy(table), args.repeat)
    assert (a is None) == (b is None)
    _row("distributive_witness", fast, slow)

    for c in (2, 3):
        fast, a = _time(lambda: kernels.reductive_witness(table, c), args.repeat)
        slow, b = _time(lambda: kernels._reductive_witness_numpy(table, c), args.repeat)
        assert (a is None) == (b is None)
        _row(f"reductive_witness (c={c})", fast, slow)

    fast, a = _time(lambda: kernels.weak_witness(table, 2), args.repeat)
    slow, b = _time(lambda: kernels._weak_witness_numpy(table, 2), args.repeat)
    assert (a is None) == (b is None)
    _row("weak_witness (c=2)", fast, slow)

    nstr = 3
    beta = wd.commutator(wd.K(1, 2, nstr), wd.K(1, 3, nstr))
    sigma = np.array(beta.sigma, dtype=np.int64)
    letters, offsets = kernels.pack_words(beta.ws)
    rows_inv = np.asarray(Q.inv_table, dtype=np.int64)
    kernels.braid_fixes_all(table, rows_inv, sigma, letters, offsets, nstr)
    fast, a = _time(
        lambda: kernels.braid_fixes_all(table, rows_inv, sigma, letters, offsets, nstr),
        args.repeat,
    )
    slow, b = _time(
        lambda: kernels._braid_fixes_all_numpy(
            table, rows_inv, sigma, letters, offsets, nstr
        ),
        args.repeat,
    )
    assert (a is None) == (b is None)
    _row(f"braid_fixes_all (n={nstr})", fast, slow)


if __name__ == "__main__":
    main()
