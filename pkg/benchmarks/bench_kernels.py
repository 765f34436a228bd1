"""Time the numba kernels against their pure-numpy fallbacks.

Runs the Bruhat comparability matrix on S_6 and S_7 and the dense
Kazhdan-Lusztig fill on S_5 and S_6, once per path, and reports the
best of --repeat runs.  The numba path gets one untimed warmup call so
compilation cost is not mixed into the numbers.  Outputs are compared
for equality before any timing is reported.

Run with KOSTANTPV_NO_NUMBA=1 to confirm the script degrades to
fallback-only reporting.
"""

import argparse
import time

import numpy as np

from kostantpv import _kernels
from kostantpv.groupindex import group_index


def best_of(repeat, fn, *args):
    best = float('inf')
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(name, repeat, numba_fn, numpy_fn, *args):
    ref = numpy_fn(*args)
    rows = []
    if _kernels.HAS_NUMBA:
        got = numba_fn(*args)
        if not np.array_equal(got, ref):
            raise SystemExit(f'{name}: numba and numpy outputs disagree')
        numba_fn(*args)  # warmup is already done; keep caches hot
        rows.append(('numba', best_of(repeat, numba_fn, *args)))
    rows.append(('numpy', best_of(repeat, numpy_fn, *args)))
    for path, t in rows:
        print(f'{name:24s} {path:6s} {t * 1e3:10.2f} ms')
    if len(rows) == 2:
        print(f'{name:24s} {"ratio":6s} {rows[1][1] / rows[0][1]:10.1f} x')


def kl_args(n):
    g = group_index(n)
    maxlen = int(g.lengths[g.w0_idx])
    return (
        g.order_by_length,
        g.lengths,
        g.first_left_descent,
        g.lmul,
        g.leq,
        maxlen // 2 + 1,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        '--repeat', type=int, default=3, help='timed runs per case (best kept)'
    )
    args = parser.parse_args()

    if not _kernels.HAS_NUMBA:
        print('numba path unavailable; timing the numpy fallback only')

    for n in (6, 7):
        dom = group_index(n).dominance
        bench_case(
            f'leq_matrix S_{n}',
            args.repeat,
            _kernels.leq_matrix,
            _kernels.leq_matrix_numpy,
            dom,
        )
    for n in (5, 6):
        bench_case(
            f'kl_fill S_{n}',
            args.repeat,
            _kernels.kl_fill,
            _kernels.kl_fill_numpy,
            *kl_args(n),
        )


if __name__ == '__main__':
    main()
