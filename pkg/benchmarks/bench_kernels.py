"""Benchmark the compiled scatter kernel against the pure-numpy fallback.

The scatter-add over edge lists is the hot non-BLAS kernel behind the
kernel-integral encoder/decoder (forward segment sums and gather adjoints).
Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from sparsepde.autodiff import kernels
from sparsepde.autodiff._scatter_np import scatter_add_rows as numpy_impl

try:
    from sparsepde.autodiff._scatter_cy import scatter_add_rows as cython_impl
except ImportError:
    cython_impl = None


def _time(fn, out_shape, idx, vals, repeats=10):
    best = float("inf")
    for _ in range(repeats):
        out = np.zeros(out_shape, dtype=vals.dtype)
        t0 = time.perf_counter()
        fn(out, idx, vals)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_scatter():
    rng = np.random.default_rng(0)
    print(f"active backend: {kernels.backend()}")
    print(f"{'edges':>9} {'width':>6} {'numpy (ms)':>11} {'cython (ms)':>12} {'speedup':>8}")
    for edges, width in [(10_000, 8), (10_000, 64), (100_000, 32), (300_000, 32),
                         (1_000_000, 16)]:
        idx = rng.integers(0, max(edges // 16, 1), edges).astype(np.int64)
        idx.sort()
        vals = rng.standard_normal((edges, width)).astype(np.float32)
        segments = int(idx.max()) + 1
        t_np = _time(numpy_impl, (segments, width), idx, vals)
        if cython_impl is None:
            print(f"{edges:>9} {width:>6} {t_np * 1e3:>11.2f} {'-':>12} {'-':>8}")
            continue
        t_cy = _time(cython_impl, (segments, width), idx, vals)
        out_a = np.zeros((segments, width), dtype=np.float32)
        out_b = np.zeros((segments, width), dtype=np.float32)
        numpy_impl(out_a, idx, vals)
        cython_impl(out_b, idx, vals)
        assert np.array_equal(out_a, out_b), "backends disagree"
        print(f"{edges:>9} {width:>6} {t_np * 1e3:>11.2f} {t_cy * 1e3:>12.2f} "
              f"{t_np / t_cy:>7.1f}x")


def bench_encode():
    from sparsepde.gino import GinoEncoder
    from sparsepde.grids import PointCloud

    rng = np.random.default_rng(1)
    enc = GinoEncoder(2, 32, width=32, rng=rng)
    clouds = [
        PointCloud(rng.uniform(0, 1, (500, 2)), rng.standard_normal((500, 2)))
        for _ in range(16)
    ]
    indexes = [enc.build_index(c) for c in clouds]
    import sparsepde.autodiff as ad

    with ad.no_grad():
        t0 = time.perf_counter()
        for _ in range(5):
            enc.encode_batch(clouds, indexes)
        dt = (time.perf_counter() - t0) / 5
    edges = sum(ix.num_edges for ix in indexes)
    print(f"\nencode_batch: 16 clouds x 500 pts -> 32x32 grid "
          f"({edges} edges): {dt * 1e3:.1f} ms")


if __name__ == "__main__":
    bench_scatter()
    bench_encode()
