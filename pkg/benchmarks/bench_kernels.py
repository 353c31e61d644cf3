"""Compare the compiled kernels against the numpy fallback.

Run: ``python benchmarks/bench_kernels.py [--repeat N]``. Prints one line per
kernel with the best-of-N time for each backend and the speedup, after
checking that both backends agree.
"""
import argparse
import timeit

import numpy as np

from bivid import _pykernels as py

try:
    from bivid import _ckernels as cy
except ImportError:  # extension not built
    cy = None


def cases(rng):
    x = rng.standard_normal((16, 32, 10, 18, 18)).astype(np.float32)
    cols = py.im2col3d(x, (3, 3, 3), (1, 1, 1))
    shape = x.shape
    a = rng.standard_normal((64, 64))
    spd = a @ a.T
    return [
        ("im2col3d 16x32x10x18x18 k3", lambda k: k.im2col3d(x, (3, 3, 3), (1, 1, 1))),
        ("col2im3d 16x32x10x18x18 k3", lambda k: k.col2im3d(cols, shape, (3, 3, 3), (1, 1, 1))),
        ("im2col3d stride2", lambda k: k.im2col3d(x, (3, 3, 3), (2, 2, 2))),
        ("jacobi_eigh 64x64", lambda k: k.jacobi_eigh(spd)),
    ]


def agree(a, b):
    if isinstance(a, tuple):  # (eigenvalues, eigenvectors, sweeps)
        return np.allclose(np.sort(a[0]), np.sort(b[0]), rtol=1e-9, atol=1e-9)
    return np.allclose(a, b, rtol=1e-6, atol=1e-6)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if cy is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'numpy [ms]':>11s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, fn in cases(rng):
        if not agree(fn(py), fn(cy)):
            raise SystemExit(f"{name}: backends disagree")
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:32s} {1e3 * t_py:11.2f} {1e3 * t_cy:12.2f} {t_py / t_cy:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
