"""Compare the compiled kernels with the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Reports the best of
several repeats per kernel and size, plus the speedup of the extension.
"""

import argparse
import timeit

import numpy as np

from superfuzz import _fallback

try:
    from superfuzz import _kernels
except ImportError:
    _kernels = None


def _cases(rng, n):
    a = rng.integers(0, 11, (n, n)) / 10
    b = rng.integers(0, 11, (n, n)) / 10
    raw = rng.integers(-3, 4, 50 * n).astype(float)
    clamp = rng.integers(0, 2, 50 * n).astype(bool)
    prev = rng.integers(0, 2, 50 * n).astype(float)
    u = np.zeros(50 * n)
    return {
        "maxmin_matmul": (a, b),
        "threshold_update": (raw, clamp),
        "bam_signal": (raw, prev, u),
    }


def _best(fn, args, repeat, number):
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 128])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled kernels not built; nothing to compare")
        return 1
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<18}{'n':>6}{'numpy us':>12}{'cython us':>12}{'speedup':>10}")
    for n in args.sizes:
        for name, call_args in _cases(rng, n).items():
            slow = getattr(_fallback, name)
            fast = getattr(_kernels, name)
            np.testing.assert_array_equal(slow(*call_args), fast(*call_args))
            t_np = _best(slow, call_args, args.repeat, args.number)
            t_cy = _best(fast, call_args, args.repeat, args.number)
            print(f"{name:<18}{n:>6}{t_np * 1e6:>12.1f}{t_cy * 1e6:>12.1f}{t_np / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
