"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the structure-constant sweep and the group-algebra convolution on real
group data and prints per-backend timings with the speedup.  Results are
checked for equality, so this doubles as a large-input parity test.

    python benchmarks/bench_kernels.py [--n 6] [--conv-n 5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from array import array

from descentd._kernels import _pure
from descentd.coxeter import group_data

try:
    from descentd._kernels import _speedups
except ImportError:
    _speedups = None


def _sweep_args(n):
    gd = group_data(n, "D")
    free_l = array("i", (gd.full_mask ^ m for m in gd.des_l))
    free_r = array("i", (gd.full_mask ^ m for m in gd.des_r))
    return gd, (free_l, free_r, gd.conj, gd.n_gen)


def _convolve_args(n):
    gd = group_data(n, "D")
    cols = gd.cayley_cols()
    des_r = gd.des_r
    # the widest convolution: both factors over the whole group
    everything = array("i", range(gd.size))
    return gd, (cols, everything, everything, gd.size)


def _time(fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench(name, fn_name, args, repeat):
    pure_t, pure_out = _time(getattr(_pure, fn_name), args, repeat)
    line = f"{name:28s} pure {pure_t:8.3f}s"
    if _speedups is not None:
        fast_t, fast_out = _time(getattr(_speedups, fn_name), args, repeat)
        same = pure_out == fast_out if not isinstance(pure_out, list) else list(pure_out) == list(fast_out)
        line += f"   compiled {fast_t:8.3f}s   speedup {pure_t / fast_t:6.1f}x   equal={same}"
        if not same:
            raise SystemExit(f"backend mismatch in {name}")
    else:
        line += "   (compiled kernels unavailable)"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6, help="rank for the sweep benchmark")
    parser.add_argument("--conv-n", type=int, default=5, help="rank for the convolution benchmark")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    gd, sweep_args = _sweep_args(args.n)
    print(f"structure sweep over D_{args.n} (group order {gd.size})")
    bench(f"structure_sweep D_{args.n}", "structure_sweep", sweep_args, args.repeat)

    gd, conv_args = _convolve_args(args.conv_n)
    print(f"full-group convolution in D_{args.conv_n} ({gd.size}^2 products)")
    bench(f"convolve_counts D_{args.conv_n}", "convolve_counts", conv_args, args.repeat)


if __name__ == "__main__":
    main()
