"""Benchmark the compiled integer kernels against the pure Python ones.

The two implementations share semantics; this script times the three
hot functions on identical inputs and then times one library-level
workload per backend in a subprocess, since the backend is chosen at
import time.

Usage: python3 benchmarks/bench_kernels.py [--size N] [--repeat K]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from lralg._kernels import pykernels

try:
    from lralg._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def dense_matrix(rng, n, bound):
    return [rng.randint(-bound, bound) for _ in range(n * n)]


def sparse_matrix(rng, n, bound, fill):
    out = [0] * (n * n)
    for idx in range(n * n):
        if rng.random() < fill:
            out[idx] = rng.randint(-bound, bound)
    return out


def workloads(size):
    rng = random.Random(11)
    vec = [rng.randint(-10**6, 10**6) * 12 for _ in range(200_000)]
    dense_a = dense_matrix(rng, size, 50)
    dense_b = dense_matrix(rng, size, 50)
    sparse_a = sparse_matrix(rng, size, 50, 0.08)
    sparse_b = sparse_matrix(rng, size, 50, 0.08)
    rref_in = dense_matrix(rng, size, 9)
    wide = [rng.randint(-3, 3) for _ in range(size * size * 2)]
    return [
        ("content, 200k ints", "content", (vec,)),
        (f"mat_mul dense {size}x{size}", "mat_mul", (dense_a, dense_b, size, size, size)),
        (f"mat_mul sparse {size}x{size}", "mat_mul", (sparse_a, sparse_b, size, size, size)),
        (f"rref dense {size}x{size}", "rref", (rref_in, size, size)),
        (f"rref wide {size}x{2 * size}", "rref", (wide, size, 2 * size)),
    ]


LIBRARY_SNIPPET = """
import time
from fractions import Fraction
from lralg._kernels import backend
from lralg.catalog import filiform
from lralg.construct import complete_any, two_generator_lr

n = 10
g = filiform(n)
e1 = tuple(Fraction(i == 0) for i in range(n))
e2 = tuple(Fraction(i == 1) for i in range(n))
start = time.perf_counter()
for _ in range(5):
    p = two_generator_lr(g, e1, e2)
    complete_any(g, p)
print(backend(), time.perf_counter() - start)
"""


def library_timing(force_python):
    env = dict(os.environ)
    if force_python:
        env["LRALG_KERNELS"] = "python"
    else:
        env.pop("LRALG_KERNELS", None)
    proc = subprocess.run(
        [sys.executable, "-c", LIBRARY_SNIPPET],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    name, seconds = proc.stdout.split()
    return name, float(seconds)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=60, help="matrix side length")
    parser.add_argument("--repeat", type=int, default=5, help="timings per case, best kept")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend not built; showing pure Python timings only")

    width = max(len(label) for label, _, _ in workloads(args.size))
    header = f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in workloads(args.size):
        py = best_of(getattr(pykernels, name), call_args, args.repeat)
        if _ckernels is None:
            print(f"{label:<{width}}  {py * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
            continue
        cy = best_of(getattr(_ckernels, name), call_args, args.repeat)
        assert getattr(pykernels, name)(*call_args) == getattr(_ckernels, name)(*call_args)
        print(f"{label:<{width}}  {py * 1e3:>8.2f}ms  {cy * 1e3:>8.2f}ms  {py / cy:>7.1f}x")

    print()
    name_py, t_py = library_timing(force_python=True)
    name_sel, t_sel = library_timing(force_python=False)
    print(f"library workload (5x two-gen + completion on filiform(10)):")
    print(f"  {name_py:<7} {t_py * 1e3:8.2f}ms")
    print(f"  {name_sel:<7} {t_sel * 1e3:8.2f}ms")
    if name_sel != name_py:
        print(f"  speedup {t_py / t_sel:.1f}x")


if __name__ == "__main__":
    main()
