"""Compare the compiled and pure-Python LR counting kernels.

Run: python3 benchmarks/bench_lr.py [--repeat N]
Kernels are called directly, so the coefficient cache is not involved.
"""
import argparse
import statistics
import time

from schurkit import _backend
from schurkit.lr import tensor_expand
from schurkit.partitions import Partition


def stretched(nu, lam, mu, n):
    return tuple(n * x for x in nu), tuple(n * x for x in lam), tuple(n * x for x in mu)


def workloads():
    golden = ((5, 3, 2, 1), (3, 1), (4, 2, 1))
    yield "stretched golden N=1..8", [stretched(*golden, n) for n in range(1, 9)]
    lam, mu = Partition([4, 3, 2, 1]), Partition([4, 2, 1])
    yield "full expansion [4,3,2,1]x[4,2,1]", [(tuple(nu), tuple(lam), tuple(mu)) for nu in tensor_expand(lam, mu)]
    lam, mu = Partition([5, 4, 3, 2]), Partition([4, 3, 2, 1])
    yield "full expansion [5,4,3,2]x[4,3,2,1]", [(tuple(nu), tuple(lam), tuple(mu)) for nu in tensor_expand(lam, mu)]


def time_kernel(kernel, queries, repeat):
    samples = []
    for _ in range(repeat):
        t = time.perf_counter()
        for q in queries:
            kernel(*q)
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    compiled = _backend.compiled_count_lr
    if compiled is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':38} {'queries':>7} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, queries in workloads():
        py = time_kernel(_backend.python_count_lr, queries, args.repeat)
        if compiled is None:
            print(f"{name:38} {len(queries):7d} {py:10.4f} {'-':>10} {'-':>8}")
            continue
        assert [compiled(*q) for q in queries] == [_backend.python_count_lr(*q) for q in queries]
        cy = time_kernel(compiled, queries, args.repeat)
        print(f"{name:38} {len(queries):7d} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
