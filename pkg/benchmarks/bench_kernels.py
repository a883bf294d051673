"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Workloads: face tracing over every orientable embedding of K5 (the genus
polynomial inner loop) and canonical codes of every locally orientable
embedding of K4 plus a sample of K5 embeddings.
"""

from __future__ import annotations

import argparse
import sys
import time

from mapgeom._kernels import compiled_backend, python_backend
from mapgeom.embedding import enumerate_locally_orientable, enumerate_orientable
from mapgeom.graph import complete_graph


def face_tracing(backend, perms):
    total = 0
    for P in perms:
        total += backend.cycle_count(P) + backend.cycle_count(backend.face_permutation(P))
    return total


def canonical_codes(backend, perms):
    return [backend.canonical_code(P) for P in perms]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sample", type=int, default=200, help="K5 maps used for canonical codes")
    args = ap.parse_args(argv)
    if compiled_backend is None:
        print("compiled kernels are not built; reinstall without MAPGEOM_NO_EXTENSION", file=sys.stderr)
        return 1

    k5 = [M.P for M in enumerate_orientable(complete_graph(5))]
    k4 = [M.P for M in enumerate_locally_orientable(complete_graph(4))]
    k5_sample = k5[:: max(1, len(k5) // args.sample)][: args.sample]
    workloads = [
        (f"face tracing, K5 orientable ({len(k5)} maps)", face_tracing, k5),
        (f"canonical code, K4 locally orientable ({len(k4)} maps)", canonical_codes, k4),
        (f"canonical code, K5 sample ({len(k5_sample)} maps)", canonical_codes, k5_sample),
    ]
    print(f"{'workload':<52} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn, perms in workloads:
        tp, out_p = best_of(lambda: fn(python_backend, perms), args.repeat)
        tc, out_c = best_of(lambda: fn(compiled_backend, perms), args.repeat)
        if out_p != out_c:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<52} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
