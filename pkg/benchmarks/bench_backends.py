"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 5]

Each kernel runs once untimed (JIT warm-up), then best-of-``repeat``.
"""

import argparse
import time

import numpy as np

from endogate._backend import get_kernels
from endogate._bits import n_words
from endogate.reptheory import standard_generators


def best_of(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    m = 32
    a = rng.integers(0, 1 << m, size=(4096, m), dtype=np.uint64)
    b = rng.integers(0, 1 << m, size=(4096, m), dtype=np.uint64)
    nbits = m * m
    cands = rng.integers(0, 2**63, size=(2 * nbits, n_words(nbits)), dtype=np.uint64)
    y = rng.integers(0, 2**63, size=(900, n_words(500)), dtype=np.uint64)

    def insert(k):
        basis = np.zeros((nbits, n_words(nbits)), dtype=np.uint64)
        piv = np.zeros(nbits, dtype=np.int64)
        k.insert_batch(basis, piv, 0, cands)

    spin = {}
    for n in (13, 17):
        mats = standard_generators("A_n", n).qb_matrices()
        spin[n] = np.array([x.columns() for x in mats], dtype=np.uint64)

    return {
        "matmul_batch 4096 x 32x32": lambda k: k.matmul_batch(a, b),
        "flatten 4096 x 32x32": lambda k: k.flatten(a, m),
        "insert_batch 2048 into 1024 bits": insert,
        "nullspace 900 x 500": lambda k: k.nullspace(y),
        "spin n=13 (4095 vectors)": lambda k: k.first_reducible_vector(spin[13], 12),
        "spin n=17 (65535 vectors)": lambda k: k.first_reducible_vector(spin[17], 16),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = {name: get_kernels(name) for name in ("numpy", "numba")}
    rows = []
    for label, fn in cases(np.random.default_rng(0)).items():
        t = {name: best_of(lambda k=k: fn(k), args.repeat) for name, k in backends.items()}
        rows.append((label, t["numpy"], t["numba"]))
    w = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{w}}  {'numpy ms':>10}  {'numba ms':>10}  {'speedup':>8}")
    for label, tn, tb in rows:
        print(f"{label:<{w}}  {tn * 1e3:10.2f}  {tb * 1e3:10.2f}  {tn / tb:8.1f}x")


if __name__ == "__main__":
    main()
