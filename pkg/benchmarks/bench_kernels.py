#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the pure-Python fallback,
and the identifying-vector distance algorithm against the naive rank route.

Usage: python3 benchmarks/bench_kernels.py [--trials N]
"""

from __future__ import annotations

import argparse
import random
import time

from subspacecodes import kernels
from subspacecodes.constructions import multilevel_fixture
from subspacecodes.distances import _pack_rows, distance_fast, distance_naive
from subspacecodes.fields import make_field
from subspacecodes.subspaces import from_span


def build_code(name: str):
    gf2 = make_field(2, 1)
    code = multilevel_fixture(name, gf2)
    ids = [w.id_vector.packed() for w in code.words]
    gens = [_pack_rows(w) for w in code.words]
    return code, ids, gens


def bench_min_distance(name: str = "w8k4"):
    code, ids, gens = build_code(name)
    pairs = len(ids) * (len(ids) - 1) // 2
    print(f"min distance of the {name} code: {len(ids)} words, {pairs} pairs")
    impls = kernels.implementations()
    results = {}
    for label, impl in impls.items():
        t0 = time.perf_counter()
        d = impl.code_min_distance(ids, gens)
        dt = time.perf_counter() - t0
        results[label] = (d, dt)
        print(f"  {label:>9}: distance {d} in {dt:8.3f} s  ({pairs / dt:,.0f} pairs/s)")
    values = {d for d, _ in results.values()}
    assert len(values) == 1, f"implementations disagree: {results}"


def random_pair(gf2, n: int, k: int, rng: random.Random):
    def one():
        return from_span(
            [[rng.randrange(2) for _ in range(n)] for _ in range(k)], gf2, n
        )

    return one(), one()


def bench_distance_algorithms(n: int = 64, k: int = 32, trials: int = 200):
    gf2 = make_field(2, 1)
    rng = random.Random(1)
    pairs = [random_pair(gf2, n, k, rng) for _ in range(trials)]
    t0 = time.perf_counter()
    naive = [distance_naive(u, w) for u, w in pairs]
    t_naive = time.perf_counter() - t0
    t0 = time.perf_counter()
    fast = [distance_fast(u, w) for u, w in pairs]
    t_fast = time.perf_counter() - t0
    assert naive == fast
    print(f"single-pair distance at n={n}, k={k} ({trials} random pairs):")
    print(f"  naive rank of stacked generators: {t_naive:7.3f} s")
    print(f"  identifying-vector algorithm:     {t_fast:7.3f} s")
    print(f"  speedup: {t_naive / t_fast:4.2f}x")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    args = ap.parse_args()
    print(f"compiled extension available: {kernels.COMPILED}")
    bench_min_distance("w6k3")
    bench_min_distance("w8k4")
    bench_distance_algorithms(trials=args.trials)


if __name__ == "__main__":
    main()
