#!/usr/bin/env python3
"""Benchmark the elimination kernels: compiled vs numpy vs pure Python.

The mod-p elimination inside the certified rank engine is the hot inner loop
of every cohomogeneity computation; this script times one representative
workload (rank of the compact-form bracket matrix of an E6 orbit sample) and
a synthetic mod-p matrix across the available kernels, plus the Bareiss
reference.

Run:  python benchmarks/bench_rank.py [--big]
"""

import argparse
import random
import time

import numpy as np

import orbitatlas._modp as modp
from orbitatlas._modp import LimbMatrix, _rank_mod_p_numpy, _rank_mod_p_python, prime_stream
from orbitatlas.linalg import _rank_bareiss, _rank_certified

try:
    from orbitatlas import _corex
except ImportError:
    _corex = None


def timeit(fn, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def synthetic(n, m, bits, seed=0):
    rng = random.Random(seed)
    return [[rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(m)] for _ in range(n)]


def bench_modp(rows, label):
    p = prime_stream(0)
    limbs = LimbMatrix(rows)
    res = limbs.residues(p)
    print(f"-- {label}: {len(rows)}x{len(rows[0])}, prime {p}")
    if _corex is not None:
        r, dt = timeit(lambda: _corex.rank_mod_p(np.ascontiguousarray(res.copy()), p))
        print(f"   compiled kernel : rank {r:4d}   {dt*1e3:9.2f} ms")
    r, dt = timeit(lambda: _rank_mod_p_numpy(res.copy(), p))
    print(f"   numpy kernel    : rank {r:4d}   {dt*1e3:9.2f} ms")
    pyrows = [[int(v) for v in row] for row in res]
    r, dt = timeit(lambda: _rank_mod_p_python([row[:] for row in pyrows], p), repeat=1)
    print(f"   python kernel   : rank {r:4d}   {dt*1e3:9.2f} ms")


def bench_exact(rows, label):
    n, m = len(rows), len(rows[0])
    print(f"-- {label}: exact rank of {n}x{m}")
    r, dt = timeit(lambda: _rank_certified([row[:] for row in rows], n, m), repeat=1)
    print(f"   certified multi-prime : rank {r:4d}   {dt*1e3:9.2f} ms")
    r, dt = timeit(lambda: _rank_bareiss([row[:] for row in rows], m), repeat=1)
    print(f"   Bareiss (reference)   : rank {r:4d}   {dt*1e3:9.2f} ms")


def orbit_workload():
    from orbitatlas.chevalley import build_algebra
    from orbitatlas.cohom import SampleConfig, sample_orbit_point
    from orbitatlas.orbits import min_orbit_representative

    a = build_algebra("E6")
    x = sample_orbit_point(a, min_orbit_representative(a), SampleConfig(seed=1), 0)
    ints = a._clear_denoms(x)
    rows = []
    for beta in a.rs.positive_roots:
        ve = a.apply_ad_basis_int(a.root_vector_index(beta), ints)
        vf = a.apply_ad_basis_int(a.root_vector_index(tuple(-c for c in beta)), ints)
        rows.append([p - q for p, q in zip(ve, vf)])
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--big", action="store_true", help="add a 248x496 synthetic case")
    args = ap.parse_args()
    print(f"selected backend: {modp.backend_name()}")
    bench_modp(synthetic(120, 240, 64, seed=2), "synthetic 64-bit entries")
    rows = orbit_workload()
    bench_modp(rows, "E6 orbit bracket matrix")
    bench_exact(rows, "E6 orbit bracket matrix")
    if args.big:
        bench_modp(synthetic(248, 496, 96, seed=3), "synthetic E8-sized")


if __name__ == "__main__":
    main()
