#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy fallback.

Three workloads:
  degree-sweep   per-labeling degree-condition checks (the classify/scan loop)
  charpoly       exact int64 characteristic polynomials of partial transposes
  end-to-end     full classification of graphs on 6 vertices (subprocess,
                 toggled via LAPSEP_PURE)

Run from the repository root:  python3 benchmarks/bench_backends.py
"""

import os
import random
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lapsep import _kernels_py
from lapsep.density import density_matrix, matrix_partial_transpose
from lapsep.graphs import random_graph, to_graph6
from lapsep.labeling import TensorShape, VertexLabeling
from lapsep.ptgraph import split_of_shape

try:
    from lapsep import _kernels
except ImportError:
    _kernels = None

REPEAT = 5


def timeit(fn):
    best = float("inf")
    for _ in range(REPEAT):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_degree_sweep(backend):
    rng = random.Random(1)
    cases = []
    for _ in range(50):
        g = random_graph(6, rng, 0.5)
        eu, ev = g.edge_arrays
        perms = np.array([p for p in __import__("itertools").permutations(range(6))],
                         dtype=np.int64)
        cases.append((eu, ev, perms))

    def run():
        for eu, ev, perms in cases:
            backend.degree_condition_batch(eu, ev, perms, 2, 3)

    return timeit(run), 50 * 720


def bench_charpoly(backend):
    rng = random.Random(2)
    shape = TensorShape((3, 3))
    split = split_of_shape(shape)
    mats = []
    perm = list(range(9))
    while len(mats) < 2000:
        g = random_graph(9, rng, 0.5)
        if g.is_empty:
            continue
        rng.shuffle(perm)
        rho = density_matrix(g, VertexLabeling(shape, tuple(perm)))
        mats.append(np.ascontiguousarray(
            matrix_partial_transpose(rho.numerator, split)))

    def run():
        for m in mats:
            backend.charpoly_int64(m)

    return timeit(run), len(mats)


def bench_end_to_end(pure: bool):
    # full (unreduced) classification of graphs on 6 vertices plus reduced
    # classification at n=9: the scan workloads the kernels actually serve
    rng = random.Random(3)
    lines6, lines9 = [], []
    while len(lines6) < 60:
        g = random_graph(6, rng, 0.5)
        if not g.is_empty:
            lines6.append(to_graph6(g))
    while len(lines9) < 10:
        g = random_graph(9, rng, 0.5)
        if not g.is_empty:
            lines9.append(to_graph6(g))
    env = dict(os.environ)
    env["LAPSEP_PURE"] = "1" if pure else "0"
    env.pop("PYTHONPATH", None)
    code = (
        "import sys; sys.path.insert(0, 'src')\n"
        "from lapsep.classify import scan\n"
        "from lapsep.labeling import TensorShape\n"
        f"rows = scan({lines6!r}, TensorShape((2, 3)), reduced=False)\n"
        "assert all(r.ok for r in rows)\n"
        f"rows = scan({lines9!r}, TensorShape((3, 3)))\n"
        "assert all(r.ok for r in rows)\n")
    start = time.perf_counter()
    subprocess.run([sys.executable, "-c", code], env=env, check=True,
                   cwd=os.path.join(os.path.dirname(__file__), ".."))
    return time.perf_counter() - start, len(lines6) + len(lines9)


def main():
    if _kernels is None:
        print("compiled kernels not built; showing pure backend only")
    rows = []
    for name, bench in (("degree-sweep", bench_degree_sweep),
                        ("charpoly", bench_charpoly)):
        t_py, units = bench(_kernels_py)
        if _kernels is not None:
            t_cy, _ = bench(_kernels)
            rows.append((name, units, t_py, t_cy))
        else:
            rows.append((name, units, t_py, None))

    t_e2e_py, n_graphs = bench_end_to_end(pure=True)
    t_e2e_cy = bench_end_to_end(pure=False)[0] if _kernels is not None else None
    rows.append((f"end-to-end ({n_graphs} graphs)", n_graphs, t_e2e_py, t_e2e_cy))

    print(f"{'workload':<28}{'units':>8}{'python':>12}{'cython':>12}{'speedup':>9}")
    for name, units, t_py, t_cy in rows:
        cy = f"{t_cy:.4f}s" if t_cy is not None else "-"
        speed = f"{t_py / t_cy:.1f}x" if t_cy else "-"
        print(f"{name:<28}{units:>8}{t_py:>11.4f}s{cy:>12}{speed:>9}")


if __name__ == "__main__":
    main()
