#!/usr/bin/env python3
"""Regenerate the committed test fixtures.

  n4_nonempty.g6   one graph6 line per nonempty isomorphism class, n=4
  n6_nonempty.g6   same for n=6
  roundtrip.g6     assorted random graphs, n in 1..12, for round-trip tests

Isomorphism classes are found by brute force: every labeled graph on n
vertices is canonicalized to the minimum edge bitmask over all vertex
permutations.  The class counts are cross-checked against the known totals
(11 graphs on 4 vertices, 156 on 6, both including the empty graph).

Run from the repository root:  python3 tools/gen_fixtures.py
"""

import itertools
import pathlib
import random
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from lapsep.graphs import Graph, graph_from_edges, parse_graph6, to_graph6

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
KNOWN_CLASS_COUNTS = {4: 11, 6: 156}  # including the empty graph


def all_iso_classes(n: int) -> list[Graph]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    pair_index = {pair: k for k, pair in enumerate(pairs)}

    # per permutation: where each edge bit moves
    perm_maps = []
    for sigma in itertools.permutations(range(n)):
        perm_maps.append([pair_index[tuple(sorted((sigma[u], sigma[v])))]
                          for u, v in pairs])
    perm_maps = np.array(perm_maps, dtype=np.int64)

    n_graphs = 1 << npairs
    codes = np.arange(n_graphs, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(npairs)) & 1).astype(np.int64)
    weights = (1 << np.arange(npairs, dtype=np.int64))

    canon = np.full(n_graphs, np.iinfo(np.int64).max, dtype=np.int64)
    for pmap in perm_maps:
        permuted = np.zeros_like(bits)
        permuted[:, pmap] = bits
        np.minimum(canon, permuted @ weights, out=canon)

    reps = sorted(set(int(c) for c in canon))
    graphs = []
    for code in reps:
        edges = [pairs[k] for k in range(npairs) if (code >> k) & 1]
        graphs.append(graph_from_edges(n, edges))
    return graphs


def write_iso_fixture(n: int) -> None:
    graphs = all_iso_classes(n)
    assert len(graphs) == KNOWN_CLASS_COUNTS[n], (n, len(graphs))
    nonempty = [g for g in graphs if not g.is_empty]
    lines = [to_graph6(g) for g in nonempty]
    for g, line in zip(nonempty, lines):
        back = parse_graph6(line)
        assert back.rows == g.rows
    path = FIXTURES / f"n{n}_nonempty.g6"
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} graphs)")


def write_roundtrip_fixture() -> None:
    rng = random.Random(20260811)
    lines = []
    for n in range(1, 13):
        for _ in range(10):
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.5]
            lines.append(to_graph6(graph_from_edges(n, edges)))
    path = FIXTURES / "roundtrip.g6"
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} graphs)")


if __name__ == "__main__":
    FIXTURES.mkdir(parents=True, exist_ok=True)
    write_iso_fixture(4)
    write_iso_fixture(6)
    write_roundtrip_fixture()
