"""Small simple undirected graphs: bitset adjacency, builders, graph6 I/O.

Vertices are the integers 0..n-1.  Adjacency is kept as one bitmask per
vertex, which is both the fastest representation at this scale and makes
symmetry/degree bookkeeping trivial.  Graphs are immutable values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import Graph6Error

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is a bitmask with bit u set iff {u, v} is an edge.  The
    relation is validated to be symmetric and loop-free on construction.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[v] >> u) & 1 != (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    out.append((v, u))
                row >>= 1
                u += 1
        return tuple(out)

    def neighbors(self, v: int) -> tuple[int, ...]:
        row, u, out = self.rows[v], 0, []
        while row:
            if row & 1:
                out.append(u)
            row >>= 1
            u += 1
        return tuple(out)

    @property
    def is_empty(self) -> bool:
        return self.edge_count == 0

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Edge endpoints as two int64 arrays, for the batch kernels."""
        if self.edge_count == 0:
            z = np.zeros(0, dtype=np.int64)
            return z, z.copy()
        eu, ev = zip(*self.edges)
        return np.array(eu, dtype=np.int64), np.array(ev, dtype=np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with parts {0..r-1} and {r..r+s-1}."""
    if r < 1 or s < 1:
        raise ValueError("complete_bipartite needs r, s >= 1")
    n = r + s
    left = (1 << r) - 1
    right = ((1 << n) - 1) ^ left
    rows = [right] * r + [left] * s
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) ^ (1 << v) for v, row in enumerate(g.rows)))


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one endpoint in a and the other in b.

    a and b must be disjoint vertex sets; edges inside either set are a
    different quantity and are deliberately not defined here.
    """
    sa, sb = set(a), set(b)
    for s in (sa, sb):
        for v in s:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
    if sa & sb:
        raise ValueError("edges_between requires disjoint vertex sets")
    mask_b = 0
    for v in sb:
        mask_b |= 1 << v
    return sum((g.rows[v] & mask_b).bit_count() for v in sa)


def random_graph(n: int, rng: random.Random, edge_prob: float = 0.5) -> Graph:
    """G(n, p) sample from the given RNG."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < edge_prob]
    return graph_from_edges(n, edges)


def is_linear_forest(g: Graph) -> bool:
    """True iff every component of g is a simple path (or isolated vertex).

    Equivalently: maximum degree <= 2 and no cycles.
    """
    if any(d > 2 for d in g.degrees):
        return False
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        # walk the component counting vertices and edges
        stack, comp_vertices, comp_degsum = [start], 0, 0
        seen[start] = True
        while stack:
            v = stack.pop()
            comp_vertices += 1
            comp_degsum += g.degree(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        if comp_degsum // 2 != comp_vertices - 1:  # edges == vertices-1 iff tree
            return False
    return True


# -- graph6 ------------------------------------------------------------------
#
# Standard printable encoding for simple graphs: one size byte (n + 63 for
# n <= 62) followed by the upper-triangle adjacency bits in column-major
# order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed big-endian six bits
# per byte, zero-padded, each 6-bit group offset by 63.

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte in graph6 string", exc.start) from None
    size = data[0]
    if size == 126:
        raise Graph6Error("multi-byte graph6 sizes (n > 62) not supported", 0)
    if not 63 <= size <= 125:
        raise Graph6Error(f"invalid size byte {size}", 0)
    n = size - 63
    if n == 0:
        raise Graph6Error("graph6 with zero vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise Graph6Error("truncated graph6 bit stream", len(data))
    if len(data) - 1 > nbytes:
        raise Graph6Error("trailing bytes after graph6 bit stream", 1 + nbytes)

    rows = [0] * n
    bit = 0
    for k in range(1, 1 + nbytes):
        byte = data[k]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid data byte {byte}", k)
        group = byte - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise Graph6Error("nonzero padding bit", k)
                continue
            if (group >> shift) & 1:
                u, v = _g6_bit_to_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _g6_bit_to_pair(bit: int) -> tuple[int, int]:
    # bit index -> (row, column) in upper-triangle column-major order
    v = 1
    while v * (v - 1) // 2 <= bit:
        v += 1
    v -= 1
    return bit - v * (v - 1) // 2, v


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output limited to n <= {GRAPH6_MAX_N}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.adjacent(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = (group << 1) | b
        out.append(chr(group + 63))
    return "".join(out)
