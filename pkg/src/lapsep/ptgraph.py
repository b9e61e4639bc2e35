"""Partial-transpose graphs under a bipartite split and the degree condition.

With vertices addressed as pairs (u, v) in {1..p} x {1..q}, the partial
transpose maps each edge {(u,v),(w,y)} to {(u,y),(w,v)}.  A labeled graph
whose normalized Laplacian is separable must keep every vertex degree fixed
under this map; a degree change certifies entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _backend
from .graphs import Graph, graph_from_edges
from .labeling import TensorShape, VertexLabeling, unflatten


@dataclass(frozen=True)
class BipartiteSplit:
    """A p x q grouping of tensor factors: left block size p, right size q.

    left_factors / right_factors record which factors of the originating
    shape were merged into each side (indices into shape.factors).
    """

    p: int
    q: int
    left_factors: tuple[int, ...] = (0,)
    right_factors: tuple[int, ...] = (1,)

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("both sides of a split must have dimension >= 2")
        if set(self.left_factors) & set(self.right_factors):
            raise ValueError("split factor groups must be disjoint")

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def shape(self) -> TensorShape:
        return TensorShape((self.p, self.q))

    def __str__(self) -> str:
        return f"{self.p}x{self.q}"


def split_of_shape(shape: TensorShape) -> BipartiteSplit:
    """The identity split of a bipartite shape."""
    if shape.m != 2:
        raise ValueError(f"shape {shape} is not bipartite; pick a factor cut")
    return BipartiteSplit(shape.factors[0], shape.factors[1], (0,), (1,))


def single_factor_split(shape: TensorShape, factor: int) -> BipartiteSplit:
    """Factor ``factor`` merged against all remaining factors."""
    if not 0 <= factor < shape.m:
        raise ValueError(f"factor index {factor} out of range for {shape}")
    p = shape.factors[factor]
    rest = tuple(i for i in range(shape.m) if i != factor)
    return BipartiteSplit(p, shape.n // p, (factor,), rest)


def all_cuts(shape: TensorShape) -> tuple[BipartiteSplit, ...]:
    """The splits probed for a shape: each single factor against the rest.

    For a bipartite shape both factor cuts describe the same partial
    transpose up to a global transpose, so only the first is returned.
    """
    if shape.m == 2:
        return (split_of_shape(shape),)
    return tuple(single_factor_split(shape, i) for i in range(shape.m))


@lru_cache(maxsize=None)
def _position_map(factors: tuple[int, ...], left: tuple[int, ...],
                  right: tuple[int, ...]) -> np.ndarray:
    """Map original flat positions to split flat positions u*q + v."""
    shape = TensorShape(factors)
    left_sizes = tuple(factors[i] for i in left)
    right_sizes = tuple(factors[i] for i in right)
    q = 1
    for s in right_sizes:
        q *= s

    def group_flat(tup, idxs, sizes):
        val = 0
        for i, size in zip(idxs, sizes):
            val = val * size + (tup[i] - 1)
        return val

    out = np.empty(shape.n, dtype=np.int64)
    for x in range(shape.n):
        t = unflatten(x, shape)
        u = group_flat(t, left, left_sizes)
        v = group_flat(t, right, right_sizes)
        out[x] = u * q + v
    return out


def split_position_map(shape: TensorShape, split: BipartiteSplit) -> np.ndarray:
    if split.n != shape.n:
        raise ValueError(f"split {split} does not match shape {shape}")
    if set(split.left_factors) | set(split.right_factors) != set(range(shape.m)):
        raise ValueError(f"split {split} does not cover the factors of {shape}")
    left_dim = 1
    for i in split.left_factors:
        left_dim *= shape.factors[i]
    if left_dim != split.p:
        raise ValueError(f"split {split} groups factors of total size {left_dim} "
                         f"on the left, not {split.p}")
    return _position_map(shape.factors, split.left_factors, split.right_factors)


def split_labeling(lab: VertexLabeling, split: BipartiteSplit) -> VertexLabeling:
    """Regroup a labeling into the split's bipartite (p, q) shape."""
    pmap = split_position_map(lab.shape, split)
    return VertexLabeling(split.shape, tuple(int(pmap[x]) for x in lab.perm))


def expand_labeling(bip: VertexLabeling, shape: TensorShape,
                    split: BipartiteSplit) -> VertexLabeling:
    """Inverse of split_labeling: lift a (p, q) labeling back to ``shape``."""
    pmap = split_position_map(shape, split)
    inverse = np.empty_like(pmap)
    inverse[pmap] = np.arange(len(pmap))
    if bip.shape.factors != (split.p, split.q):
        raise ValueError("labeling shape does not match the split")
    return VertexLabeling(shape, tuple(int(inverse[x]) for x in bip.perm))


def _split_positions(g: Graph, lab: VertexLabeling, split: BipartiteSplit) -> np.ndarray:
    if lab.n != g.n:
        raise ValueError("labeling does not cover the graph's vertices")
    pmap = split_position_map(lab.shape, split)
    return pmap[lab.position_array()]


def partial_transpose_graph(g: Graph, lab: VertexLabeling,
                            split: BipartiteSplit) -> Graph:
    """The partial-transpose graph, on the same vertex ids as g.

    Vertex ids are carried through the labeling: the image edge
    {(u,y),(w,v)} joins whichever vertices carry those tuples.  The edge
    map is an involution, so the result is simple and has |E(g)| edges.
    """
    pos = _split_positions(g, lab, split)
    inv = np.empty_like(pos)
    inv[pos] = np.arange(g.n)
    q = split.q
    edges = []
    for a, b in g.edges:
        i, j = int(pos[a]), int(pos[b])
        u, v = divmod(i, q)
        w, y = divmod(j, q)
        edges.append((int(inv[u * q + y]), int(inv[w * q + v])))
    return graph_from_edges(g.n, edges)


def pt_degrees(g: Graph, lab: VertexLabeling,
               split: BipartiteSplit) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(original degree, partial-transpose degree) per vertex id."""
    ptg = partial_transpose_graph(g, lab, split)
    return g.degrees, ptg.degrees


def degree_condition(g: Graph, lab: VertexLabeling, split: BipartiteSplit) -> bool:
    """True iff every vertex keeps its degree in the partial-transpose graph."""
    pos = _split_positions(g, lab, split)
    eu, ev = g.edge_arrays
    result = _backend.degree_condition_batch(eu, ev, pos[None, :], split.p, split.q)
    return bool(result[0])


def degree_condition_batch(g: Graph, positions: np.ndarray,
                           split: BipartiteSplit) -> np.ndarray:
    """Vectorized degree condition over rows of pre-split positions."""
    eu, ev = g.edge_arrays
    return _backend.degree_condition_batch(eu, ev, positions, split.p, split.q)


def block_interaction_graphs(g: Graph, lab: VertexLabeling,
                             split: BipartiteSplit) -> tuple[Graph, Graph]:
    """Row- and column-block interaction graphs of the split.

    The row graph has a node per left-factor index u and an edge {u, w}
    whenever some g-edge joins row u to row w (u != w); likewise for
    columns.  If either graph is a linear forest, the blocks can be ordered
    to make the Laplacian block tridiagonal.
    """
    pos = _split_positions(g, lab, split)
    q = split.q
    row_edges, col_edges = set(), set()
    for a, b in g.edges:
        i, j = int(pos[a]), int(pos[b])
        u, v = divmod(i, q)
        w, y = divmod(j, q)
        if u != w:
            row_edges.add((min(u, w), max(u, w)))
        if v != y:
            col_edges.add((min(v, y), max(v, y)))
    return (graph_from_edges(split.p, sorted(row_edges)),
            graph_from_edges(split.q, sorted(col_edges)))
