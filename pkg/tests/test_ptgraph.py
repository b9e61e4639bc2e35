import random

import pytest

from lapsep.graphs import (complete_graph, graph_from_edges, random_graph)
from lapsep.labeling import TensorShape, VertexLabeling, enumerate_labelings
from lapsep.ptgraph import (BipartiteSplit, all_cuts, degree_condition,
                            expand_labeling, partial_transpose_graph,
                            pt_degrees, single_factor_split, split_labeling,
                            split_of_shape, split_position_map)

SH22 = TensorShape((2, 2))
SPLIT22 = split_of_shape(SH22)


def k22_parts_03_12():
    """K_{2,2} with parts {0,3} and {1,2}; tuples (1,1),(2,2) vs (1,2),(2,1)."""
    return graph_from_edges(4, [(0, 1), (0, 2), (3, 1), (3, 2)])


def test_k22_fixed_under_pt():
    g = k22_parts_03_12()
    lab = VertexLabeling.identity(SH22)  # 0->(1,1) 1->(1,2) 2->(2,1) 3->(2,2)
    ptg = partial_transpose_graph(g, lab, SPLIT22)
    assert ptg == g
    assert degree_condition(g, lab, SPLIT22)


def test_p4_worked_example():
    p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    lab = VertexLabeling.identity(SH22)
    ptg = partial_transpose_graph(p4, lab, SPLIT22)
    # image edges: {(1,1),(1,2)}, {(1,1),(2,2)}, {(2,1),(2,2)} = ids (0,1),(0,3),(2,3)
    assert ptg.edges == ((0, 1), (0, 3), (2, 3))
    deg, ptdeg = pt_degrees(p4, lab, SPLIT22)
    assert deg[0] == 1 and ptdeg[0] == 2
    assert not degree_condition(p4, lab, SPLIT22)


def test_complete_graph_always_passes():
    for shape in (SH22, TensorShape((2, 3)), TensorShape((3, 3))):
        g = complete_graph(shape.n)
        for lab in list(enumerate_labelings(shape.n, shape, reduced=True))[:10]:
            for split in all_cuts(shape):
                assert degree_condition(g, lab, split)


def _random_case(rng, shape):
    g = random_graph(shape.n, rng, 0.2 + 0.6 * rng.random())
    perm = list(range(shape.n))
    rng.shuffle(perm)
    return g, VertexLabeling(shape, tuple(perm))


@pytest.mark.parametrize("factors", [(2, 2), (2, 3), (2, 4), (3, 3), (2, 2, 2)])
def test_pt_involution_and_edge_count(factors):
    shape = TensorShape(factors)
    rng = random.Random(sum(factors))
    for _ in range(250):
        g, lab = _random_case(rng, shape)
        for split in all_cuts(shape):
            ptg = partial_transpose_graph(g, lab, split)
            assert ptg.edge_count == g.edge_count
            assert sum(ptg.degrees) == sum(g.degrees)
            assert partial_transpose_graph(ptg, lab, split) == g


def test_same_row_and_column_edges_are_fixed():
    shape = TensorShape((3, 3))
    split = split_of_shape(shape)
    lab = VertexLabeling.identity(shape)
    # same row: (1,1)-(1,2) is ids 0-1; same column: (1,1)-(2,1) is ids 0-3
    g = graph_from_edges(9, [(0, 1), (0, 3)])
    assert partial_transpose_graph(g, lab, split) == g


def test_split_construction_and_validation():
    shape = TensorShape((2, 3, 2))
    cuts = all_cuts(shape)
    assert [(c.p, c.q) for c in cuts] == [(2, 6), (3, 4), (2, 6)]
    assert cuts[1].left_factors == (1,) and cuts[1].right_factors == (0, 2)
    with pytest.raises(ValueError):
        BipartiteSplit(1, 4)
    with pytest.raises(ValueError):
        single_factor_split(shape, 5)
    with pytest.raises(ValueError):
        split_of_shape(shape)
    # a split whose advertised p disagrees with its factor grouping
    with pytest.raises(ValueError):
        split_position_map(shape, BipartiteSplit(3, 4, (0,), (1, 2)))


def test_split_labeling_roundtrip():
    shape = TensorShape((2, 3, 2))
    rng = random.Random(9)
    perm = list(range(12))
    for split in all_cuts(shape):
        for _ in range(10):
            rng.shuffle(perm)
            lab = VertexLabeling(shape, tuple(perm))
            bip = split_labeling(lab, split)
            assert bip.shape.factors == (split.p, split.q)
            assert expand_labeling(bip, shape, split) == lab


def test_split_labeling_consistency_of_tuples():
    # regrouped tuple must be (factor-i coordinate, packed rest)
    shape = TensorShape((2, 3))
    split = single_factor_split(shape, 1)  # p=3 side is factor 1
    lab = VertexLabeling.identity(shape)
    bip = split_labeling(lab, split)
    for v in range(6):
        full = lab.assignment(v)
        u, w = bip.assignment(v)
        assert u == full[1] and w == full[0]


def test_degree_condition_agrees_with_materialized_graph():
    shape = TensorShape((2, 4))
    rng = random.Random(13)
    for _ in range(100):
        g, lab = _random_case(rng, shape)
        for split in all_cuts(shape):
            ptg = partial_transpose_graph(g, lab, split)
            assert degree_condition(g, lab, split) == (ptg.degrees == g.degrees)
