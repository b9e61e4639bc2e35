import random

import pytest
from hypothesis import given, settings, strategies as st

from lapsep.errors import Graph6Error
from lapsep.graphs import (Graph, complement, complete_bipartite, complete_graph,
                           edges_between, graph_from_edges, is_linear_forest,
                           parse_graph6, random_graph, to_graph6)


def bitmask_graph(n: int, mask: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return graph_from_edges(n, [p for k, p in enumerate(pairs) if (mask >> k) & 1])


# -- builders ------------------------------------------------------------------

def test_complete_graph():
    g = complete_graph(4)
    assert g.edge_count == 6 and all(d == 3 for d in g.degrees)
    assert complete_graph(1).edge_count == 0
    assert complete_graph(9).edge_count == 36
    with pytest.raises(ValueError):
        complete_graph(0)


def test_complete_bipartite():
    g = complete_bipartite(2, 2)
    assert g.edge_count == 4 and all(d == 2 for d in g.degrees)
    star = complete_bipartite(1, 5)
    assert star.degrees == (5, 1, 1, 1, 1, 1)
    assert complete_bipartite(3, 6).edge_count == 18
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)


def test_complement():
    assert complement(complete_graph(4)).is_empty
    two_k2 = complement(complete_bipartite(2, 2))
    assert two_k2.edges == ((0, 1), (2, 3))
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph(7, rng)
        assert complement(complement(g)) == g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10,) * 2 + (0,))  # row count mismatch
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # self-loop at 0
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 1)])


# -- edges_between -------------------------------------------------------------

def test_edges_between_examples():
    k22 = complete_bipartite(2, 2)
    assert edges_between(k22, [0, 1], [2, 3]) == 4
    assert edges_between(k22, [], [0, 1]) == 0
    p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    # by hand: 0-1 crosses, 2-3 crosses, 1-2 is inside B
    assert edges_between(p4, [0, 3], [1, 2]) == 2
    with pytest.raises(ValueError):
        edges_between(p4, [0, 1], [1, 2])
    with pytest.raises(ValueError):
        edges_between(p4, [0], [9])


def test_edges_between_additivity():
    rng = random.Random(2)
    for _ in range(50):
        g = random_graph(9, rng)
        verts = list(range(9))
        rng.shuffle(verts)
        a, b, c = verts[:3], verts[3:6], verts[6:]
        assert (edges_between(g, a, b) + edges_between(g, a, c)
                == edges_between(g, a, b + c))


def test_degree_sum_is_twice_edges():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(8, rng, rng.random())
        assert sum(g.degrees) == 2 * g.edge_count


# -- graph6 --------------------------------------------------------------------

def test_graph6_known_strings():
    k4 = parse_graph6("C~")
    assert k4 == complete_graph(4)
    empty4 = parse_graph6("C?")
    assert empty4.n == 4 and empty4.is_empty
    assert to_graph6(complete_graph(4)) == "C~"


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_fixture_roundtrip(roundtrip_lines):
    for line in roundtrip_lines:
        assert to_graph6(parse_graph6(line)) == line


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_graph(n, rng, rng.random())
        line = to_graph6(g)
        ref = nx.from_graph6_bytes(line.encode())
        assert set(ref.edges()) == set(g.edges)
        ref_line = nx.to_graph6_bytes(ref, header=False).decode().strip()
        assert ref_line == line


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0))
def test_graph6_roundtrip_property(n, seed):
    mask = seed % (1 << (n * (n - 1) // 2))
    g = bitmask_graph(n, mask)
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_roundtrip_thousand_random_graphs():
    rng = random.Random(44)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = random_graph(n, rng, rng.random())
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C")  # truncated: needs one data byte
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C~~")  # trailing byte
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C\x1f")  # data byte below 63
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("~~~")  # multi-byte size
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error):
        parse_graph6("B~")  # n=3 needs 3 bits; '~' sets a padding bit


def test_graph6_size_limit():
    with pytest.raises(ValueError):
        to_graph6(graph_from_edges(63, []))


# -- linear forests -------------------------------------------------------------

def test_is_linear_forest():
    assert is_linear_forest(graph_from_edges(4, [(0, 1), (2, 3)]))
    assert is_linear_forest(graph_from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert is_linear_forest(graph_from_edges(3, []))
    assert not is_linear_forest(graph_from_edges(3, [(0, 1), (1, 2), (2, 0)]))
    assert not is_linear_forest(complete_bipartite(1, 3))  # degree-3 hub
