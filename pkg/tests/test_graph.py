import pytest
from hypothesis import given, settings

from spectral_extremal.graph import (
    EdgeList, Graph, GraphError, graph_from_edges, independence_number, is_bipartite,
    is_triangle_free,
)

from conftest import colorable_brute, graphs, has_triangle_brute


def test_from_edges_basic():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.num_edges() == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert graph_from_edges(g.edge_list()) == g


@pytest.mark.parametrize("edges, msg", [
    ([(0, 4)], "outside"),
    ([(1, 1)], "loop"),
    ([(0, 1), (1, 0)], "duplicate"),
])
def test_from_edges_errors(edges, msg):
    with pytest.raises(GraphError, match=msg):
        graph_from_edges(EdgeList(4, edges))


def test_from_rows_checks():
    with pytest.raises(GraphError, match="asymmetric"):
        Graph.from_rows([0b10, 0])
    with pytest.raises(GraphError, match="loop"):
        Graph.from_rows([0b1])
    with pytest.raises(GraphError, match="outside"):
        Graph.from_rows([0b100, 0])
    assert Graph.from_rows([0b10, 0b01]).num_edges() == 1


def test_large_order_rows():
    n = 300
    g = graph_from_edges(n, [(0, n - 1), (5, 200)])
    assert g.has_edge(n - 1, 0) and g.degree(200) == 1
    assert len(g.components()) == n - 2


def test_edit_operations():
    g = graph_from_edges(3, [(0, 1)])
    h = g.add_edges([(1, 2)]).remove_edges([(0, 1)])
    assert h.edges() == [(1, 2)]
    with pytest.raises(GraphError):
        g.add_edges([(0, 1)])
    with pytest.raises(GraphError):
        g.remove_edges([(1, 2)])


def test_induced_and_union():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.induced([3, 2, 1]).edges() == [(0, 1), (1, 2)]
    assert g.delete_vertex(1).edges() == [(1, 2)]
    u = g.disjoint_union(Graph.empty(2))
    assert u.n == 6 and u.num_edges() == 3 and not u.is_connected()


@given(graphs())
def test_triangle_free_matches_brute_force(g):
    assert is_triangle_free(g) == (not has_triangle_brute(g))


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_bipartite_matches_two_colouring(g):
    assert is_bipartite(g) == colorable_brute(g, 2)


@given(graphs())
def test_permute_preserves_structure(g):
    perm = list(range(g.n))[::-1]
    h = g.permute(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@given(graphs(max_n=9))
def test_independence_number_brute(g):
    best = 0
    for mask in range(1 << g.n):
        if all(not (g.adj[v] & mask) for v in range(g.n) if mask >> v & 1):
            best = max(best, bin(mask).count("1"))
    assert independence_number(g) == best


@given(graphs())
def test_components_partition(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    for c in comps:
        assert g.induced(c).is_connected()
