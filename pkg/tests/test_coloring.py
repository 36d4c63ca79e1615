import pytest
from hypothesis import given, settings

from spectral_extremal.coloring import chromatic_number, is_k_colorable
from spectral_extremal.constructions import complete_bipartite, cycle, grotzsch, turan
from spectral_extremal.graph import Graph, graph_from_edges

from conftest import colorable_brute, graphs


@given(graphs(max_n=6))
@settings(max_examples=80)
def test_k_colorable_matches_exhaustive(g):
    for k in range(0, 4):
        assert is_k_colorable(g, k) == colorable_brute(g, k)


def test_known_chromatic_numbers():
    petersen = graph_from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                                + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                                + [(i, i + 5) for i in range(5)])
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(Graph.empty(3)) == 1
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(complete_bipartite(3, 4)) == 2
    assert chromatic_number(petersen) == 3
    assert chromatic_number(grotzsch()) == 4
    assert chromatic_number(turan(7, 4)) == 4


def test_negative_k():
    with pytest.raises(ValueError):
        is_k_colorable(cycle(3), -1)
