import networkx as nx
import pytest
from hypothesis import given

from spectral_extremal.constructions import cycle, grotzsch
from spectral_extremal.graph import Graph, graph_from_edges
from spectral_extremal.graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6, write_graph6

from conftest import graphs, to_nx


def test_small_known_strings():
    assert graph6_encode(cycle(3)) == "Bw"
    assert graph6_decode("A?") == Graph.empty(2)
    assert graph6_decode("?") == Graph.empty(0)


@given(graphs(max_n=20))
def test_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(max_n=12))
def test_matches_networkx(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6_encode(g) == expected


def test_large_order_prefix():
    g = graph_from_edges(100, [(0, 99)])
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s) == g
    assert graph6_encode(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_header_accepted():
    assert graph6_decode(">>graph6<<Bw") == cycle(3)


@pytest.mark.parametrize("text, offset", [
    ("Bw!", 2),        # surplus byte
    ("C", 1),          # truncated data
    ("B ", 1),         # character out of range
    ("Bx", 1),         # padding bit set
    ("", 0),           # empty
])
def test_errors_report_offsets(text, offset):
    with pytest.raises(Graph6Error) as e:
        graph6_decode(text)
    assert e.value.offset == offset


def test_stream_helpers():
    text = write_graph6([cycle(5), grotzsch()])
    assert list(read_graph6(text.splitlines() + [""])) == [cycle(5), grotzsch()]
