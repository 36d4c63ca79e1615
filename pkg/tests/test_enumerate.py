import logging

import pytest

from spectral_extremal.canonical import canonical_rows
from spectral_extremal.constructions import cycle, grotzsch
from spectral_extremal.enumerate import (
    EnumerationError, EnumFilter, IngestError, brute_force_all, enumerate_triangle_free,
    ingest_graph6, triangle_free_levels,
)
from spectral_extremal.graph import Graph, is_bipartite, is_triangle_free
from spectral_extremal.graph6 import graph6_encode
from spectral_extremal.verify import EdgeBoundPrune

from conftest import has_triangle_brute

# triangle-free graphs up to isomorphism, orders 1..10 (OEIS A006785)
KNOWN_COUNTS = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]


@pytest.mark.parametrize("n", range(1, 7))
def test_matches_brute_force_oracle(n):
    fast = [g.adj for g in enumerate_triangle_free(n)]
    slow = [g.adj for g in brute_force_all(n, lambda g: not has_triangle_brute(g))]
    assert fast == slow


def test_known_counts():
    assert [len(triangle_free_levels(n)) for n in range(1, 11)] == KNOWN_COUNTS


def test_outputs_are_canonical_and_triangle_free():
    for g in enumerate_triangle_free(8):
        assert is_triangle_free(g)
        assert canonical_rows(g) == g.adj


def test_workers_do_not_change_output():
    assert list(enumerate_triangle_free(8, workers=2)) == list(enumerate_triangle_free(8, workers=1))


def test_filters():
    conn = list(enumerate_triangle_free(6, EnumFilter(connected_only=True)))
    # connected triangle-free graphs on 6 vertices (OEIS A024607)
    assert all(g.is_connected() for g in conn) and len(conn) == 19
    nb = list(enumerate_triangle_free(5, EnumFilter(non_bipartite_only=True)))
    assert [canonical_rows(g) for g in nb] == [canonical_rows(cycle(5))]
    assert all(not is_bipartite(g) for g in nb)
    f = EnumFilter(min_chromatic=3)
    assert f.accepts(cycle(5)) and not f.accepts(cycle(6))
    assert EnumFilter().to_dict()["require_triangle_free"] is True


def test_chromatic_filter_empty_below_eleven(caplog):
    with caplog.at_level(logging.INFO):
        assert list(enumerate_triangle_free(8, EnumFilter(min_chromatic=4))) == []
    assert "empty by theory" in caplog.text


def test_prune_keeps_everything_at_or_above_threshold():
    prune = EdgeBoundPrune(12)
    kept = list(enumerate_triangle_free(8, prune=prune))
    full = [g for g in enumerate_triangle_free(8) if g.num_edges() >= 12]
    assert kept == full


def test_refusals():
    with pytest.raises(EnumerationError, match="about 467,871,369"):
        list(enumerate_triangle_free(14))
    with pytest.raises(EnumerationError):
        brute_force_all(8)
    with pytest.raises(EnumerationError):
        list(enumerate_triangle_free(3, EnumFilter(min_chromatic=5)))


def test_ingest_skips_bad_lines(caplog):
    lines = [graph6_encode(cycle(5)), "B!", "", graph6_encode(grotzsch()), "Bx"]
    errors = []
    with caplog.at_level(logging.WARNING):
        got = list(ingest_graph6(lines, errors))
    assert got == [cycle(5), grotzsch()]
    assert [e.line for e in errors] == [2, 5]
    assert isinstance(errors[0], IngestError)
    assert "line 2" in caplog.text


def test_brute_force_counts_all_graphs():
    # graphs up to isomorphism on 1..5 vertices (OEIS A000088)
    assert [len(brute_force_all(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert brute_force_all(0) == [Graph(0, ())]
