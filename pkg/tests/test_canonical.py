import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_extremal.canonical import canonical_form, canonical_labeling, is_isomorphic
from spectral_extremal.constructions import cycle, grotzsch

from conftest import graphs, to_nx


@given(graphs(max_n=10), st.randoms(use_true_random=False))
@settings(max_examples=150)
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.permute(perm)) == canonical_form(g)


@given(graphs(max_n=8), graphs(max_n=8))
@settings(max_examples=150)
def test_isomorphism_agrees_with_networkx(g, h):
    if g.n == h.n:
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_same_degree_sequence_non_isomorphic():
    # C6 versus two disjoint triangles
    c6 = cycle(6)
    two = cycle(3).disjoint_union(cycle(3))
    assert not is_isomorphic(c6, two)


def test_labeling_is_permutation_and_grotzsch_random_relabel():
    g = grotzsch()
    order = canonical_labeling(g)
    assert sorted(order) == list(range(g.n))
    rng = random.Random(7)
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.permute(perm)) == canonical_form(g)
