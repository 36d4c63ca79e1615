from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from spectral_extremal.constructions import complete_bipartite, cycle, grotzsch, path
from spectral_extremal.graph import Graph
from spectral_extremal.spectral import (
    CertifiedInterval, NonnegMatrix, Ordering, SpectralError, UndecidedComparison, compare_intervals,
    compare_rho, fraction_to_decimal, rho_certified, rho_graph,
)

from conftest import graphs

TOL = Fraction(1, 10**9)


def test_closed_forms():
    iv = rho_graph(complete_bipartite(2, 3), TOL)
    assert iv.lo ** 2 <= 6 <= iv.hi ** 2 and iv.width <= TOL
    assert rho_graph(cycle(5), TOL) == CertifiedInterval(Fraction(2), Fraction(2))
    assert rho_graph(Graph.empty(4)).hi == 0
    # path P_n: 2 cos(pi/(n+1))
    iv = rho_graph(path(6), TOL)
    assert iv.contains(2 * np.cos(np.pi / 7))


@given(graphs(min_n=1, max_n=9))
@settings(max_examples=80, deadline=None)
def test_interval_brackets_numpy(g):
    iv = rho_graph(g, TOL)
    ev = max(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))) if g.n else 0.0
    assert float(iv.lo) - 1e-9 <= ev <= float(iv.hi) + 1e-9
    assert iv.width <= TOL


def test_weighted_matrix_and_tolerances():
    m = NonnegMatrix([[0, Fraction(7, 2)], [2, 0]])
    for tol in (Fraction(1, 10**3), Fraction(1, 10**20), Fraction(1, 10**60)):
        iv = rho_certified(m, tol)
        assert iv.lo ** 2 <= 7 <= iv.hi ** 2 and iv.width <= tol


def test_large_dimension_uses_power_iteration():
    g = complete_bipartite(20, 30)
    iv = rho_graph(g, TOL)
    assert iv.lo ** 2 <= 600 <= iv.hi ** 2


def test_matrix_validation():
    with pytest.raises(SpectralError):
        NonnegMatrix([[0, -1], [1, 0]])
    with pytest.raises(SpectralError):
        NonnegMatrix([[0, 1]])
    with pytest.raises(SpectralError):
        rho_certified(NonnegMatrix([[0, 1], [0, 0]]))
    with pytest.raises(SpectralError):
        rho_certified(NonnegMatrix([[0, 1], [1, 0]]), Fraction(0))


def test_compare_orders():
    a = NonnegMatrix.from_graph(cycle(5))
    b = NonnegMatrix.from_graph(grotzsch())
    assert compare_rho(a, b) is Ordering.LESS
    assert compare_rho(b, a) is Ordering.GREATER
    assert compare_rho(a, a) is Ordering.EQUAL


def test_compare_proves_equality_of_different_matrices():
    # K_{1,4} and C4 both have spectral radius 2
    star = NonnegMatrix.from_graph(complete_bipartite(1, 4))
    c4 = NonnegMatrix.from_graph(cycle(4))
    assert compare_rho(star, c4) is Ordering.EQUAL
    # an irrational common root: K_{2,3} and the 2x2 quotient [[0,3],[2,0]]
    q = NonnegMatrix([[0, 3], [2, 0]])
    assert compare_rho(NonnegMatrix.from_graph(complete_bipartite(2, 3)), q) is Ordering.EQUAL


def test_compare_undecided_within_budget():
    eps = Fraction(1, 10**40)
    a = NonnegMatrix([[0, 1], [1, 0]])
    b = NonnegMatrix([[0, 1 + eps], [1, 0]])
    with pytest.raises(UndecidedComparison):
        compare_rho(a, b, budget=1)
    assert compare_rho(a, b, budget=6) is Ordering.LESS
    with pytest.raises(SpectralError):
        compare_rho(a, b, budget=0)


def test_interval_helpers():
    iv = CertifiedInterval(Fraction(1, 3), Fraction(1, 2))
    assert iv.to_dict(3) == {"lo": "0.333", "hi": "0.500", "converged": True}
    # rounding is directed: "down" goes towards -infinity
    assert fraction_to_decimal(Fraction(-1, 3), 2, "down") == "-0.34"
    assert fraction_to_decimal(Fraction(-1, 3), 2, "up") == "-0.33"
    assert fraction_to_decimal(Fraction(2, 3), 2, "up") == "0.67"
    assert compare_intervals(iv, CertifiedInterval(Fraction(1), Fraction(2))) is Ordering.LESS
    assert compare_intervals(iv, iv) is None
    with pytest.raises(SpectralError):
        CertifiedInterval(Fraction(1), Fraction(0))
