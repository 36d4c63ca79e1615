from fractions import Fraction

import pytest
import sympy

from spectral_extremal.blowup import (
    BlowupSpec, b_matrix, expand, g_closed_form, g_coefficients, g_eval, quotient_matrix,
    verify_g_case2, verify_g_expansion, verify_g_leading,
)
from spectral_extremal.constructions import cycle, f1_st, grotzsch
from spectral_extremal.graph import GraphError, is_triangle_free
from spectral_extremal.spectral import NonnegMatrix, Ordering, compare_rho


def displayed_b(n, t):
    """The 11x11 quotient matrix as displayed in the source, with a = (n-7+t)/2, b = (n-11-t)/2."""
    a, b = Fraction(n - 7 + t, 2), Fraction(n - 11 - t, 2)
    return [
        [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, a],
        [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, a],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, a],
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, a],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, a],
        [1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0],
        [0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 1, b, 1, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, b, 0, 1, 1, 0, 0, 0],
        [1, 1, 1, 1, b, 0, 0, 0, 0, 0, 0],
    ]


@pytest.mark.parametrize("n, t", [(101, 0), (100, 1), (61, -2), (70, 3)])
def test_quotient_matches_displayed_matrix(n, t):
    assert b_matrix(n, t) == displayed_b(n, t)
    q = quotient_matrix(f1_st((n - 11 - t) // 2, (n - 7 + t) // 2))
    assert [list(r) for r in q.entries] == displayed_b(n, t)


def test_expand_all_ones_is_base():
    assert expand(BlowupSpec(grotzsch(), (1,) * 11)) == grotzsch()


def test_expand_structure():
    spec = f1_st(2, 3)
    g = expand(spec)
    assert g.n == spec.order == 14
    assert g.num_edges() == spec.num_edges() == 13 + 2 * 2 + 4 * 3 + 2 * 3
    assert is_triangle_free(g)


def test_quotient_shares_perron_root():
    spec = f1_st(3, 4)
    q = quotient_matrix(spec)
    assert q.is_weighted_symmetric()
    assert compare_rho(q.as_nonneg(), NonnegMatrix.from_graph(expand(spec))) is Ordering.EQUAL


def test_quotient_drops_empty_classes():
    q = quotient_matrix(f1_st(0, 2))
    assert q.dim == 10 and "x" not in q.labels


def test_spec_validation():
    with pytest.raises(GraphError):
        BlowupSpec(cycle(5), (1, 1))
    with pytest.raises(GraphError):
        BlowupSpec(cycle(5), (1, 1, 1, 1, -1))
    with pytest.raises(GraphError):
        quotient_matrix(BlowupSpec(cycle(5), (0,) * 5))
    with pytest.raises(GraphError, match="disconnected"):
        quotient_matrix(BlowupSpec(cycle(5), (1, 0, 1, 1, 0)))


def test_g_eval_against_sympy_determinant():
    n, t = 41, 2
    x = Fraction(-3, 2)
    m = sympy.Matrix(displayed_b(n, t)).applyfunc(sympy.nsimplify)
    d = sympy.Rational(n, 2) + sympy.Rational(-3, 2)
    expected = (d * sympy.eye(11) - m).det()
    assert g_eval(n, t, x) == Fraction(str(expected))


def test_g_parity_and_range():
    with pytest.raises(ValueError, match="even"):
        g_eval(100, 0, 0)
    with pytest.raises(ValueError, match="nonnegative"):
        g_eval(11, 2, 0)
    with pytest.warns(UserWarning):
        g_eval(101, 24, 0)
    with pytest.raises(ValueError):
        verify_g_leading(0, 24)


@pytest.mark.parametrize("x", [-2, -1, 0, Fraction(-1, 3)])
@pytest.mark.parametrize("t", [-1, 0, 1, 2])
def test_g_leading_coefficients(x, t):
    assert verify_g_leading(x, t)


def test_g_lower_coefficients_and_case2():
    assert all(verify_g_expansion(-1, 3).values())
    assert all(verify_g_case2(x) for x in (-2, -1, 0))
    c = g_coefficients(Fraction(-1), 0)
    assert c[9] == g_closed_form(9, -1, 0) == Fraction(39 - 108 + 76, 2048)
    with pytest.raises(ValueError):
        g_closed_form(6, 0, 0)
