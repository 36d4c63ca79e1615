import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from spectral_extremal.exact import (
    bareiss_det, char_poly, count_real_roots, det_exact, interpolate, poly_divmod, poly_eval,
    poly_gcd, poly_mul, square_free,
)


def rand_matrix(rng, n, lo=-5, hi=5, rational=False):
    if rational:
        return [[Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_det_against_sympy():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(0, 7)
        m = rand_matrix(rng, n, rational=rng.random() < 0.5)
        expected = sympy.Matrix(m).det() if n else 1
        assert det_exact(m) == Fraction(str(expected))
        if all(isinstance(x, int) for row in m for x in row):
            assert bareiss_det(m) == expected


def test_char_poly_against_sympy():
    rng = random.Random(2)
    x = sympy.symbols("x")
    for _ in range(60):
        n = rng.randint(1, 7)
        m = rand_matrix(rng, n, rational=rng.random() < 0.3)
        # sparse matrices exercise the zero-pivot branch of the Hessenberg reduction
        if rng.random() < 0.4:
            m = [[v if rng.random() < 0.3 else 0 for v in row] for row in m]
        expected = sympy.Poly(sympy.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
        got = char_poly(m)
        assert [Fraction(str(c)) for c in expected] == got + [Fraction(0)] * (len(expected) - len(got))


def test_sturm_counts():
    # (x - 1)^2 (x - 2)(x + 3)
    p = poly_mul(poly_mul([Fraction(-1), Fraction(1)], [Fraction(-1), Fraction(1)]),
                 poly_mul([Fraction(-2), Fraction(1)], [Fraction(3), Fraction(1)]))
    assert count_real_roots(p, -10, 10) == 3
    assert count_real_roots(p, 1, 2) == 2          # closed interval, both endpoints
    assert count_real_roots(p, Fraction(3, 2), 2) == 1
    assert count_real_roots(p, -2, 0) == 0
    assert square_free(p) == poly_mul(poly_mul([Fraction(-1), Fraction(1)], [Fraction(-2), Fraction(1)]),
                                      [Fraction(3), Fraction(1)])
    # x^2 - 2 has no rational root; Sturm still isolates it
    assert count_real_roots([Fraction(-2), 0, Fraction(1)], Fraction(141, 100), Fraction(142, 100)) == 1


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8, unique=True))
def test_interpolate_reproduces_polynomial(xs):
    p = [Fraction(3), Fraction(-1), Fraction(0), Fraction(2)]
    q = interpolate(xs, [poly_eval(p, x) for x in xs])
    if len(xs) >= len(p):
        assert q == p
    for x in xs:
        assert poly_eval(q, x) == poly_eval(p, x)


def test_interpolate_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        interpolate([1, 1], [0, 0])


def test_divmod_and_gcd():
    a = poly_mul([Fraction(1), Fraction(1)], [Fraction(-3), Fraction(0), Fraction(1)])
    q, r = poly_divmod(a, [Fraction(1), Fraction(1)])
    assert r == [] and q == [Fraction(-3), Fraction(0), Fraction(1)]
    assert poly_gcd(a, poly_mul([Fraction(1), Fraction(1)], [Fraction(5), Fraction(1)])) == [Fraction(1), Fraction(1)]
    with pytest.raises(ZeroDivisionError):
        poly_divmod(a, [])
