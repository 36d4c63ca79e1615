"""Exact rational linear algebra and univariate polynomials.

Polynomials are lists of ``Fraction`` coefficients in ascending order
(``p[i]`` multiplies ``x**i``) with no trailing zeros; the zero polynomial is
``[]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]
Poly = list[Fraction]


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact division is the Bareiss invariant
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(m: Matrix) -> Fraction:
    """Determinant of a rational matrix: clear denominators row-wise, then Bareiss."""
    rows = []
    scale = Fraction(1)
    for row in m:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * d) for x in row])
        scale *= d
    return Fraction(bareiss_det(rows)) / scale


def char_poly(m: Matrix) -> Poly:
    """Coefficients of det(xI - m), ascending, via Hessenberg reduction over Q."""
    n = len(m)
    h = [[Fraction(x) for x in row] for row in m]
    # reduce to upper Hessenberg form by similarity transforms
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        t = h[j + 1][j]
        for i in range(j + 2, n):
            if h[i][j] == 0:
                continue
            u = h[i][j] / t
            hi, hj1 = h[i], h[j + 1]
            for k in range(n):
                hi[k] -= u * hj1[k]
            for row in h:
                row[j + 1] += u * row[i]
    # characteristic polynomials of leading principal blocks
    polys: list[Poly] = [[Fraction(1)]]
    for k in range(n):
        p = poly_sub(poly_mul([-h[k][k], Fraction(1)], polys[k]), [])
        prod = Fraction(1)
        for i in range(k - 1, -1, -1):
            prod *= h[i + 1][i]
            if prod == 0:
                break
            p = poly_sub(p, poly_scale(polys[i], prod * h[i][k]))
        polys.append(p)
    return polys[n]


def poly_trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    n = max(len(p), len(q))
    return poly_trim([Fraction(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def poly_scale(p: Sequence[Fraction], c: Fraction) -> Poly:
    return poly_trim([c * a for a in p])


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Poly, Poly]:
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) for a in poly_trim(p)]
    if len(r) < len(q):
        return [], r
    quo = [Fraction(0)] * (len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        shift = len(r) - len(q)
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = poly_trim(r)
    return poly_trim(quo), r


def poly_monic(p: Sequence[Fraction]) -> Poly:
    p = poly_trim(p)
    return [a / p[-1] for a in p] if p else []


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_deriv(p: Sequence[Fraction]) -> Poly:
    return poly_trim([i * p[i] for i in range(1, len(p))])


def poly_eval(p: Sequence[Fraction], x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def square_free(p: Sequence[Fraction]) -> Poly:
    p = poly_trim(p)
    g = poly_gcd(p, poly_deriv(p))
    return poly_monic(poly_divmod(p, g)[0]) if len(g) > 1 else poly_monic(p)


def sturm_sequence(p: Sequence[Fraction]) -> list[Poly]:
    seq = [poly_trim(p), poly_deriv(p)]
    while seq[-1]:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(poly_scale(r, Fraction(-1)))
    return [s for s in seq if s]


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    count = 0
    last = 0
    for s in seq:
        v = poly_eval(s, x)
        if v == 0:
            continue
        sgn = 1 if v > 0 else -1
        if last and sgn != last:
            count += 1
        last = sgn
    return count


def count_real_roots(p: Sequence[Fraction], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the closed interval [lo, hi]."""
    p = square_free(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    n = _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))
    if poly_eval(p, lo) == 0:
        n += 1
    return n


def interpolate(xs: Sequence[Fraction | int], ys: Sequence[Fraction | int]) -> Poly:
    """Unique polynomial of degree < len(xs) through the points (Newton form)."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p: Poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        p = poly_add(poly_mul(p, [-xs[i], Fraction(1)]), [coef[i]])
    return poly_trim(p)
