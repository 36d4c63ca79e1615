"""Certified Perron roots of nonnegative matrices.

For an irreducible nonnegative matrix ``A`` and *any* positive vector ``v``,

    min_i (Av)_i / v_i  <=  rho(A)  <=  max_i (Av)_i / v_i.

The bounds are evaluated in exact rational arithmetic, so how ``v`` was
produced (a floating-point eigensolver, rounded iterates) only affects the
width of the interval, never its validity.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import numpy as np

from .exact import Poly, char_poly, count_real_roots, poly_gcd, square_free
from .graph import Graph

log = logging.getLogger(__name__)

DEFAULT_TOL = Fraction(1, 10**9)
MAX_CHARPOLY_DIM = 64
_EXACT_SOLVE_DIM = 24


class SpectralError(ValueError):
    pass


class UndecidedComparison(SpectralError):
    def __init__(self, a: "CertifiedInterval", b: "CertifiedInterval"):
        super().__init__(f"comparison undecided within budget: {a} vs {b}")
        self.a = a
        self.b = b


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def flip(self) -> "Ordering":
        return Ordering(-self.value)


def fraction_to_decimal(x: Fraction, digits: int, rounding: str) -> str:
    """Decimal string for ``x`` with ``digits`` places, rounded 'down' or 'up'."""
    scale = 10**digits
    num = x.numerator * scale
    q, r = divmod(num, x.denominator)
    if rounding == "up" and r:
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    s = str(q).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


@dataclass(frozen=True)
class CertifiedInterval:
    lo: Fraction
    hi: Fraction
    converged: bool = True

    def __post_init__(self):
        if self.lo > self.hi:
            raise SpectralError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x) if not isinstance(x, float) else x
        return self.lo <= x <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def shift(self, c: Fraction) -> "CertifiedInterval":
        return CertifiedInterval(self.lo + c, self.hi + c, self.converged)

    def to_dict(self, digits: int = 15) -> dict:
        return {
            "lo": fraction_to_decimal(self.lo, digits, "down"),
            "hi": fraction_to_decimal(self.hi, digits, "up"),
            "converged": self.converged,
        }

    def __str__(self) -> str:
        d = self.to_dict(12)
        return f"[{d['lo']}, {d['hi']}]"


@dataclass(frozen=True)
class NonnegMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        for row in rows:
            if len(row) != len(rows):
                raise SpectralError("matrix must be square")
            if any(x < 0 for x in row):
                raise SpectralError("matrix has a negative entry")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_graph(cls, g: Graph) -> "NonnegMatrix":
        return cls(g.adjacency_matrix())

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_irreducible(self) -> bool:
        n = self.dim
        if n <= 1:
            return True
        out = [sum(1 << j for j, x in enumerate(row) if x) for row in self.entries]
        inc = [0] * n
        for i, m in enumerate(out):
            for j in range(n):
                if m >> j & 1:
                    inc[j] |= 1 << i
        full = (1 << n) - 1
        for nbrs in (out, inc):
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for i in range(n):
                    if frontier >> i & 1:
                        nxt |= nbrs[i]
                frontier = nxt & ~seen
                seen |= nxt
            if seen != full:
                return False
        return True

    def integer_scaled(self) -> tuple[list[list[int]], int]:
        """(A, d) with A = d * self integral."""
        d = lcm(*(x.denominator for row in self.entries for x in row)) if self.dim else 1
        return [[int(x * d) for x in row] for row in self.entries], d


def _float_perron(a: list[list[int]]) -> list[float] | None:
    try:
        m = np.array(a, dtype=float)
        scale = np.abs(m).max() or 1.0
        w, vecs = np.linalg.eig(m / scale)
        k = int(np.argmax(w.real))
        v = np.abs(vecs[:, k].real)
        if not np.all(np.isfinite(v)) or v.min() <= 0:
            return None
        return list(v / v.max())
    except np.linalg.LinAlgError:
        return None


def _to_int_vector(xs: Sequence, bits: int) -> list[int]:
    top = max(xs)
    out = []
    for x in xs:
        if isinstance(x, Fraction):
            q = (x.numerator * (1 << bits) * top.denominator) // (x.denominator * top.numerator)
        else:
            q = int(x / top * (1 << bits))
        out.append(max(1, q))
    return out


def _cw_bounds(a: list[list[int]], v: list[int]) -> tuple[Fraction, Fraction, list[int]]:
    w = [sum(x * y for x, y in zip(row, v)) for row in a]
    lo_i = hi_i = 0
    for i in range(1, len(v)):
        # compare w_i / v_i by cross-multiplication
        if w[i] * v[lo_i] < w[lo_i] * v[i]:
            lo_i = i
        if w[i] * v[hi_i] > w[hi_i] * v[i]:
            hi_i = i
    return Fraction(w[lo_i], v[lo_i]), Fraction(w[hi_i], v[hi_i]), w


def _solve_exact(a: list[list[int]], sigma: Fraction, v: list[int]) -> list[Fraction]:
    """Solve (sigma I - A) x = v exactly."""
    n = len(a)
    m = [[(sigma if i == j else 0) - a[i][j] for j in range(n)] + [Fraction(v[i])] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if m[i][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        pk = m[k]
        inv = 1 / pk[k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                mi = m[i]
                for j in range(k, n + 1):
                    mi[j] -= f * pk[j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


@lru_cache(maxsize=4096)
def rho_certified(m: NonnegMatrix, tol: Fraction = DEFAULT_TOL, max_iter: int = 2000) -> CertifiedInterval:
    """Collatz-Wielandt interval for the Perron root of an irreducible matrix.

    The iterate starts from a floating-point Perron vector (all-ones if that
    fails) and is refined by exact inverse iteration for small dimensions or
    shifted power iteration otherwise, rounded to positive integers of
    ``bits`` bits after each step.  ``bits`` doubles when the width stalls.
    Hitting ``max_iter`` returns the (still valid) interval with
    ``converged=False``.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise SpectralError("tol must be positive")
    n = m.dim
    if n == 0:
        raise SpectralError("empty matrix")
    if n == 1:
        c = m.entries[0][0]
        return CertifiedInterval(c, c)
    if not m.is_irreducible():
        raise SpectralError("matrix is reducible")
    a, d = m.integer_scaled()
    tol_int = tol * d
    top = max(max(row) for row in a)
    bits = max(64, (top * n * (tol_int.denominator // max(1, tol_int.numerator) + 1)).bit_length() + 16)
    start = _float_perron(a)
    v = _to_int_vector(start, 52) if start else [1] * n
    best: tuple[Fraction, Fraction] | None = None
    last_width = None
    for it in range(max_iter):
        lo, hi, w = _cw_bounds(a, v)
        if best is None:
            best = (lo, hi)
        else:
            best = (max(best[0], lo), min(best[1], hi))
        width = best[1] - best[0]
        if width <= tol_int:
            return CertifiedInterval(best[0] / d, best[1] / d)
        if last_width is not None and width * 2 > last_width:
            bits *= 2
        last_width = width
        if n <= _EXACT_SOLVE_DIM:
            sigma = best[1] + width
            v = _to_int_vector(_solve_exact(a, sigma, v), bits)
        else:
            c = int(best[0])
            v = _to_int_vector([wi + c * vi for wi, vi in zip(w, v)], bits)
    log.warning("rho_certified: iteration cap hit with width %s", float(best[1] - best[0]))
    return CertifiedInterval(best[0] / d, best[1] / d, converged=False)


def rho_graph(g: Graph, tol: Fraction = DEFAULT_TOL) -> CertifiedInterval:
    """Certified spectral radius of a (possibly disconnected) graph."""
    if g.n == 0:
        return CertifiedInterval(Fraction(0), Fraction(0))
    lo = hi = Fraction(0)
    converged = True
    for comp in g.components():
        if len(comp) == 1:
            continue
        iv = rho_certified(NonnegMatrix.from_graph(g.induced(comp)), Fraction(tol))
        lo, hi = max(lo, iv.lo), max(hi, iv.hi)
        converged = converged and iv.converged
    return CertifiedInterval(lo, hi, converged)


@lru_cache(maxsize=1024)
def char_poly_exact(m: NonnegMatrix) -> Poly:
    """det(xI - m) with exact coefficients, ascending order."""
    if m.dim > MAX_CHARPOLY_DIM:
        raise SpectralError(f"characteristic polynomial limited to dim <= {MAX_CHARPOLY_DIM}")
    return char_poly(m.entries)


def _proves_equal(a: NonnegMatrix, b: NonnegMatrix, ia: CertifiedInterval, ib: CertifiedInterval) -> bool:
    lo, hi = max(ia.lo, ib.lo), min(ia.hi, ib.hi)
    if lo > hi:
        return False
    pa, pb = char_poly_exact(a), char_poly_exact(b)
    if count_real_roots(pa, ia.lo, ia.hi) != 1 or count_real_roots(pb, ib.lo, ib.hi) != 1:
        return False
    g = poly_gcd(pa, pb)
    if len(g) <= 1:
        return False
    return count_real_roots(square_free(g), lo, hi) >= 1


def compare_rho(a: NonnegMatrix, b: NonnegMatrix, budget: int = 12,
                tol: Fraction = Fraction(1, 2**20)) -> Ordering:
    """Certified ordering of the Perron roots of ``a`` and ``b``.

    Each round certifies both sides to the current tolerance and shrinks it
    by 2**-24.  Overlapping intervals lead to EQUAL only when the shared root
    is proved by Sturm counting on the exact characteristic polynomials.
    Raises :class:`UndecidedComparison` when ``budget`` rounds do not settle it.
    """
    if budget < 1:
        raise SpectralError("budget must be at least 1")
    if a == b:
        return Ordering.EQUAL
    tol = Fraction(tol)
    ia = ib = None
    for _ in range(budget):
        ia, ib = rho_certified(a, tol), rho_certified(b, tol)
        if ia.hi < ib.lo:
            return Ordering.LESS
        if ib.hi < ia.lo:
            return Ordering.GREATER
        if max(a.dim, b.dim) <= MAX_CHARPOLY_DIM and _proves_equal(a, b, ia, ib):
            return Ordering.EQUAL
        tol /= 2**24
    raise UndecidedComparison(ia, ib)


def compare_intervals(a: CertifiedInterval, b: CertifiedInterval) -> Ordering | None:
    """Ordering implied by disjoint intervals, else None."""
    if a.hi < b.lo:
        return Ordering.LESS
    if b.hi < a.lo:
        return Ordering.GREATER
    return None
