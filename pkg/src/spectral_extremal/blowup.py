"""Independent-set blow-ups, their divisor (quotient) matrices, and g(x, t).

A blow-up replaces base vertex ``i`` by an independent set of ``sizes[i]``
vertices and joins two classes completely iff their base vertices are
adjacent.  The partition into classes is equitable, so the quotient matrix
``Q[i][j] = sizes[j] * A[i][j]`` has the same Perron root as the blow-up.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import det_exact, interpolate
from .graph import Graph, GraphError
from .spectral import NonnegMatrix


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    sizes: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if len(self.sizes) != self.base.n:
            raise GraphError("one class size per base vertex is required")
        if any(s < 0 for s in self.sizes):
            raise GraphError("class sizes must be nonnegative")
        if self.labels is not None and len(self.labels) != self.base.n:
            raise GraphError("one label per base vertex is required")

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def retained(self) -> list[int]:
        return [i for i, s in enumerate(self.sizes) if s > 0]

    def num_edges(self) -> int:
        return sum(self.sizes[u] * self.sizes[v] for u, v in self.base.edges())


def expand(spec: BlowupSpec) -> Graph:
    """Concrete blow-up; vertices are grouped by class in base order."""
    masks = []
    offset = 0
    for s in spec.sizes:
        masks.append(((1 << s) - 1) << offset)
        offset += s
    rows: list[int] = []
    for i, s in enumerate(spec.sizes):
        r = 0
        nb = spec.base.adj[i]
        j = 0
        while nb:
            if nb & 1:
                r |= masks[j]
            nb >>= 1
            j += 1
        rows.extend([r] * s)
    return Graph(offset, tuple(rows))


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    class_sizes: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    @property
    def dim(self) -> int:
        return len(self.entries)

    def as_nonneg(self) -> NonnegMatrix:
        return NonnegMatrix(self.entries)

    def is_weighted_symmetric(self) -> bool:
        s, q = self.class_sizes, self.entries
        return all(s[i] * q[i][j] == s[j] * q[j][i] for i in range(self.dim) for j in range(self.dim))


def quotient_matrix(spec: BlowupSpec) -> QuotientMatrix:
    """Divisor matrix of the class partition, on the nonempty classes only."""
    keep = spec.retained()
    if not keep:
        raise GraphError("blow-up has no vertices")
    sub = spec.base.induced(keep)
    if not sub.is_connected():
        raise GraphError("retained base graph is disconnected; Perron root of the quotient is not unique")
    sizes = tuple(spec.sizes[i] for i in keep)
    entries = tuple(
        tuple(Fraction(sizes[j]) if sub.has_edge(i, j) else Fraction(0) for j in range(len(keep)))
        for i in range(len(keep))
    )
    labels = tuple(spec.labels[i] for i in keep) if spec.labels else None
    return QuotientMatrix(entries, sizes, labels)


# --- the balanced-blow-up determinant g(x, t) --------------------------------

G_T_LIMIT = 23


def _check_nt(n: int, t: int) -> None:
    if (n - 11 - t) % 2:
        raise ValueError(f"n - 11 - t must be even (n={n}, t={t})")
    if n - 11 - t < 0 or n - 7 + t < 0:
        raise ValueError(f"class sizes (n-11-t)/2 and (n-7+t)/2 must be nonnegative (n={n}, t={t})")
    if abs(t) > G_T_LIMIT:
        warnings.warn(f"|t| = {abs(t)} exceeds {G_T_LIMIT}", stacklevel=3)


def b_matrix(n: int, t: int) -> list[list[Fraction]]:
    """Quotient of F1((n-11-t)/2, (n-7+t)/2) in the fixed F1 class order."""
    from .constructions import grotzsch, X, Y

    base = grotzsch()
    sizes = [Fraction(1)] * base.n
    sizes[X] = Fraction(n - 11 - t, 2)
    sizes[Y] = Fraction(n - 7 + t, 2)
    return [[sizes[j] if base.has_edge(i, j) else Fraction(0) for j in range(base.n)] for i in range(base.n)]


def g_eval(n: int, t: int, x) -> Fraction:
    """det((x + n/2) I - B(n, t)), exactly."""
    _check_nt(n, t)
    b = b_matrix(n, t)
    d = Fraction(x) + Fraction(n, 2)
    m = [[(d if i == j else 0) - b[i][j] for j in range(11)] for i in range(11)]
    return det_exact(m)


def interpolation_nodes(t: int, count: int = 13, start: int = 30) -> list[int]:
    first = max(start, 11 + t, 7 - t)
    if (first - 11 - t) % 2:
        first += 1
    return [first + 2 * i for i in range(count)]


def g_coefficients(x, t: int, nodes: Optional[Sequence[int]] = None) -> list[Fraction]:
    """Coefficients (ascending powers of n) of g(x, t) viewed as a polynomial in n.

    The entries of (x + n/2) I - B are affine in n, so the determinant has
    degree at most 11; 13 nodes leave one degree of slack as a consistency
    check.
    """
    nodes = list(nodes) if nodes is not None else interpolation_nodes(t)
    for n in nodes:
        if (n - 11 - t) % 2:
            raise ValueError(f"node n={n} violates the parity condition for t={t}")
    return interpolate(nodes, [g_eval(n, t, x) for n in nodes])


def verify_g_leading(x, t: int) -> bool:
    """Check the n^10 and n^9 coefficients of g(x, t) against the closed forms.

    Expected: (6 + 4x)/2048 for n^10 and (39 + t^2 + 108x + 76x^2)/2048 for
    n^9; higher powers must vanish.
    """
    if abs(t) > G_T_LIMIT:
        raise ValueError(f"|t| must be at most {G_T_LIMIT}")
    x = Fraction(x)
    c = g_coefficients(x, t)
    c = c + [Fraction(0)] * (13 - len(c))
    return (
        c[12] == 0
        and c[11] == 0
        and c[10] == (6 + 4 * x) / 2048
        and c[9] == (39 + t * t + 108 * x + 76 * x * x) / 2048
    )


def g_closed_form(power: int, x, t: int) -> Fraction:
    """Closed-form coefficient of n**power in g(x, t) for power 7..10."""
    x = Fraction(x)
    forms = {
        10: 6 + 4 * x,
        9: 39 + t * t + 108 * x + 76 * x**2,
        8: -904 + 430 * x + 864 * x**2 + 648 * x**3 + 18 * t * t * x,
        7: (2900 - 68 * t * t - 112 * t - 12400 * x + 1536 * x**2 + 4032 * x**3
            + 3264 * x**4 + 144 * t * t * x**2),
    }
    if power not in forms:
        raise ValueError("closed forms are known for powers 7..10 only")
    return Fraction(forms[power]) / 2048


def verify_g_expansion(x, t: int) -> dict[int, bool]:
    """Compare the n^10 .. n^7 coefficients of g(x, t) with their closed forms."""
    c = g_coefficients(Fraction(x), t)
    c = c + [Fraction(0)] * (13 - len(c))
    return {p: c[p] == g_closed_form(p, x, t) for p in (10, 9, 8, 7)}


def verify_g_case2(x) -> bool:
    """n^9 coefficient of g(x, 1) equals (40 + 108x + 76x^2)/2048."""
    x = Fraction(x)
    return g_coefficients(x, 1)[9] == (40 + 108 * x + 76 * x * x) / 2048
