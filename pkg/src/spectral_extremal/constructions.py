"""Named graphs and graph families with frozen vertex labellings.

Grötzsch graph F1, index -> name::

    0 v13   1 v23   2 v1    3 v2    4 x     5 u1
    6 u2    7 u3    8 w13   9 w23   10 y

F2 (data/f2.edges)::

    0 v13   1 v23   2 v2    3 x     4 u1    5 u2
    6 u3    7 w13   8 w23   9 w2    10 y

F3 (data/f3.edges)::

    0 v13   1 v23   2 v1    3 w2    4 x     5 u1
    6 u2    7 u3    8 w13   9 w23   10 y

The F2 and F3 edge lists ship as data files; their SHA-256 digests are pinned
below so an edited transcription is detected on load.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .blowup import BlowupSpec
from .graph import Graph, GraphError, graph_from_edges

GROTZSCH_LABELS = ("v13", "v23", "v1", "v2", "x", "u1", "u2", "u3", "w13", "w23", "y")
V13, V23, V1, V2, X, U1, U2, U3, W13, W23, Y = range(11)

_GROTZSCH_EDGES = (
    ("v13", "u1"), ("v1", "u1"), ("v23", "u2"), ("v2", "u2"), ("u1", "u2"),
    ("u1", "w13"), ("u2", "w23"), ("v13", "y"), ("v23", "y"), ("v1", "y"),
    ("v2", "y"), ("x", "y"), ("x", "w13"), ("x", "w23"), ("v13", "u3"),
    ("v23", "u3"), ("w13", "u3"), ("w23", "u3"), ("v2", "w13"), ("v1", "w23"),
)

DATA_SHA256 = {
    "f2.edges": "08ee712a573034dc22c874291a7745cd8dedc38f6c3044d8baf12b51e75ddc23",
    "f3.edges": "3bf125b79270f7dff7d8aeff505b1686905961b6f39a667fdde81e3a75d0d5f9",
}


class ConstructionError(ValueError):
    pass


class Family(enum.Enum):
    GROTZSCH = "grotzsch"
    F1_ST = "f1"
    F1_N = "f1n"
    F2_ST = "f2"
    F3_ST = "f3"
    TURAN = "turan"
    COMPLETE_BIPARTITE = "kab"
    SK_AB = "skab"
    KAB_CIRC_K3 = "kabk3"


def _named_graph(labels: Sequence[str], edges: Sequence[tuple[str, str]]) -> Graph:
    index = {name: i for i, name in enumerate(labels)}
    return graph_from_edges(len(labels), [(index[a], index[b]) for a, b in edges])


@lru_cache(maxsize=None)
def grotzsch() -> Graph:
    return _named_graph(GROTZSCH_LABELS, _GROTZSCH_EDGES)


@lru_cache(maxsize=None)
def load_edge_data(name: str) -> tuple[tuple[str, ...], Graph]:
    raw = resources.files(__package__).joinpath("data").joinpath(name).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != DATA_SHA256[name]:
        raise ConstructionError(f"{name}: checksum mismatch ({digest})")
    labels: tuple[str, ...] = ()
    edges = []
    for line in raw.decode("ascii").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertices":
            labels = tuple(parts[1:])
        else:
            edges.append((parts[0], parts[1]))
    return labels, _named_graph(labels, edges)


def f2_base() -> Graph:
    return load_edge_data("f2.edges")[1]


def f3_base() -> Graph:
    return load_edge_data("f3.edges")[1]


def _xy_blowup(labels: Sequence[str], base: Graph, s: int, t: int) -> BlowupSpec:
    if s < 0 or t < 0:
        raise ConstructionError("class sizes must be nonnegative")
    if t == 0:
        raise ConstructionError("empty hub class: t must be at least 1")
    sizes = [1] * base.n
    sizes[labels.index("x")] = s
    sizes[labels.index("y")] = t
    return BlowupSpec(base, tuple(sizes), tuple(labels))


def f1_st(s: int, t: int) -> BlowupSpec:
    """F1 with x and y replaced by independent sets of sizes s and t (s = 0 drops x)."""
    return _xy_blowup(GROTZSCH_LABELS, grotzsch(), s, t)


def f2_st(s: int, t: int) -> BlowupSpec:
    labels, base = load_edge_data("f2.edges")
    return _xy_blowup(labels, base, s, t)


def f3_st(s: int, t: int) -> BlowupSpec:
    labels, base = load_edge_data("f3.edges")
    return _xy_blowup(labels, base, s, t)


def f1_n_sizes(n: int, swapped: bool = False) -> tuple[int, int]:
    """(required |V1|+|V2|+|V3|, |W|) for F1(n)."""
    lo, hi = (n - 7) // 2, (n - 6) // 2
    return (hi, lo) if swapped else (lo, hi)


def f1_n(n: int, split: Sequence[int], swapped: bool = False) -> BlowupSpec:
    """F1(n): v13, v1, v23 blown up to V1, V2, V3 and y to W.

    ``split = (|V1|, |V2|, |V3|)``, each at least 1, summing to floor((n-7)/2)
    (ceil when ``swapped``); |W| takes the other rounding.
    """
    if n < 11:
        raise ConstructionError("F1(n) needs n >= 11")
    split = tuple(int(a) for a in split)
    if len(split) != 3 or any(a < 1 for a in split):
        raise ConstructionError("split must be three sizes, each at least 1")
    need, w = f1_n_sizes(n, swapped)
    if sum(split) != need:
        raise ConstructionError(f"split must sum to {need} for n={n}{' (swapped)' if swapped else ''}, got {sum(split)}")
    sizes = [1] * 11
    sizes[V13], sizes[V1], sizes[V23] = split
    sizes[Y] = w
    return BlowupSpec(grotzsch(), tuple(sizes), GROTZSCH_LABELS)


def f1_n_splits(n: int, swapped: bool = False) -> list[tuple[int, int, int]]:
    need = f1_n_sizes(n, swapped)[0]
    return [(a, b, need - a - b) for a in range(1, need) for b in range(1, need - a)]


def balanced_f1(n: int) -> BlowupSpec:
    """F1(floor((n-11)/2), ceil((n-7)/2)), the conjectured spectral extremal graph."""
    return f1_st((n - 11) // 2, (n - 6) // 2)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices, parts as equal as possible, larger parts first."""
    if n < 0 or r < 0:
        raise ConstructionError("n and r must be nonnegative")
    if r == 0:
        if n > 0:
            raise ConstructionError("r = 0 only allowed for n = 0")
        return Graph.empty(0)
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return complete_multipartite(sizes)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    offset = 0
    for s in sizes:
        part = ((1 << s) - 1) << offset
        rows.extend([full & ~part] * s)
        offset += s
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ConstructionError("part sizes must be nonnegative")
    return complete_multipartite([a, b])


def sk_ab(a: int, b: int) -> Graph:
    """K_{a,b} with the edge (0, a) subdivided by the new vertex a + b."""
    if a < 1 or b < 1:
        raise ConstructionError("SK_{a,b} needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b) if (i, j) != (0, 0)]
    edges += [(0, a + b), (a, a + b)]
    return graph_from_edges(a + b + 1, edges)


def kab_circ_k3(a: int, b: int) -> Graph:
    """K_{a,b} glued at vertex a (part of size b) to a triangle on {a, a+b, a+b+1}."""
    if a < 1 or b < 1:
        raise ConstructionError("K_{a,b} o K3 needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    edges += [(a, a + b), (a, a + b + 1), (a + b, a + b + 1)]
    return graph_from_edges(a + b + 2, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycles need n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    s: int = 0
    t: int = 1
    n: int = 0
    r: int = 2
    a: int = 1
    b: int = 1
    split: tuple[int, ...] = ()
    swapped: bool = False


def build(p: FamilyParams) -> Graph | BlowupSpec:
    f = p.family
    if f is Family.GROTZSCH:
        return grotzsch()
    if f is Family.F1_ST:
        return f1_st(p.s, p.t)
    if f is Family.F1_N:
        return f1_n(p.n, p.split, p.swapped)
    if f is Family.F2_ST:
        return f2_st(p.s, p.t)
    if f is Family.F3_ST:
        return f3_st(p.s, p.t)
    if f is Family.TURAN:
        return turan(p.n, p.r)
    if f is Family.COMPLETE_BIPARTITE:
        return complete_bipartite(p.a, p.b)
    if f is Family.SK_AB:
        return sk_ab(p.a, p.b)
    if f is Family.KAB_CIRC_K3:
        return kab_circ_k3(p.a, p.b)
    raise GraphError(f"unknown family {f}")
