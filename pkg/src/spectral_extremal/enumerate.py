"""Isomorph-free generation of triangle-free graphs.

Children of a canonical parent on k vertices get one new vertex whose
neighbourhood is an independent set of the parent, so triangle-freeness holds
by construction.  A child is kept only if the new vertex can serve as the
canonical deletion vertex: it must carry the maximal invariant
``(degree, sum of neighbour degrees)``, and deleting the canonically last
vertex of maximal invariant must give back the parent.  Any two accepted
children that are isomorphic then share a parent, so a per-parent set of
canonical forms removes the remaining duplicates.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from .canonical import _relabel, canonical_labeling, canonical_rows
from .coloring import is_k_colorable
from .graph import Graph, is_bipartite, is_triangle_free
from .graph6 import Graph6Error, graph6_decode

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 13
MAX_BRUTE_ORDER = 7
# approximate numbers of triangle-free classes, used for the refusal message
_CLASS_COUNTS = {8: 410, 9: 1897, 10: 12172, 11: 105071, 12: 1262180, 13: 20797002,
                 14: 467871369, 15: 14232552452}

# unpruned runs up to this order are kept for reuse within a process
_CACHE_MAX_ORDER = 11
_level_cache: dict[int, list[tuple[int, ...]]] = {}

# prune(rows, target_n) -> True to discard the node and its whole subtree
Prune = Callable[[tuple[int, ...], int], bool]


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class EnumFilter:
    require_triangle_free: bool = True
    min_chromatic: int = 0
    connected_only: bool = False
    non_bipartite_only: bool = False

    def accepts(self, g: Graph) -> bool:
        if self.require_triangle_free and not is_triangle_free(g):
            return False
        if self.connected_only and not g.is_connected():
            return False
        if self.non_bipartite_only and is_bipartite(g):
            return False
        if self.min_chromatic > 0 and is_k_colorable(g, self.min_chromatic - 1):
            return False
        return True

    def to_dict(self) -> dict:
        return asdict(self)


NO_FILTER = EnumFilter()


def _independent_sets(rows: tuple[int, ...], k: int, min_size: int) -> list[int]:
    out: list[int] = []

    def rec(cand: int, cur: int, size: int) -> None:
        if size >= min_size:
            out.append(cur)
        while cand:
            if size + cand.bit_count() < min_size:
                return
            low = cand & -cand
            cand ^= low
            rec(cand & ~rows[low.bit_length() - 1], cur | low, size + 1)

    rec((1 << k) - 1, 0, 0)
    return out


def _children(parent: tuple[int, ...], target_n: int, prune: Optional[Prune]) -> list[tuple[int, ...]]:
    k = len(parent)
    degs = [r.bit_count() for r in parent]
    maxdeg = max(degs, default=0)
    new_bit = 1 << k
    seen: set[tuple[int, ...]] = set()
    for s in _independent_sets(parent, k, maxdeg):
        d = s.bit_count()
        cdeg = degs[:]
        rows = list(parent)
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            cdeg[v] += 1
            rows[v] |= new_bit
        if max(cdeg, default=0) > d:
            continue
        rows.append(s)
        cdeg.append(d)
        rows_t = tuple(rows)
        if prune is not None and prune(rows_t, target_n):
            continue

        def nsum(v: int) -> int:
            t = 0
            r = rows_t[v]
            while r:
                low = r & -r
                t += cdeg[low.bit_length() - 1]
                r ^= low
            return t

        new_inv = nsum(k)
        best = [k]
        reject = False
        for v in range(k):
            if cdeg[v] == d:
                sv = nsum(v)
                if sv > new_inv:
                    reject = True
                    break
                if sv == new_inv:
                    best.append(v)
        if reject:
            continue
        child = Graph(k + 1, rows_t)
        order = canonical_labeling(child)
        crows = _relabel(rows_t, order)
        if len(best) > 1:
            bset = set(best)
            w = next(v for v in reversed(order) if v in bset)
            if w != k and canonical_rows(child.delete_vertex(w)) != parent:
                continue
        seen.add(crows)
    return sorted(seen)


def _expand_chunk(args: tuple[list[tuple[int, ...]], int, Optional[Prune]]) -> list[tuple[int, ...]]:
    parents, target_n, prune = args
    out = []
    for p in parents:
        out.extend(_children(p, target_n, prune))
    return out


def _next_level(level: list[tuple[int, ...]], target_n: int, prune: Optional[Prune],
                workers: int) -> list[tuple[int, ...]]:
    if workers <= 1 or len(level) < 64:
        nxt = _expand_chunk((level, target_n, prune))
    else:
        step = max(1, len(level) // (workers * 8))
        chunks = [(level[i:i + step], target_n, prune) for i in range(0, len(level), step)]
        nxt = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_expand_chunk, chunks):
                nxt.extend(part)
    nxt.sort()
    return nxt


def triangle_free_levels(n: int, prune: Optional[Prune] = None, workers: int = 1) -> list[tuple[int, ...]]:
    """Canonical adjacency rows of every triangle-free class of order ``n``.

    ``prune`` may discard nodes whose every descendant is uninteresting; it is
    applied at all levels, so it must be monotone under taking induced
    subgraphs.
    """
    if n < 0:
        raise EnumerationError("negative order")
    if prune is None and n in _level_cache:
        return _level_cache[n]
    level: list[tuple[int, ...]] = [()]
    for k in range(n):
        level = _next_level(level, n, prune, workers)
        log.debug("level %d: %d classes", k + 1, len(level))
    if prune is None and n <= _CACHE_MAX_ORDER:
        _level_cache[n] = level
    return level


def enumerate_triangle_free(n: int, filter: EnumFilter = NO_FILTER, *,
                            prune: Optional[Prune] = None, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per triangle-free class of order ``n`` passing ``filter``.

    Output is sorted by canonical adjacency rows and independent of ``workers``.
    """
    if n > MAX_ENUM_ORDER:
        est = _CLASS_COUNTS.get(n)
        hint = f" (about {est:,} classes)" if est else ""
        raise EnumerationError(f"enumeration refused for n={n} > {MAX_ENUM_ORDER}{hint}")
    if filter.min_chromatic > n + 1:
        raise EnumerationError("min_chromatic exceeds n + 1")
    if filter.min_chromatic >= 4 and n <= 10:
        log.info("n=%d: triangle-free graphs with chromatic number >= 4 need at least 11 vertices; "
                 "the result is empty by theory", n)
    for rows in triangle_free_levels(n, prune=prune, workers=workers):
        g = Graph(n, rows)
        if filter.accepts(g):
            yield g


def brute_force_all(n: int, predicate: Optional[Callable[[Graph], bool]] = None) -> list[Graph]:
    """Canonical representatives of all graphs of order ``n`` (n <= 7), sorted.

    ``predicate`` must be isomorphism-invariant; labelled graphs failing it are
    skipped before canonical labelling, which is what makes n = 7 affordable
    for the triangle-free oracle.
    """
    if n > MAX_BRUTE_ORDER:
        raise EnumerationError(f"brute force refused for n={n} > {MAX_BRUTE_ORDER}")
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            i += 1
        g = Graph(n, tuple(rows))
        if predicate is None or predicate(g):
            seen.add(canonical_rows(g))
    return [Graph(n, r) for r in sorted(seen)]


@dataclass(frozen=True)
class IngestError:
    line: int
    message: str


def ingest_graph6(lines: Iterable[str], errors: Optional[list] = None) -> Iterator[Graph]:
    """Decode graph6 lines in order.

    Bad lines are logged and appended to ``errors`` as :class:`IngestError`
    (1-based line numbers); decoding continues with the next line.
    """
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield graph6_decode(text)
        except Graph6Error as e:
            log.warning("line %d: %s", lineno, e)
            if errors is not None:
                errors.append(IngestError(lineno, str(e)))
