"""Simple undirected graphs stored as bit-vector adjacency rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``u ~ v``.  Python
ints grow without bound, so blow-ups of any order share the representation
used by the small-order enumeration code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class EdgeList:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in edges))


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> "Graph":
        rows = tuple(rows)
        if check:
            _check_rows(rows)
        return cls(len(rows), rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_list(self) -> EdgeList:
        return EdgeList(self.n, self.edges())

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            r = 0
            for u in iter_bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in iter_bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(rows), tuple(rows))

    def delete_vertex(self, u: int) -> "Graph":
        return self.induced([v for v in range(self.n) if v != u])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v or rows[u] >> v & 1:
                raise GraphError(f"cannot add edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        rows = self.adj + tuple(r << k for r in other.adj)
        return Graph(self.n + other.n, rows)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_rows(rows: tuple[int, ...]) -> None:
    n = len(rows)
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row < 0 or row & ~full:
            raise GraphError(f"row {v} has bits outside 0..{n - 1}")
        if row >> v & 1:
            raise GraphError(f"loop at vertex {v}")
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {v} and {u}")


def graph_from_edges(e: EdgeList | int, edges: Iterable[Sequence[int]] | None = None) -> Graph:
    """Build a graph from an edge list.

    Accepts either an :class:`EdgeList` or ``(n, edges)``.  Raises
    :class:`GraphError` naming the offending pair on out-of-range endpoints,
    loops or duplicate edges.
    """
    if not isinstance(e, EdgeList):
        e = EdgeList(e, edges or ())
    n = e.n
    if n < 0:
        raise GraphError("negative order")
    rows = [0] * n
    for u, v in e.edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        row = adj[u]
        # only look at v > u so each edge is inspected once
        for v in iter_bits(row >> (u + 1)):
            if row & adj[u + 1 + v]:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    """BFS two-colouring."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        for v in queue:
            for u in iter_bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True



def independence_number_rows(rows: Sequence[int]) -> int:
    """Size of a largest independent set, branching on a max-degree vertex."""

    def rec(cand: int) -> int:
        best_v, best_d = -1, -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (rows[v] & cand).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d <= 0:
            return cand.bit_count()
        bit = 1 << best_v
        take = 1 + rec(cand & ~rows[best_v] & ~bit)
        # a vertex of degree 1 is always safe to take
        if best_d == 1:
            return take
        return max(take, rec(cand & ~bit))

    return rec((1 << len(rows)) - 1)


def independence_number(g: Graph) -> int:
    return independence_number_rows(g.adj)
