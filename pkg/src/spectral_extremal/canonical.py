"""Canonical labelling for small graphs.

Individualisation-refinement: equitable refinement by neighbour counts into
the current cells, then branching on the first smallest non-singleton cell.
The canonical leaf maximises ``(trace of cell structures along the path,
relabelled adjacency rows)``.  Subtrees are pruned when their trace prefix is
already worse than the incumbent, and when the branching vertex is a twin of
one already tried (the transposition of twins is an automorphism fixing the
current partition, so both subtrees carry identical leaf keys).

Disconnected graphs are labelled component by component; components are
placed largest key first.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_CANON_ORDER = 24


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Equitable refinement; also returns the split keys, an invariant of the node."""
    trace = []
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                key = tuple([(r & m).bit_count() for m in masks])
                g = groups.get(key)
                if g is None:
                    groups[key] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                keys = sorted(groups)
                trace.append(tuple((k, len(groups[k])) for k in keys))
                for key in keys:
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells, tuple(trace)


def _relabel(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(rows)
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        r = rows[v]
        x = 0
        while r:
            low = r & -r
            x |= 1 << pos[low.bit_length() - 1]
            r ^= low
        out.append(x)
    return tuple(out)


def _label_connected(rows: tuple[int, ...]) -> tuple[list[int], tuple[int, ...]]:
    n = len(rows)
    if n == 1:
        return [0], (0,)
    best: list = [None, None, None]  # traces, cert, order

    def visit(cells: list[list[int]], traces: tuple) -> None:
        cells, tr = _refine(rows, cells)
        traces = traces + (tr,)
        bt = best[0]
        if bt is not None:
            k = min(len(bt), len(traces))
            if traces[:k] < bt[:k]:
                return
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _relabel(rows, order)
            if bt is None or (traces, cert) > (bt, best[1]):
                best[0], best[1], best[2] = traces, cert, order
            return
        idx = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                idx, size = i, len(c)
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            rv = rows[v]
            bv = 1 << v
            twin = False
            for u in tried:
                ru = rows[u]
                if ru == rv or ru | (1 << u) == rv | bv:
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            visit(cells[:idx] + [[v], rest] + cells[idx + 1:], traces)

    degs: dict[int, list[int]] = {}
    for v in range(n):
        degs.setdefault(rows[v].bit_count(), []).append(v)
    visit([degs[d] for d in sorted(degs)], ())
    return best[2], best[1]


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position ``i``."""
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical labelling is limited to n <= {MAX_CANON_ORDER} (got {g.n})")
    if g.n == 0:
        return []
    comps = g.components()
    if len(comps) == 1:
        return _label_connected(g.adj)[0]
    parts = []
    for comp in comps:
        sub = g.induced(comp)
        order, cert = _label_connected(sub.adj)
        parts.append(((len(comp), cert), [comp[i] for i in order]))
    parts.sort(key=lambda p: p[0], reverse=True)
    return [v for _, order in parts for v in order]


def canonical_rows(g: Graph) -> tuple[int, ...]:
    return _relabel(g.adj, canonical_labeling(g))


def canonical_form(g: Graph) -> Graph:
    """An isomorph of ``g``; isomorphic inputs give bit-identical outputs."""
    return Graph(g.n, canonical_rows(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_rows(g) == canonical_rows(h)
