"""Exact k-colourability by DSATUR-ordered backtracking."""

from __future__ import annotations

from .graph import Graph, is_triangle_free


def is_k_colorable(g: Graph, k: int) -> bool:
    """Decide whether ``g`` has a proper colouring with ``k`` colours.

    Vertices are coloured in saturation-degree order (ties broken by
    uncoloured degree, then index).  A new colour is only ever introduced as
    the next unused index, so the first vertex always gets colour 0 and colour
    permutations are never revisited.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    if n == 0:
        return True
    if k == 0:
        return False
    adj = g.adj
    # class_mask[c]: vertices currently coloured c
    class_mask = [0] * k
    color = [-1] * n
    uncolored = (1 << n) - 1

    def pick() -> int:
        best = -1
        best_key = None
        m = uncolored
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            sat = 0
            row = adj[v]
            for c in range(k):
                if class_mask[c] & row:
                    sat += 1
            key = (sat, (row & uncolored).bit_count(), -v)
            if best_key is None or key > best_key:
                best_key = key
                best = v
        return best

    def solve(used: int) -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        row = adj[v]
        bit = 1 << v
        uncolored ^= bit
        for c in range(min(used + 1, k)):
            if class_mask[c] & row:
                continue
            class_mask[c] |= bit
            color[v] = c
            if solve(max(used, c + 1)):
                return True
            class_mask[c] ^= bit
        color[v] = -1
        uncolored |= bit
        return False

    return solve(0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.num_edges() == 0:
        return 1
    k = 2 if is_triangle_free(g) else 3
    while not is_k_colorable(g, k):
        k += 1
    return k
