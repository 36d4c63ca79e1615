import itertools

from hypothesis import strategies as st

from spectral_extremal.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rows = [0] * n
    for (u, v), on in zip(pairs, mask):
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def has_triangle_brute(g):
    return any(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
               for a, b, c in itertools.combinations(range(g.n), 3))


def colorable_brute(g, k):
    """Try every assignment of k colours."""
    if g.n == 0:
        return True
    for cols in itertools.product(range(k), repeat=g.n):
        if all(cols[u] != cols[v] for u, v in g.edges()):
            return True
    return False


def to_nx(g):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# PASS/FAIL lines appended by the acceptance tests, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
