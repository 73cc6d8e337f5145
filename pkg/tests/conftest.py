from __future__ import annotations

import random
from itertools import permutations

import networkx as nx
from hypothesis import strategies as st

from unisat.graph import Graph, from_edges


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def labelled_class_count(n: int) -> int:
    """Brute-force oracle: isomorphism classes of labelled graphs on n vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {e: i for i, e in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = set()
    classes = 0
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        classes += 1
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        for p in perms:
            m = 0
            for u, v in edges:
                a, b = (p[u], p[v]) if p[u] < p[v] else (p[v], p[u])
                m |= 1 << index[(a, b)]
            seen.add(m)
    return classes


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[num])
