"""Constructors for every named graph used in the package.

``named("book", 3)`` and ``named("book:3")`` are equivalent.  The three
large strongly regular graphs are loaded from embedded graph6 data and
authenticated against their parameters on first use.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, disjoint_union, empty, from_edges, join, parse_graph6


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """S_n: a centre joined to n-1 leaves."""
    if n < 1:
        raise GraphError("a star needs at least 1 vertex")
    return from_edges(n, [(0, i) for i in range(1, n)])


def double_star(s: int, t: int) -> Graph:
    """D_{s,t}: s pendants on vertex 0, t pendants on vertex 1, and the edge 01."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s)]
    edges += [(1, 2 + s + i) for i in range(t)]
    return from_edges(2 + s + t, edges)


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    g = empty(sizes[0])
    for s in sizes[1:]:
        g = join(g, empty(s))
    return g


def book(p: int) -> Graph:
    """B_p: rootlet edge 01 plus p page vertices adjacent to both."""
    if p < 1:
        raise GraphError("a book needs at least one page")
    return join(complete(2), empty(p))


def paw() -> Graph:
    """Triangle 0-1-2 with pendant 3 attached at 0."""
    return from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def house() -> Graph:
    """C5 on 0..4 plus the chord 1-4 (square 1-2-3-4 under roof 0)."""
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def bowknot() -> Graph:
    """Two triangles sharing vertex 0."""
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return from_edges(10, edges)


def folded_5cube() -> Graph:
    # representatives with bit 4 clear; classes x, y adjacent iff dist(x, y) or dist(x, ~y) is 1
    edges = [(x, y) for x, y in combinations(range(16), 2) if bin(x ^ y).count("1") in (1, 4)]
    return from_edges(16, edges)


def hoffman_singleton() -> Graph:
    """Robertson's pentagons P_h and pentagrams Q_i, h, i in Z_5.

    Vertex j of P_h is ``5h + j``; vertex j of Q_i is ``25 + 5i + j``.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return from_edges(50, edges)


_EMBEDDED_PARAMS = {
    "gewirtz": (56, 10, 0, 2),
    "m22": (77, 16, 0, 4),
    "higman_sims": (100, 22, 0, 6),
}


@lru_cache(maxsize=None)
def embedded(name: str) -> Graph:
    from ._data import GRAPH6
    from .srg import srg_params

    g = parse_graph6(GRAPH6[name])
    params = srg_params(g)
    if params is None or params.as_tuple() != _EMBEDDED_PARAMS[name]:
        raise GraphError(f"embedded data for {name} fails its parameter check: {params}")
    return g


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "double_star": double_star,
    "multipartite": complete_multipartite,
    "book": book,
    "paw": paw,
    "house": house,
    "bowknot": bowknot,
    "pentagon": lambda: cycle(5),
    "petersen": petersen,
    "folded_5cube": folded_5cube,
    "hoffman_singleton": hoffman_singleton,
    "gewirtz": lambda: embedded("gewirtz"),
    "m22": lambda: embedded("m22"),
    "higman_sims": lambda: embedded("higman_sims"),
    # short aliases used on the command line
    "c3star": paw,
    "c4plus": lambda: book(2),
    "diamond": lambda: book(2),
    "k23": lambda: complete_multipartite(2, 3),
    "k33": lambda: complete_multipartite(3, 3),
    "k2": lambda: complete(2),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "c4": lambda: cycle(4),
    "triangles2": lambda: disjoint_union(complete(3), complete(3)),
}

NAMES = tuple(sorted(_BUILDERS))


def parse_name(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"book:3"`` or ``"multipartite:2,2,2"`` into name and integer params."""
    name, _, rest = spec.strip().partition(":")
    name = name.lower().replace("-", "_")
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise GraphError(f"bad parameters in {spec!r}") from None
    return name, params


def named(name: str, *params: int) -> Graph:
    if not params and ":" in name:
        name, params = parse_name(name)
    else:
        name = name.lower().replace("-", "_")
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown graph name {name!r}") from None
    try:
        return builder(*params)
    except TypeError:
        raise GraphError(f"bad parameters {params} for {name!r}") from None
