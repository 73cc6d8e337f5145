"""Counting copies of a small pattern graph inside a host graph.

A *copy* is a (not necessarily induced) subgraph of the host isomorphic to
the pattern, identified by its edge set.  The generic counter enumerates
monomorphisms by backtracking and divides by the automorphism count; the
book and triangle counters are closed-form specialisations checked against
it in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import NamedTuple

from . import named
from .graph import Graph, GraphError, bits

MAX_PATTERN = 10


class PatternError(GraphError):
    pass


@dataclass(frozen=True)
class Pattern:
    graph: Graph
    aut_count: int
    name: str = ""
    # set for book patterns so saturation checks can use the rootlet formula
    pages: int | None = field(default=None)

    @property
    def n(self) -> int:
        return self.graph.n


def _match_order(h: Graph) -> list[int]:
    """Greedy order: highest degree first, then always a vertex adjacent to the placed set."""
    degs = h.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        frontier = [v for v in remaining if h.adj[v] & placed]
        pool = frontier or list(remaining)
        v = max(pool, key=lambda x: ((h.adj[x] & placed).bit_count(), degs[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _monomorphisms(g: Graph, h: Graph, limit: int | None = None) -> int:
    if h.n > MAX_PATTERN:
        raise PatternError(f"pattern has {h.n} vertices; the cap is {MAX_PATTERN}")
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order = _match_order(h)
    pos = {v: i for i, v in enumerate(order)}
    # for each step, the earlier steps it must be adjacent to
    back = [[pos[u] for u in bits(h.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    need = [h.adj[v].bit_count() for v in order]
    gdeg = g.degrees()
    gadj = g.adj
    full = (1 << g.n) - 1
    eligible = []
    for d in need:
        mask = 0
        for x in range(g.n):
            if gdeg[x] >= d:
                mask |= 1 << x
        eligible.append(mask)
    image = [0] * h.n
    k = h.n
    count = 0

    def extend(i: int, used: int) -> bool:
        nonlocal count
        cand = eligible[i] & ~used & full
        for j in back[i]:
            cand &= gadj[image[j]]
        if i == k - 1:
            count += cand.bit_count()
            return limit is not None and count >= limit
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    extend(0, 0)
    return count


def count_monomorphisms(g: Graph, h: Graph) -> int:
    """Injective maps V(h) -> V(g) carrying every edge of h onto an edge of g."""
    return _monomorphisms(g, h)


def aut_count(h: Graph) -> int:
    """|Aut(h)|: self-monomorphisms of a finite graph are exactly its automorphisms."""
    return _monomorphisms(h, h)


def make_pattern(h: Graph, name: str = "") -> Pattern:
    return Pattern(h, aut_count(h), name)


def book_pattern(p: int) -> Pattern:
    if p < 1:
        raise PatternError("book patterns need p >= 1")
    # |Aut(B_1)| = |Aut(K3)| = 6; for p >= 2 the rootlet is fixed setwise
    auts = 6 if p == 1 else 2 * factorial(p)
    return Pattern(named.book(p), auts, f"book:{p}", pages=p)


C4PLUS = book_pattern(2)
TRIANGLE = book_pattern(1)


def pattern_from_name(spec: str) -> Pattern:
    name, params = named.parse_name(spec)
    if name in ("c4plus", "diamond"):
        return C4PLUS
    if name == "book":
        if len(params) != 1:
            raise PatternError("book pattern needs exactly one page count")
        return book_pattern(params[0])
    if name == "k3":
        return TRIANGLE
    return make_pattern(named.named(name, *params), spec)


def count_subgraph_copies(g: Graph, h: Pattern) -> int:
    mono = count_monomorphisms(g, h.graph)
    copies, rem = divmod(mono, h.aut_count)
    if rem:
        raise AssertionError(f"{mono} monomorphisms not divisible by |Aut| = {h.aut_count}")
    return copies


def contains(g: Graph, h: Pattern) -> bool:
    return _monomorphisms(g, h.graph, limit=1) > 0


def count_triangles(g: Graph) -> int:
    total = 0
    adj = g.adj
    for u in range(g.n):
        above_u = adj[u] >> (u + 1) << (u + 1)
        for v in bits(above_u):
            total += (adj[u] & adj[v] >> (v + 1) << (v + 1)).bit_count()
    return total


def triangle_list(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            for w in bits(adj[u] & adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def count_book_copies(g: Graph, p: int) -> int:
    """Each copy of B_p is a rootlet edge plus a p-subset of its common neighbours.

    B_1 is a triangle, whose three edges are interchangeable, hence the
    division by three.
    """
    if p < 1:
        raise PatternError("page count must be at least 1")
    total = 0
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            total += comb((adj[u] & adj[v]).bit_count(), p)
    return total // 3 if p == 1 else total


def contains_k2q(g: Graph, q: int) -> bool:
    """K_{2,q} as a subgraph: some pair of vertices with at least q common neighbours."""
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (adj[u] & adj[v]).bit_count() >= q:
                return True
    return False


BOWKNOT = make_pattern(named.bowknot(), "bowknot")
HOUSE = make_pattern(named.house(), "house")
K23 = make_pattern(named.complete_multipartite(2, 3), "k23")


class ForbiddenReport(NamedTuple):
    has_bowknot: bool
    has_house: bool
    has_k23: bool

    def any(self) -> bool:
        return self.has_bowknot or self.has_house or self.has_k23


def forbidden_check(g: Graph) -> ForbiddenReport:
    return ForbiddenReport(contains(g, BOWKNOT), contains(g, HOUSE), contains_k2q(g, 3))
