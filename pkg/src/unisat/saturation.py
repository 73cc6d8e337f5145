"""H-freeness, H-saturation and unique H-saturation, plus edge classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import named
from .canon import canonical_form
from .graph import Graph, GraphError, bits
from .patterns import C4PLUS, Pattern, count_book_copies, count_subgraph_copies


class SaturationError(GraphError):
    pass


@dataclass(frozen=True)
class SaturationVerdict:
    h_free: bool
    saturated: bool
    unique: bool
    nontrivial: bool
    vacuous: bool
    per_nonedge: dict = field(default_factory=dict, compare=False)

    def summary(self) -> dict:
        return {
            "h_free": self.h_free,
            "saturated": self.saturated,
            "unique": self.unique,
            "nontrivial": self.nontrivial,
            "vacuous": self.vacuous,
        }


def _copies(g: Graph, h: Pattern) -> int:
    if h.pages is not None:
        return count_book_copies(g, h.pages)
    return count_subgraph_copies(g, h)


def _book_new_copies(g: Graph, u: int, v: int, p: int) -> int:
    """Copies of B_p through the new edge uv: as the rootlet, or as a page edge."""
    adj = g.adj
    shared = adj[u] & adj[v]
    total = comb(shared.bit_count(), p)
    for w in bits(shared):
        # rootlet uw with v as a page, and rootlet vw with u as a page
        total += comb((adj[u] & adj[w]).bit_count(), p - 1)
        total += comb((adj[v] & adj[w]).bit_count(), p - 1)
    return total // 3 if p == 1 else total


def _require_nonedge(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise SaturationError(f"loop {u}-{v} is not a candidate edge")
    if g.has_edge(u, v):
        raise SaturationError(f"{u}-{v} is already an edge")


def new_copies(g: Graph, u: int, v: int, h: Pattern) -> int:
    """Copies of h in g + uv that use the edge uv."""
    _require_nonedge(g, u, v)
    if h.pages is not None:
        return _book_new_copies(g, u, v, h.pages)
    return count_subgraph_copies(g.add_edge(u, v), h) - count_subgraph_copies(g, h)


def new_copies_by_difference(g: Graph, u: int, v: int, h: Pattern) -> int:
    """Reference route for ``new_copies`` that never uses the book shortcut."""
    _require_nonedge(g, u, v)
    return count_subgraph_copies(g.add_edge(u, v), h) - count_subgraph_copies(g, h)


def verdict(g: Graph, h: Pattern) -> SaturationVerdict:
    h_free = _copies(g, h) == 0
    per = {(u, v): new_copies(g, u, v, h) for u, v in g.non_edges()}
    counts = per.values()
    return SaturationVerdict(
        h_free=h_free,
        saturated=h_free and all(c >= 1 for c in counts),
        unique=h_free and all(c == 1 for c in counts),
        nontrivial=g.n >= h.n,
        vacuous=not per,
        per_nonedge=per,
    )


def is_uniquely_saturated(g: Graph, h: Pattern) -> bool:
    """Early-exit form of ``verdict(g, h).unique and .nontrivial``."""
    if g.n < h.n or _copies(g, h):
        return False
    return all(new_copies(g, u, v, h) == 1 for u, v in g.non_edges())


# -- edge classification ------------------------------------------------


class EdgeKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    ROOTLET = "rootlet"
    PAGE = "page"


@dataclass(frozen=True)
class EdgeClass:
    kind: EdgeKind
    witness: tuple[int, ...]
    rootlet: tuple[int, int]
    induced_shape: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": list(self.witness),
            "rootlet": list(self.rootlet),
            "induced_shape": self.induced_shape,
        }


_SHAPES = {
    canonical_form(named.cycle(4)): "C4",
    canonical_form(named.paw()): "C3*",
    canonical_form(named.book(2)): "C4+",
    canonical_form(named.complete(4)): "K4",
    canonical_form(named.path(4)): "P4",
    canonical_form(named.star(4)): "S4",
}


def _shape(g: Graph, vertices) -> str:
    sub = g.induced(vertices)
    form = canonical_form(sub)
    return _SHAPES.get(form, form.decode())


def classify_book_edge(g: Graph, u: int, v: int, p: int) -> list[EdgeClass]:
    """One entry per copy of B_p created by adding uv, tagged by the role uv plays."""
    _require_nonedge(g, u, v)
    adj = g.adj
    out = []
    shared = adj[u] & adj[v]
    for pages in combinations(bits(shared), p):
        vs = tuple(sorted((u, v) + pages))
        out.append(EdgeClass(EdgeKind.ROOTLET, vs, (min(u, v), max(u, v)), _shape(g, vs)))
    if p == 1:
        # a created triangle is one copy whichever of its edges is called the rootlet
        return out
    for end, other in ((u, v), (v, u)):
        for w in bits(shared):
            for pages in combinations(bits(adj[end] & adj[w]), p - 1):
                vs = tuple(sorted((end, w, other) + pages))
                root = (min(end, w), max(end, w))
                out.append(EdgeClass(EdgeKind.PAGE, vs, root, _shape(g, vs)))
    return out


def classify_c4plus_edge(g: Graph, u: int, v: int) -> list[EdgeClass]:
    """Diamonds created by uv: type I when uv is the chord, type II when it is a cycle edge."""
    relabel = {EdgeKind.ROOTLET: EdgeKind.TYPE_I, EdgeKind.PAGE: EdgeKind.TYPE_II}
    return [
        EdgeClass(relabel[c.kind], c.witness, c.rootlet, c.induced_shape)
        for c in classify_book_edge(g, u, v, 2)
    ]


# -- common-neighbour profile -------------------------------------------


def common_neighbor_profile(g: Graph) -> dict[tuple[int, int], int]:
    adj = g.adj
    return {(u, v): (adj[u] & adj[v]).bit_count() for u, v in g.non_edges()}


@dataclass
class ProfileReport:
    ok: bool
    applicable: bool
    witnesses: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def lemma_2_2_check(g: Graph) -> ProfileReport:
    """Every non-edge has 1 or 2 common neighbours, and exactly 1 precisely when
    exactly one triangle shares an edge with the connecting 2-paths."""
    applicable = is_uniquely_saturated(g, C4PLUS)
    adj = g.adj
    witnesses = []
    for (u, v), c in common_neighbor_profile(g).items():
        if c not in (1, 2):
            witnesses.append({"nonedge": [u, v], "common": c, "reason": "count not in {1,2}"})
            continue
        triangles = set()
        for w in bits(adj[u] & adj[v]):
            for a, b in ((u, w), (w, v)):
                for x in bits(adj[a] & adj[b]):
                    triangles.add(frozenset((a, b, x)))
        if (c == 1) != (len(triangles) == 1):
            witnesses.append(
                {"nonedge": [u, v], "common": c, "triangles": len(triangles), "reason": "triangle condition"}
            )
    return ProfileReport(ok=not witnesses, applicable=applicable, witnesses=witnesses)
