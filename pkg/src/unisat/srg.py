"""Strongly regular parameters and the triangle-structure machinery for
uniquely diamond-saturated graphs.

Two different integers are both conventionally called ``k`` in this area:
the common degree of a strongly regular graph (``SrgParams.k``) and the
number of triangles of a graph (``TriangleCover.triangles``).  They are
kept in separately named fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import INF, Graph, GraphError, bfs_layers, bits, diameter, girth, is_connected
from .patterns import C4PLUS, count_triangles, forbidden_check, triangle_list
from .saturation import is_uniquely_saturated, lemma_2_2_check


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def srg_params(g: Graph) -> SrgParams | None:
    """(n, k, lambda, mu) when g is strongly regular, else None.

    Complete and edgeless graphs are rejected; disconnected graphs with
    constant statistics (disjoint equal cliques) are accepted.
    """
    if g.n == 0 or g.num_edges() == 0 or g.is_complete():
        return None
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    adj = g.adj
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = (adj[u] & adj[v]).bit_count()
            if adj[u] >> v & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    return None
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return None
    return SrgParams(g.n, degs.pop(), lam, mu)


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def neighborhood_shell(g: Graph, u_set: Iterable[int], k: int) -> frozenset[int]:
    """Vertices at distance exactly k from the set."""
    src = _mask(u_set)
    if not src:
        raise GraphError("neighbourhood shell of an empty set")
    for v in bits(src):
        g._check(v)
    layers = bfs_layers(g, src)
    return frozenset(bits(layers[k])) if k < len(layers) else frozenset()


@dataclass
class EquivalenceReport:
    """Both sides of an if-and-only-if evaluated on one graph."""

    lhs: bool
    rhs: bool
    details: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "agree": self.agree, **self.details}


def check_theorem_3_1(g: Graph) -> EquivalenceReport:
    """Unique diamond saturation with girth 4, against SRG(n, k, 0, 2)."""
    unique = is_uniquely_saturated(g, C4PLUS)
    gir = girth(g)
    params = srg_params(g)
    return EquivalenceReport(
        lhs=unique and gir == 4,
        rhs=params is not None and params.lam == 0 and params.mu == 2,
        details={
            "unique": unique,
            "girth": None if gir is INF else gir,
            "srg": None if params is None else list(params.as_tuple()),
        },
    )


# -- triangle decomposition ------------------------------------------------


@dataclass
class TriangleDecomposition:
    s: tuple[int, int, int]
    v_sets: tuple[frozenset, frozenset, frozenset]
    n1: frozenset
    n2: frozenset
    # n_ij[(i, j)]: vertices of n2 with exactly j neighbours in v_sets[i]
    n_ij: dict
    property_report: dict

    @property
    def ok(self) -> bool:
        return all(self.property_report.values())

    def to_dict(self) -> dict:
        return {
            "triangle": list(self.s),
            "v_sets": [sorted(x) for x in self.v_sets],
            "n1": sorted(self.n1),
            "n2": sorted(self.n2),
            "n_ij": {f"{i + 1},{j}": sorted(x) for (i, j), x in sorted(self.n_ij.items())},
            "clauses": dict(self.property_report),
        }


def decompose_triangle(g: Graph, s: Iterable[int]) -> TriangleDecomposition:
    s = tuple(sorted(s))
    if len(s) != 3 or len(set(s)) != 3:
        raise GraphError("a triangle needs three distinct vertices")
    a, b, c = s
    if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise GraphError(f"{s} does not span a triangle")
    smask = _mask(s)
    v_masks = [g.adj[x] & ~smask for x in s]
    layers = bfs_layers(g, smask)
    n1 = layers[1] if len(layers) > 1 else 0
    n2 = layers[2] if len(layers) > 2 else 0
    n_ij = {}
    for i, vm in enumerate(v_masks):
        for j in (1, 2):
            n_ij[(i, j)] = frozenset(u for u in bits(n2) if (g.adj[u] & vm).bit_count() == j)
    full = (1 << g.n) - 1
    clauses = {
        "i_partition": smask | n1 | n2 == full,
        "ii_disjoint": all(v_masks[i] & v_masks[j] == 0 for i in range(3) for j in range(i + 1, 3)),
        "iii_independent": all(g.adj[x] & n1 == 0 for x in bits(n1)),
        "iv_one_or_two": all(
            1 <= (g.adj[u] & vm).bit_count() <= 2 for u in bits(n2) for vm in v_masks
        ),
    }
    return TriangleDecomposition(
        s=s,
        v_sets=tuple(frozenset(bits(m)) for m in v_masks),
        n1=frozenset(bits(n1)),
        n2=frozenset(bits(n2)),
        n_ij=n_ij,
        property_report=clauses,
    )


@dataclass
class TriangleCover:
    triangles: int
    triangle_list: list
    a: frozenset
    n_a: frozenset
    n2_a: frozenset
    per_vertex_a_neighbors: dict
    # min over N(A) of (triangles - |N(u) & A|); None when N(A) is empty
    t_param: int | None

    def to_dict(self) -> dict:
        return {
            "triangles": self.triangles,
            "A": sorted(self.a),
            "N(A)": sorted(self.n_a),
            "N2(A)": sorted(self.n2_a),
            "a_neighbors": {str(k): v for k, v in sorted(self.per_vertex_a_neighbors.items())},
            "t": self.t_param,
        }


def triangle_cover(g: Graph) -> TriangleCover:
    tris = triangle_list(g)
    amask = _mask(v for t in tris for v in t)
    if amask:
        layers = bfs_layers(g, amask)
        n1 = layers[1] if len(layers) > 1 else 0
        n2 = layers[2] if len(layers) > 2 else 0
    else:
        n1 = n2 = 0
    per = {u: (g.adj[u] & amask).bit_count() for u in bits(n1)}
    t = min((len(tris) - c for c in per.values()), default=None)
    return TriangleCover(
        triangles=len(tris),
        triangle_list=tris,
        a=frozenset(bits(amask)),
        n_a=frozenset(bits(n1)),
        n2_a=frozenset(bits(n2)),
        per_vertex_a_neighbors=per,
        t_param=t,
    )


def degree_uniformity(g: Graph) -> dict:
    """When N^2(A) is nonempty, all vertices outside A should share one degree.

    Returns whether the antecedent holds and whether the conclusion does.
    """
    cover = triangle_cover(g)
    outside = [v for v in range(g.n) if v not in cover.a]
    degs = {g.degree(v) for v in outside}
    applicable = cover.triangles > 0 and bool(cover.n2_a)
    return {"applicable": applicable, "uniform": len(degs) <= 1, "degrees": sorted(degs)}


# -- order formulas ----------------------------------------------------------


def lemma_3_3_order(t: int) -> int:
    """t^2/2 + t/2 + 1."""
    if t < 0:
        raise ValueError("t must be non-negative")
    value = Fraction(t * t, 2) + Fraction(t, 2) + 1
    assert value.denominator == 1
    return int(value)


def theorem_3_4_bound(k: int, t: int) -> int:
    """k^2/2 + (10t+5)k/2 + (25t^2+7t)/2 + 1 for k >= 2 triangles and 0 <= t <= k-1."""
    if k < 2 or not 0 <= t <= k - 1:
        raise ValueError(f"need k >= 2 and 0 <= t <= k-1, got k={k}, t={t}")
    value = Fraction(k * k, 2) + Fraction((10 * t + 5) * k, 2) + Fraction(25 * t * t + 7 * t, 2) + 1
    assert value.denominator == 1
    return int(value)


def remark_3_2_bound(k: int) -> int:
    """The t = k-1 case in closed form: 18k^2 - 24k + 10."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return 18 * k * k - 24 * k + 10


# -- structural suite --------------------------------------------------------


def lemma_suite(g: Graph) -> dict:
    """Necessary conditions on a nontrivial uniquely diamond-saturated graph.

    Each entry is True when the condition holds on ``g``.
    """
    diam = diameter(g)
    gir = girth(g)
    forb = forbidden_check(g)
    cover = triangle_cover(g)
    tris = cover.triangle_list
    disjoint = len(cover.a) == 3 * len(tris)
    uniform = degree_uniformity(g)
    results = {
        "connected": is_connected(g),
        "diameter_2": diam == 2,
        "girth_3_or_4": gir in (3, 4),
        "no_bowknot": not forb.has_bowknot,
        "no_house": not forb.has_house,
        "no_k23": not forb.has_k23,
        "profile": bool(lemma_2_2_check(g)),
        "triangles_disjoint": disjoint,
        "n2_of_triangles_empty": not cover.n2_a,
        "triangle_decompositions": all(decompose_triangle(g, t).ok for t in tris),
        "degree_uniformity": uniform["uniform"] or not uniform["applicable"],
        "triangle_count_0_or_1": count_triangles(g) in (0, 1),
    }
    return results
