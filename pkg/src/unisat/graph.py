"""Immutable simple graphs with bitset adjacency rows.

Vertices are ``0..n-1``; ``adj[v]`` is a Python int whose bit ``u`` is set
when ``uv`` is an edge.  Every operation returns a new value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 128


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex, loop, size cap, graph6)."""


class _Infinite:
    """Singleton marking an unreachable distance or an acyclic girth."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinite, ())

    # larger than every integer, equal only to itself
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinite()


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"n={self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- basic queries -------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.adj[v]))

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        self._check(u)
        self._check(v)
        return frozenset(bits(self.adj[u] & self.adj[v]))

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = (1 << self.n) - 1
        out = []
        for u in range(self.n):
            missing = ~self.adj[u] & full & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(missing))
        return out

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def validate(self) -> None:
        """Check symmetry, loop-freedom, and that no bit lies at or above n."""
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric edge {u}-{v}")

    # -- derived graphs ------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"loop edge at {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for u in range(self.n):
            pu = perm[u]
            row = 0
            for v in bits(self.adj[u]):
                row |= 1 << perm[v]
            adj[pu] = row
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in combinations(vs, 2) if self.adj[u] >> v & 1]
        return from_edges(len(vs), edges)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(self.adj)))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_N:
        raise GraphError(f"n={n} outside 0..{MAX_N}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


# -- distances ----------------------------------------------------------


def bfs_layers(g: Graph, sources: int) -> list[int]:
    """Distance layers from the vertex set ``sources`` (a bitmask)."""
    layers = []
    seen = sources
    frontier = sources
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return layers


def distance(g: Graph, u: int, v: int):
    g._check(u)
    g._check(v)
    for d, layer in enumerate(bfs_layers(g, 1 << u)):
        if layer >> v & 1:
            return d
    return INF


def eccentricity(g: Graph, v: int):
    layers = bfs_layers(g, 1 << v)
    reached = 0
    for layer in layers:
        reached |= layer
    if reached != (1 << g.n) - 1:
        return INF
    return len(layers) - 1


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return eccentricity(g, 0) is not INF


def diameter(g: Graph):
    """Largest pairwise distance; INF when disconnected.  The empty graph has diameter 0."""
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e is INF:
            return INF
        best = max(best, e)
    return best


def girth(g: Graph):
    """Length of a shortest cycle via BFS from every vertex; INF for forests."""
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not INF and 2 * dist[x] + 1 >= best:
                break
            for y in bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cycle = dist[x] + dist[y] + 1
                    if best is INF or cycle < best:
                        best = cycle
    return best


# -- operations ---------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_N:
        raise GraphError(f"combined order {n} exceeds {MAX_N}")
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_N:
        raise GraphError(f"combined order {n} exceeds {MAX_N}")
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    return Graph(n, tuple(row | h_all for row in g.adj) + tuple((row << g.n) | g_all for row in h.adj))


# -- graph6 -------------------------------------------------------------

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    raise GraphError(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """Standard graph6 (no header, no newline); bits are the upper triangle column by column."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    count = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            count += 1
            if count == 6:
                out.append(acc + 63)
                acc = count = 0
    if count:
        out.append((acc << (6 - count)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("graph6 contains characters outside 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        raise GraphError("malformed or unsupported graph6 length prefix")
    if n > MAX_N:
        raise GraphError(f"n={n} exceeds {MAX_N}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {expected} for n={n}")
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = 6 * expected - nbits
    if value & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6")
    value >>= pad
    adj = [0] * n
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if value >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos -= 1
    return Graph(n, tuple(adj))
