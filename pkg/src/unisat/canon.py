"""Canonical labelling by partition refinement plus individualisation search.

The search is exact: it visits every leaf of the individualisation tree
except subtrees provably equivalent to one already visited, either because
their roots are twins or because a discovered automorphism fixing the
current prefix maps one root onto the other.  The canonical certificate is
the lexicographically smallest tuple of relabelled adjacency rows.
"""

from __future__ import annotations

from .graph import Graph, bits, to_graph6


def _refine(adj, cells):
    """Refine an ordered partition to the coarsest equitable one below it."""
    i = 0
    while i < len(cells):
        w = 0
        for v in cells[i]:
            w |= 1 << v
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        i = 0 if split else i + 1
    return cells


def _relabelled_rows(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _twin_classes(adj, cell):
    """Group cell members whose neighbourhoods agree outside the pair."""
    reps = []
    for v in cell:
        for r in reps:
            mask = ~((1 << v) | (1 << r))
            if adj[v] & mask == adj[r] & mask:
                break
        else:
            reps.append(v)
    return reps


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.best = None
        self.best_order = None
        self.auts = []
        self.leaves = {}

    def run(self, cells, prefix):
        """Explore the subtree below ``prefix``; return a level to jump back to, or None."""
        cells = _refine(self.adj, cells)
        if len(cells) == len(self.adj):
            order = [c[0] for c in cells]
            cert = _relabelled_rows(self.adj, order)
            seen = self.leaves.get(cert)
            if seen is None:
                self.leaves[cert] = (order, prefix)
                if self.best is None or cert < self.best:
                    self.best, self.best_order = cert, order
                return None
            # equal certificates: an automorphism maps this path onto an explored one,
            # so the branch where the two paths part is already covered
            seen_order, seen_prefix = seen
            gamma = [0] * len(order)
            for a, b in zip(order, seen_order):
                gamma[a] = b
            self.auts.append(gamma)
            level = 0
            while prefix[level] == seen_prefix[level]:
                level += 1
            return level
        depth = len(prefix)
        target = min((c for c in cells if len(c) > 1), key=len)
        idx = next(i for i, c in enumerate(cells) if c is target)
        explored = []
        for v in _twin_classes(self.adj, target):
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            jump = self.run(child, prefix + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _same_orbit(self, v, explored, prefix):
        gens = [g for g in self.auts if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(e in orbit for e in explored)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[i]`` is the vertex placed at position ``i``."""
    if g.n == 0:
        return []
    search = _Search(g.adj)
    search.run([list(range(g.n))], [])
    return search.best_order


def canonical_rows(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Canonically relabelled adjacency rows for a raw row tuple (no validation)."""
    if not adj:
        return ()
    search = _Search(adj)
    search.run([list(range(len(adj)))], [])
    return search.best


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    return Graph(g.n, _relabelled_rows(g.adj, order))


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 string: equal exactly for isomorphic graphs."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
