"""Exhaustive generation of small graphs and filtering for unique saturation.

Search results are evidence about the finite range examined, never a proof
of any statement about all orders.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_form, canonical_rows
from .graph import INF, Graph, GraphError, bits, diameter, girth, is_connected, parse_graph6, to_graph6
from .patterns import C4PLUS, Pattern, contains_k2q, count_triangles
from .saturation import is_uniquely_saturated, verdict
from .srg import lemma_suite, srg_params

MAX_SEARCH_N = 9
CHUNK = 512


class SearchError(GraphError):
    pass


@dataclass(frozen=True)
class SearchOptions:
    n_range: tuple[int, int]
    pattern: Pattern = C4PLUS
    connected_only: bool = False
    pruning: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.pruning and self.pattern != C4PLUS:
            raise SearchError("pruning relies on diamond-specific necessary conditions; use it only with c4plus")
        if self.workers < 1:
            raise SearchError("workers must be at least 1")


@dataclass
class SearchReport:
    pattern: str
    # n -> [graphs examined, matches]
    per_n: dict = field(default_factory=dict)
    matches: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "per_n": {str(n): {"examined": e, "matches": m} for n, (e, m) in sorted(self.per_n.items())},
            "matches": self.matches,
            "status": "evidence over the examined range only",
        }


# -- generation ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical adjacency rows of every graph on n vertices, sorted by graph6."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    top = 1 << (n - 1)
    seen = set()
    for parent in _level(n - 1):
        for subset in range(top):
            adj = list(parent)
            for v in bits(subset):
                adj[v] |= top
            adj.append(subset)
            seen.add(canonical_rows(tuple(adj)))
    return tuple(sorted(seen, key=lambda rows: to_graph6(Graph(n, rows))))


def generate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class.

    Vertex augmentation: every graph on n vertices arises from one on n-1 by
    adding a vertex with some neighbour set; duplicates are rejected through
    their canonical form.
    """
    if n < 0 or n > MAX_SEARCH_N:
        raise SearchError(f"generation supports 0 <= n <= {MAX_SEARCH_N}, got {n}")
    for rows in _level(n):
        yield Graph(n, rows)


# -- filtering ---------------------------------------------------------------


def _passes_pruning(g: Graph) -> bool:
    # necessary conditions for nontrivial unique diamond saturation
    if not is_connected(g) or diameter(g) != 2:
        return False
    if contains_k2q(g, 3):
        return False
    return girth(g) in (3, 4)


def _match_record(g: Graph, pattern: Pattern) -> dict:
    v = verdict(g, pattern)
    params = srg_params(g)
    gir = girth(g)
    record = {
        "n": g.n,
        "graph6": canonical_form(g).decode(),
        "triangles": count_triangles(g),
        "girth": None if gir is INF else gir,
        "srg": None if params is None else list(params.as_tuple()),
        "verdict": v.summary(),
    }
    if pattern == C4PLUS:
        record["checks"] = lemma_suite(g)
    return record


def _examine(g: Graph, pattern: Pattern, connected_only: bool, pruning: bool):
    """Return (counted, match-record-or-None)."""
    if connected_only and not is_connected(g):
        return False, None
    if g.n < pattern.n:
        return True, None
    if pruning and not _passes_pruning(g):
        return True, None
    if not is_uniquely_saturated(g, pattern):
        return True, None
    return True, _match_record(g, pattern)


def _examine_chunk(args):
    lines, pattern, connected_only, pruning = args
    out = []
    for line in lines:
        g = parse_graph6(line)
        counted, match = _examine(g, pattern, connected_only, pruning)
        out.append((g.n, counted, match))
    return out


def _coerce(item, position: int) -> Graph:
    if isinstance(item, Graph):
        return item
    try:
        return parse_graph6(item)
    except GraphError as exc:
        raise SearchError(f"stream element {position}: {exc}") from None


def _chunks(graphs: Iterable, size: int):
    chunk = []
    for i, item in enumerate(graphs):
        chunk.append(to_graph6(_coerce(item, i)))
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def filter_stream(graphs: Iterable, opts: SearchOptions, ns: Iterable[int] = ()) -> SearchReport:
    """Scan graphs (Graph values or graph6 lines) for nontrivial unique saturation.

    ``ns`` pre-registers orders so they appear in ``per_n`` even when no graph
    of that order is present.
    """
    report = SearchReport(pattern=opts.pattern.name or to_graph6(opts.pattern.graph).decode())
    for n in ns:
        report.per_n.setdefault(n, [0, 0])
    jobs = (
        (chunk, opts.pattern, opts.connected_only, opts.pruning) for chunk in _chunks(graphs, CHUNK)
    )
    if opts.workers == 1:
        results = map(_examine_chunk, jobs)
        _merge(report, results)
    else:
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            _merge(report, pool.map(_examine_chunk, jobs))
    report.matches.sort(key=lambda m: (m["n"], m["graph6"]))
    return report


def _merge(report: SearchReport, results) -> None:
    for chunk in results:
        for n, counted, match in chunk:
            stats = report.per_n.setdefault(n, [0, 0])
            if counted:
                stats[0] += 1
            if match is not None:
                stats[1] += 1
                report.matches.append(match)


def search(opts: SearchOptions) -> SearchReport:
    lo, hi = opts.n_range
    if not 1 <= lo <= hi <= MAX_SEARCH_N:
        raise SearchError(f"n range must satisfy 1 <= n_min <= n_max <= {MAX_SEARCH_N}, got {lo}..{hi}")
    stream = (g for n in range(lo, hi + 1) for g in generate_nonisomorphic(n))
    return filter_stream(stream, opts, ns=range(lo, hi + 1))


def read_graph6_lines(handle) -> Iterator[bytes]:
    """Non-blank lines of a graph6 stream (text or binary handle)."""
    for line in handle:
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if line:
            yield line


if __name__ == "__main__":  # pragma: no cover
    for g in generate_nonisomorphic(int(sys.argv[1])):
        print(to_graph6(g).decode())
