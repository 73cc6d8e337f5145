"""Command-line interface: ``unisat <command> ...`` (or ``python -m unisat``).

Every command prints one key-sorted JSON report on stdout.  Exit status is
0 when the command ran (whatever the verdict), 2 for unusable input and 3
when a construction precondition fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, named
from .constructions import BookFamilySpec, ConstructionError, verify_claim
from .enumerate import SearchOptions, filter_stream, read_graph6_lines, search
from .graph import INF, Graph, GraphError, diameter, girth, is_connected, parse_graph6, to_graph6
from .patterns import (
    Pattern,
    count_book_copies,
    count_monomorphisms,
    count_subgraph_copies,
    count_triangles,
    forbidden_check,
    make_pattern,
    pattern_from_name,
)
from .saturation import classify_book_edge, classify_c4plus_edge, verdict
from .srg import check_theorem_3_1, decompose_triangle, srg_params, triangle_cover

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


class InputError(GraphError):
    pass


def _ext(x):
    return None if x is INF else x


def _pair(text: str, size: int) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected {size} comma-separated integers, got {text!r}") from None
    if len(parts) != size:
        raise InputError(f"expected {size} comma-separated integers, got {text!r}")
    return parts


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.named is not None:
        return named.named(args.named)
    raise InputError("give a graph with --g6 or --named")


def _load_pattern(args) -> Pattern:
    if getattr(args, "pattern_g6", None):
        return make_pattern(parse_graph6(args.pattern_g6), args.pattern_g6)
    return pattern_from_name(args.pattern)


def _graph_ref(spec: str) -> Graph:
    """A graph given either by name or by graph6 text."""
    try:
        return named.named(spec)
    except GraphError:
        return parse_graph6(spec)


def _digest(*parts: bytes) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
        h.update(b"\n")
    return h.hexdigest()


# -- commands ------------------------------------------------------------------


def cmd_check(args):
    g = _load_graph(args)
    h = _load_pattern(args)
    v = verdict(g, h)
    result = {"n": g.n, "edges": g.num_edges(), "pattern": h.name, **v.summary()}
    result["nonedges"] = len(v.per_nonedge)
    if args.per_edge:
        result["per_nonedge"] = {f"{u},{w}": c for (u, w), c in sorted(v.per_nonedge.items())}
    return result, _digest(to_graph6(g), to_graph6(h.graph))


def cmd_classify(args):
    g = _load_graph(args)
    edges = [_pair(args.edge, 2)] if args.edge else g.non_edges()
    out = {}
    for u, v in edges:
        if args.pages == 2:
            classes = classify_c4plus_edge(g, u, v)
        else:
            classes = classify_book_edge(g, u, v, args.pages)
        out[f"{u},{v}"] = [c.to_dict() for c in classes]
    return {"pages": args.pages, "edges": out}, _digest(to_graph6(g))


def cmd_decompose(args):
    g = _load_graph(args)
    cover = triangle_cover(g)
    triangles = [_pair(args.triangle, 3)] if args.triangle else cover.triangle_list
    return {
        "cover": cover.to_dict(),
        "decompositions": [decompose_triangle(g, t).to_dict() for t in triangles],
    }, _digest(to_graph6(g))


def cmd_srg(args):
    g = _load_graph(args)
    params = srg_params(g)
    return {
        "srg": None if params is None else list(params.as_tuple()),
        "c4plus_girth4_equivalence": check_theorem_3_1(g).to_dict(),
    }, _digest(to_graph6(g))


def cmd_count(args):
    g = _load_graph(args)
    result = {
        "n": g.n,
        "edges": g.num_edges(),
        "triangles": count_triangles(g),
        "connected": is_connected(g),
        "diameter": _ext(diameter(g)),
        "girth": _ext(girth(g)),
        "forbidden": forbidden_check(g)._asdict(),
    }
    if args.pages is not None:
        result["book_copies"] = count_book_copies(g, args.pages)
    if args.pattern or args.pattern_g6:
        h = _load_pattern(args)
        result["pattern"] = {
            "name": h.name,
            "aut_count": h.aut_count,
            "monomorphisms": count_monomorphisms(g, h.graph),
            "copies": count_subgraph_copies(g, h),
        }
    return result, _digest(to_graph6(g))


def _write_g6(path: str, report) -> None:
    with open(path, "w") as fh:
        for m in report.matches:
            fh.write(m["graph6"] + "\n")


def _search_options(args, n_range) -> SearchOptions:
    pattern = pattern_from_name(args.pattern)
    return SearchOptions(
        n_range=n_range,
        pattern=pattern,
        connected_only=args.connected,
        pruning=args.prune,
        workers=args.workers,
    )


def cmd_search(args):
    opts = _search_options(args, (args.n_min, args.n_max))
    report = search(opts)
    if args.g6_out:
        _write_g6(args.g6_out, report)
    key = f"{args.n_min}:{args.n_max}:{args.pattern}:{args.connected}:{args.prune}".encode()
    return report.to_dict(), _digest(key)


def cmd_filter(args):
    if args.file:
        with open(args.file, "rb") as fh:
            lines = list(read_graph6_lines(fh))
    else:
        lines = list(read_graph6_lines(sys.stdin.buffer))
    opts = _search_options(args, (0, 0))
    report = filter_stream(lines, opts)
    if args.g6_out:
        _write_g6(args.g6_out, report)
    return report.to_dict(), _digest(*lines)


def cmd_construct(args):
    fam = args.family
    if fam == "cone":
        base = _graph_ref(args.base)
        spec = BookFamilySpec("cone", args.p, {"base": base})
    elif fam == "multipartite":
        spec = BookFamilySpec("multipartite", None, {"r": args.r, "k": args.k})
    elif fam == "clique-deletion":
        removed = [_graph_ref(x) for x in args.removed]
        if len(removed) == 1 and args.r and args.r > 1:
            removed = removed * args.r
        spec = BookFamilySpec("clique_deletion", None, {"r": args.r or len(removed), "removed": removed})
    else:
        spec = BookFamilySpec("srg_girth4", args.p, {"graph": _graph_ref(args.graph)})
    if fam in ("cone", "srg") and args.p is None:
        raise InputError("--p is required for this family")
    if fam == "multipartite" and (args.r is None or args.k is None):
        raise InputError("--r and --k are required for multipartite")
    report = verify_claim(spec)
    return report.to_dict(), _digest(json.dumps(_echo(args), sort_keys=True).encode())


# -- plumbing ------------------------------------------------------------------

# execution-only flags, left out of the command echo so reports compare equal
_NOT_ECHOED = {"workers", "g6_out", "human", "timing", "func"}


def _add_graph_input(p):
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--g6", help="graph in graph6 format")
    grp.add_argument("--named", help="named graph, e.g. petersen, book:3, multipartite:2,2,2")


def _add_pattern(p, default="c4plus"):
    p.add_argument("--pattern", default=default, help="pattern name (c4plus, book:p, k3, house, ...)")
    p.add_argument("--pattern-g6", help="pattern given as graph6")


def _add_search_flags(p):
    p.add_argument("--connected", action="store_true", help="only examine connected graphs")
    p.add_argument("--prune", action="store_true", help="apply diamond-specific necessary conditions first")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--g6-out", help="write matches as canonical graph6 lines to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unisat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--human", action="store_true", help="plain text instead of JSON")
    parser.add_argument("--timing", action="store_true", help="include wall-clock seconds in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="saturation verdict for a graph and pattern")
    _add_graph_input(p)
    _add_pattern(p)
    p.add_argument("--per-edge", action="store_true", help="include created-copy counts per non-edge")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="roles of each non-edge in the books it creates")
    _add_graph_input(p)
    p.add_argument("--edge", help="single non-edge u,v (default: all)")
    p.add_argument("--pages", type=int, default=2, help="book size; 2 gives type I / type II")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="triangle neighbourhood structure")
    _add_graph_input(p)
    p.add_argument("--triangle", help="triangle a,b,c (default: every triangle)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("srg", help="strongly regular parameters")
    _add_graph_input(p)
    p.set_defaults(func=cmd_srg)

    p = sub.add_parser("count", help="invariants and copy counts")
    _add_graph_input(p)
    _add_pattern(p, default=None)
    p.add_argument("--pages", type=int, help="also count copies of the book B_p")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("search", help="exhaustive search over all graphs with n_min..n_max vertices")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("pattern", nargs="?", default="c4plus")
    _add_search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("filter", help="filter a graph6 stream for uniquely saturated members")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--stdin", action="store_true", help="read graph6 lines from standard input (default)")
    src.add_argument("--file", help="read graph6 lines from a file")
    p.add_argument("--pattern", default="c4plus")
    _add_search_flags(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("construct", help="build a book-saturated family member and verify it")
    p.add_argument("family", choices=["cone", "multipartite", "clique-deletion", "srg"])
    p.add_argument("--base", default="k2", help="cone: base graph (name or graph6)")
    p.add_argument("--graph", default="folded_5cube", help="srg: graph to check (name or graph6)")
    p.add_argument("--p", type=int, help="page count")
    p.add_argument("--r", type=int, help="number of parts / removed graphs")
    p.add_argument("--k", type=int, help="part size")
    p.add_argument("--removed", action="append", default=[], help="clique-deletion: removed graph (repeatable)")
    p.set_defaults(func=cmd_construct)
    return parser


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_ECHOED}


def render_human(report: dict, prefix: str = "") -> list[str]:
    lines = []
    for key in sorted(report):
        value = report[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            lines.extend(render_human(value, name + "."))
        else:
            lines.append(f"{name}: {json.dumps(value, sort_keys=True)}")
    return lines


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        results, digest = args.func(args)
    except ConstructionError as exc:
        print(f"unisat: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, OSError) as exc:
        print(f"unisat: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {
        "command": _echo(args),
        "input_digest": digest,
        "results": results,
        "version": __version__,
    }
    if args.timing:
        report["timing"] = round(time.perf_counter() - start, 6)
    if args.human:
        print("\n".join(render_human(report)))
    else:
        print(dumps(report))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
