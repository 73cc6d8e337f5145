"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line in RESULTS (printed in the pytest
terminal summary and on stdout) before asserting.
"""

from __future__ import annotations

import json
import random
import time
from math import comb

from conftest import labelled_class_count, random_graph
from unisat import named
from unisat.canon import canonical_form
from unisat.constructions import clique_deletion, cone_construction, multipartite_example
from unisat.enumerate import SearchOptions, _level, generate_nonisomorphic, search
from unisat.graph import girth, parse_graph6, to_graph6
from unisat.patterns import (
    C4PLUS,
    book_pattern,
    contains_k2q,
    count_book_copies,
    count_subgraph_copies,
    count_triangles,
    make_pattern,
)
from unisat.saturation import is_uniquely_saturated, verdict
from unisat.srg import lemma_suite, remark_3_2_bound, srg_params, theorem_3_4_bound

RESULTS: dict[int, str] = {}

# graphs with required parameters, for the round-trip sweep
_PARAMS = {
    "path": (5,),
    "cycle": (6,),
    "complete": (5,),
    "empty": (3,),
    "star": (5,),
    "double_star": (2, 3),
    "multipartite": (2, 3, 4),
    "book": (3,),
}


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[num] = line
    print(line)


def _positives():
    """Matches of the exhaustive n = 4..8 search (cached across criteria)."""
    if not hasattr(_positives, "cache"):
        _positives.cache = search(SearchOptions((4, 8))).matches
    return _positives.cache


def test_criterion_01_n4_classification():
    t = time.perf_counter()
    rep = search(SearchOptions((4, 4)))
    elapsed = time.perf_counter() - t
    found = {m["graph6"] for m in rep.matches}
    expected = {canonical_form(named.paw()).decode(), canonical_form(named.cycle(4)).decode()}
    c4_code = canonical_form(named.cycle(4)).decode()
    c4 = next((m for m in rep.matches if m["graph6"] == c4_code), None)
    ok = (
        rep.per_n[4][0] == 11
        and found == expected
        and c4 is not None
        and c4["srg"] == [4, 2, 0, 2]
        and elapsed < 1.0
    )
    record(1, ok, f"n=4 matches {sorted(found)} (paw, C4) in {elapsed:.3f}s")
    assert ok


def test_criterion_02_nonexistence_5_to_8():
    _level.cache_clear()
    t = time.perf_counter()
    rep = search(SearchOptions((5, 8)))
    elapsed = time.perf_counter() - t
    counts = {n: rep.per_n[n][0] for n in range(5, 9)}
    ok = not rep.matches and counts == {5: 34, 6: 156, 7: 1044, 8: 12346} and elapsed < 60
    record(2, ok, f"n=5..8 examined {counts}, matches {len(rep.matches)}, {elapsed:.1f}s (cold generation)")
    assert ok


def test_criterion_03_triangle_counts_on_positives():
    matches = _positives()
    tri = [count_triangles(parse_graph6(m["graph6"])) for m in matches]
    ok = bool(matches) and all(t in (0, 1) for t in tri)
    record(3, ok, f"triangle counts of {len(matches)} positives: {tri}")
    assert ok


def test_criterion_04_named_srg_instances():
    t = time.perf_counter()
    details = []
    ok = True
    for name, params, nonedges in (("folded_5cube", (16, 5, 0, 2), 80), ("c4", (4, 2, 0, 2), 2)):
        g = named.named(name)
        v = verdict(g, C4PLUS)
        good = (
            srg_params(g).as_tuple() == params
            and girth(g) == 4
            and v.unique
            and v.nontrivial
            and len(v.per_nonedge) == nonedges
            and comb(g.n, 2) - g.num_edges() == nonedges
        )
        ok &= good
        details.append(f"{name}: {len(v.per_nonedge)} non-edges, unique={v.unique}")
    elapsed = time.perf_counter() - t
    ok &= elapsed < 1.0
    record(4, ok, "; ".join(details) + f" in {elapsed:.3f}s")
    assert ok


def test_criterion_05_gewirtz():
    t = time.perf_counter()
    g = named.named("gewirtz")
    params = srg_params(g)
    v = verdict(g, C4PLUS)
    elapsed = time.perf_counter() - t
    ok = (
        params.as_tuple() == (56, 10, 0, 2)
        and len(v.per_nonedge) == comb(56, 2) - 280 == 1260
        and v.unique
        and v.nontrivial
        and elapsed < 300
    )
    record(5, ok, f"Gewirtz {params.as_tuple()}, {len(v.per_nonedge)} non-edges each create one diamond, {elapsed:.2f}s")
    assert ok


def test_criterion_06_lemma_suite_on_positives():
    graphs = [parse_graph6(m["graph6"]) for m in _positives()]
    graphs += [named.named(x) for x in ("folded_5cube", "gewirtz")]
    failures = []
    for g in graphs:
        assert is_uniquely_saturated(g, C4PLUS)
        suite = lemma_suite(g)
        bad = [k for k, good in suite.items() if not good]
        if bad:
            failures.append((to_graph6(g).decode(), bad))
    ok = not failures
    record(6, ok, f"lemma suite on {len(graphs)} positives, failures {failures}")
    assert ok


def test_criterion_07_counting_oracles():
    rng = random.Random(2024)
    mismatches = 0
    k3 = make_pattern(named.complete(3), "k3")
    generic_books = {p: make_pattern(named.book(p)) for p in (1, 2, 3)}
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        if count_triangles(g) != count_subgraph_copies(g, k3):
            mismatches += 1
        for p, h in generic_books.items():
            if count_book_copies(g, p) != count_subgraph_copies(g, h):
                mismatches += 1
    ok = mismatches == 0
    record(7, ok, f"200 random graphs, book p=1,2,3 and triangles vs generic counter, {mismatches} mismatches")
    assert ok


def test_criterion_08_book_constructions():
    t = time.perf_counter()
    checks = {}
    k33 = named.named("k33")
    checks["K33 uniquely B3"] = is_uniquely_saturated(k33, book_pattern(3))
    k222, p_free, p_sat = multipartite_example(3, 2)
    checks["K222 B3-free"] = p_free == 3 and count_book_copies(k222, 3) == 0
    checks["K222 uniquely B4"] = p_sat == 4 and is_uniquely_saturated(k222, book_pattern(4))
    checks["Petersen uniquely B1"] = is_uniquely_saturated(named.petersen(), book_pattern(1))
    cone2 = cone_construction(named.complete(2), 2)
    checks["cone(K2,2) = paw"] = canonical_form(cone2) == canonical_form(named.paw())
    cone3 = cone_construction(named.complete(3), 3)
    checks["cone(K3,3) uniquely B3"] = is_uniquely_saturated(cone3, book_pattern(3))
    cone22 = cone_construction(named.complete_multipartite(2, 2), 3)
    checks["cone(K22,3) uniquely B3"] = is_uniquely_saturated(cone22, book_pattern(3))
    t2 = named.named("triangles2")
    cd, p = clique_deletion(2, [t2, t2])
    checks["K12-2(2K3) 9-regular"] = set(cd.degrees()) == {9} and p == 9
    checks["K12-2(2K3) uniquely B9"] = is_uniquely_saturated(cd, book_pattern(9))
    verified = [
        (k33, 3),
        (k222, 4),
        (named.petersen(), 1),
        (cone2, 2),
        (cone3, 3),
        (cone22, 3),
        (cd, 9),
    ]
    checks["verified outputs K2,p+1-free"] = all(
        not contains_k2q(g, q + 1) for g, q in verified if is_uniquely_saturated(g, book_pattern(q))
    )
    elapsed = time.perf_counter() - t
    checks["under 30s"] = elapsed < 30
    failed = [k for k, good in checks.items() if not good]
    ok = not failed
    detail = f"{len(checks) - len(failed)}/{len(checks)} clauses in {elapsed:.2f}s"
    if failed:
        counts = sorted(set(verdict(cone22, book_pattern(3)).per_nonedge.values()))
        detail += f"; failed {failed} (cone(K22,3) per-non-edge copy counts {counts})"
    record(8, ok, detail)
    assert ok, failed


def test_criterion_09_bound_formulas():
    bad = []
    for k in range(2, 101):
        if 2 * theorem_3_4_bound(k, 0) != k * k + 5 * k + 2:
            bad.append(("t=0", k))
        if theorem_3_4_bound(k, k - 1) != remark_3_2_bound(k) or remark_3_2_bound(k) != 18 * k * k - 24 * k + 10:
            bad.append(("t=k-1", k))
    ok = not bad
    record(9, ok, f"bound identities for k=2..100, mismatches {bad}")
    assert ok


def test_criterion_10_infrastructure():
    problems = []
    for name in named.NAMES:
        g = named.named(name, *_PARAMS.get(name, ()))
        if parse_graph6(to_graph6(g)) != g:
            problems.append(name)
    rng = random.Random(10)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 64), rng.random())
        s = to_graph6(g)
        if parse_graph6(s) != g or to_graph6(parse_graph6(s)) != s:
            problems.append("random")
    counts = [len(list(generate_nonisomorphic(n))) for n in range(1, 7)]
    oracle = [labelled_class_count(n) for n in range(1, 7)]
    if counts != [1, 2, 4, 11, 34, 156] or counts != oracle:
        problems.append(f"generator {counts} vs oracle {oracle}")
    outputs = {
        w: json.dumps(search(SearchOptions((4, 7), workers=w)).to_dict(), sort_keys=True)
        for w in (1, 2, 4)
    }
    if len(set(outputs.values())) != 1:
        problems.append("worker-count dependence")
    ok = not problems
    record(10, ok, f"round-trip {len(named.NAMES)} named + 1000 random, generator {counts}, workers 1/2/4 identical; problems {problems}")
    assert ok
