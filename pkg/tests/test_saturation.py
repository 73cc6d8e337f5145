from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from unisat import named
from unisat.graph import from_edges
from unisat.patterns import C4PLUS, TRIANGLE, book_pattern, make_pattern
from unisat.saturation import (
    EdgeKind,
    SaturationError,
    classify_book_edge,
    classify_c4plus_edge,
    is_uniquely_saturated,
    lemma_2_2_check,
    new_copies,
    new_copies_by_difference,
    verdict,
)


def test_paw_and_c4_unique():
    for name in ("paw", "c4"):
        v = verdict(named.named(name), C4PLUS)
        assert v.unique and v.saturated and v.h_free and v.nontrivial and not v.vacuous


def test_petersen_not_diamond_saturated():
    v = verdict(named.petersen(), C4PLUS)
    assert v.h_free and not v.saturated and not v.unique


def test_k4_contains_diamond():
    v = verdict(named.complete(4), C4PLUS)
    assert not v.h_free and v.vacuous and not v.saturated


def test_trivial_small_graph():
    # a 3-vertex graph cannot host a diamond, so it is never nontrivial
    v = verdict(named.path(3), C4PLUS)
    assert not v.nontrivial
    assert not is_uniquely_saturated(named.path(3), C4PLUS)


def test_petersen_uniquely_triangle_saturated():
    assert is_uniquely_saturated(named.petersen(), TRIANGLE)


@given(graphs(max_n=8))
@settings(max_examples=80)
def test_fast_path_matches_generic(g):
    for p in (1, 2, 3):
        h = book_pattern(p)
        for u, v in g.non_edges()[:6]:
            assert new_copies(g, u, v, h) == new_copies_by_difference(g, u, v, h)


@given(graphs(min_n=4, max_n=7))
@settings(max_examples=60)
def test_early_exit_agrees_with_verdict(g):
    v = verdict(g, C4PLUS)
    assert is_uniquely_saturated(g, C4PLUS) == (v.unique and v.nontrivial)


def test_generic_pattern_new_copies():
    paw = make_pattern(named.paw(), "paw")
    g = named.cycle(4)
    # each of the two new triangles takes a pendant at either chord end
    assert new_copies(g, 0, 2, paw) == 4


def test_nonedge_required():
    with pytest.raises(SaturationError):
        new_copies(named.cycle(4), 0, 1, C4PLUS)
    with pytest.raises(SaturationError):
        new_copies(named.cycle(4), 2, 2, C4PLUS)


def test_classify_c4_and_paw():
    c4 = named.cycle(4)
    (only,) = classify_c4plus_edge(c4, 0, 2)
    assert only.kind is EdgeKind.TYPE_I and only.rootlet == (0, 2) and only.induced_shape == "C4"
    paw = named.paw()  # triangle 0-1-2, pendant 3 at 0
    (c,) = classify_c4plus_edge(paw, 1, 3)
    assert c.kind is EdgeKind.TYPE_II and c.rootlet == (0, 1) and c.induced_shape == "C3*"


def test_classify_counts_match_new_copies():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 9))
        for u, v in g.non_edges():
            for p in (1, 2, 3):
                assert len(classify_book_edge(g, u, v, p)) == new_copies(g, u, v, book_pattern(p))


def test_classify_roles_for_books():
    g = named.complete_multipartite(2, 2, 2)
    for c in classify_book_edge(g, 0, 1, 4):
        assert c.kind is EdgeKind.ROOTLET


def test_profile_check():
    rep = lemma_2_2_check(named.paw())
    assert rep.ok and rep.applicable
    rep = lemma_2_2_check(named.folded_5cube())
    assert rep.ok and rep.applicable
    bad = lemma_2_2_check(named.path(4))
    assert not bad.applicable


def test_verdict_per_nonedge_counts():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    v = verdict(g, C4PLUS)
    assert v.per_nonedge == {(0, 2): 1, (1, 3): 1}
