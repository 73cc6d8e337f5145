from __future__ import annotations

import random
import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, labelled_class_count, random_graph, to_nx
from unisat import named
from unisat.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from unisat.enumerate import generate_nonisomorphic
from unisat.graph import from_edges, to_graph6


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=8), graphs(max_n=8))
@settings(max_examples=150)
def test_isomorphism_matches_networkx(g, h):
    if g.n != h.n:
        return
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_canonical_graph_is_isomorphic_copy():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        c = canonical_graph(g)
        assert nx.is_isomorphic(to_nx(g), to_nx(c))
        order = canonical_labeling(g)
        assert sorted(order) == list(range(g.n))


def test_highly_symmetric_graphs():
    # regular graphs stress the individualisation search
    for name in ("petersen", "folded_5cube", "k33", "hoffman_singleton"):
        g = named.named(name)
        rng = random.Random(name)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_non_isomorphic_cospectral_pair():
    # same degree sequence, different structure
    c6 = named.cycle(6)
    two_triangles = named.named("triangles2")
    assert not is_isomorphic(c6, two_triangles)
    assert canonical_form(c6) != canonical_form(two_triangles)


def test_generator_counts_against_brute_force():
    expected = [1, 2, 4, 11, 34, 156]
    for n, count in zip(range(1, 7), expected):
        gen = list(generate_nonisomorphic(n))
        assert len(gen) == count
        assert len({canonical_form(g) for g in gen}) == count
        if n <= 5:
            assert labelled_class_count(n) == count


def test_generator_output_is_canonical_and_sorted():
    gen = list(generate_nonisomorphic(5))
    codes = [to_graph6(g) for g in gen]
    assert codes == sorted(codes)
    assert all(canonical_form(g) == to_graph6(g) for g in gen)


def test_small_examples():
    assert is_isomorphic(from_edges(3, [(0, 1), (1, 2)]), from_edges(3, [(0, 2), (2, 1)]))
    assert not is_isomorphic(named.path(4), named.star(4))
