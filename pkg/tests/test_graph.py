import random

import pytest
from hypothesis import given, settings, strategies as st

from irlab.enumerator import EnumerationConfig, enumerate_graphs
from irlab.graph import (
    Graph, Graph6BodyError, Graph6Error, Graph6HeaderError, Graph6OrderError,
    Graph6PaddingError, are_isomorphic, canonical_form, canonical_graph, closed_neighborhood,
    closed_neighborhood_of_set, complete, cycle, disjoint_union, from_graph6, induced_subgraph,
    members, path, star, to_adjlist, to_dot, to_graph6, vset,
)

from oracles import all_labeled, brute_isomorphic, certificate, relabel_adj


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def test_graph6_small_known():
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(Graph.empty(1)) == "@"
    assert from_graph6("A_") == complete(2)
    assert from_graph6(">>graph6<<Bw") == complete(3)
    assert from_graph6(b"A_\n") == complete(2)


@pytest.mark.parametrize("n", [62, 63, 64])
def test_graph6_long_header(n):
    g = complete(n)
    text = to_graph6(g)
    assert text.startswith("~") == (n >= 63)
    assert from_graph6(text) == g


@pytest.mark.parametrize("text,err", [
    ("", Graph6HeaderError),
    ("~", Graph6HeaderError),
    ("~?", Graph6HeaderError),
    ("~~??????", Graph6OrderError),
    ("~?A?", Graph6OrderError),
    ("A", Graph6BodyError),
    ("A?\x7f", Graph6BodyError),
    ("A__", Graph6BodyError),
    ("A`", Graph6PaddingError),
    ("Bx", Graph6PaddingError),
])
def test_graph6_errors(text, err):
    with pytest.raises(err):
        from_graph6(text)
    assert issubclass(err, Graph6Error) and issubclass(err, ValueError)


def test_graph6_roundtrip_all_labeled_small():
    for n in range(6):
        for g in all_labeled(n):
            assert from_graph6(to_graph6(g)) == g


def test_graph6_roundtrip_all_classes_n7():
    for g in enumerate_graphs(EnumerationConfig(7)):
        assert from_graph6(to_graph6(g)) == g


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=20))
def test_graph6_roundtrip_property(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop
    with pytest.raises(ValueError):
        Graph(2, (4, 0))  # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)


def test_neighbourhoods_on_path():
    g = path(4)
    assert closed_neighborhood(g, 0) == vset([0, 1])
    assert closed_neighborhood(g, 2) == vset([1, 2, 3])
    assert closed_neighborhood_of_set(g, vset([0, 3])) == g.full
    assert closed_neighborhood_of_set(g, 0) == 0


def test_induced_subgraph_renumbers_ascending():
    g = cycle(6)
    h = induced_subgraph(g, vset([0, 1, 2, 4]))
    assert h.n == 4
    assert sorted(h.edges()) == [(0, 1), (1, 2)]
    assert induced_subgraph(g, g.full) == g


def test_basic_constructors():
    assert path(5).num_edges() == 4
    assert cycle(5).num_edges() == 5
    assert complete(5).num_edges() == 10
    assert star(3).degree(0) == 3
    u = disjoint_union(path(4), path(4))
    assert u.n == 8 and u.num_edges() == 6 and len(u.components()) == 2
    assert not u.is_connected() and path(4).is_connected()
    assert complete(4).complement() == Graph.empty(4)


def test_text_exports():
    assert to_adjlist(path(3)).splitlines() == ["0: 1", "1: 0 2", "2: 1"]
    dot = to_dot(path(2), "P2", ["a", "b"])
    assert dot.startswith("graph P2") and '"a"' in dot


def test_canonical_form_matches_brute_force_certificate():
    # up to n = 6: equal canonical forms exactly when brute-force certificates agree
    for n in range(7):
        by_form, by_cert = {}, {}
        for g in enumerate_graphs(EnumerationConfig(n)) if n else [Graph.empty(0)]:
            cf = canonical_form(g)
            cert = certificate(g)
            assert cf not in by_form and cert not in by_cert
            by_form[cf] = cert
            by_cert[cert] = cf
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, relabel_adj(g.adj, perm))
        assert canonical_form(g) == canonical_form(h)
        assert (certificate(g) == certificate(h))


def test_canonical_form_separates_exactly_like_brute_force():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randint(2, 6)
        g, h = random_graph(rng, n), random_graph(rng, n)
        assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)
        assert are_isomorphic(g, h) == brute_isomorphic(g, h)


def test_p4_labelings_share_one_form():
    from itertools import permutations
    forms = {canonical_form(Graph(4, relabel_adj(path(4).adj, p))) for p in permutations(range(4))}
    assert len(forms) == 1


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_canonical_graph_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, relabel_adj(g.adj, perm))
    assert canonical_graph(g) == canonical_graph(h)
    assert are_isomorphic(canonical_graph(g), g)


def test_members_and_vset():
    assert members(0b1011) == [0, 1, 3]
    assert vset([3, 0, 1]) == 0b1011
