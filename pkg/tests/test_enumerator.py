import pytest

from irlab.enumerator import (
    EnumerationConfig, children, count, enumerate_graphs, level, level_accounting,
)
from irlab.graph import canonical_form, to_graph6

from oracles import all_labeled, burnside_count, certificate


def test_config_guard():
    for bad in (0, 11, -1):
        with pytest.raises(ValueError):
            EnumerationConfig(bad)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_counts_small(n, expected):
    assert count(EnumerationConfig(n)) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_labeled_enumeration_with_permutation_dedup(n):
    classes = {certificate(g) for g in all_labeled(n)}
    got = [certificate(g) for g in enumerate_graphs(EnumerationConfig(n))]
    assert len(got) == len(set(got))
    assert set(got) == classes


def test_matches_labeled_enumeration_n6():
    classes = {canonical_form(g) for g in all_labeled(6)}
    got = [canonical_form(g) for g in enumerate_graphs(EnumerationConfig(6))]
    assert len(got) == len(set(got)) == 156
    assert set(got) == classes


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_orbit_counting(n):
    assert count(EnumerationConfig(n)) == burnside_count(n)


def test_no_duplicates_and_sorted_n7():
    gs = list(enumerate_graphs(EnumerationConfig(7)))
    forms = [canonical_form(g) for g in gs]
    assert len(set(forms)) == len(forms) == 1044
    assert [to_graph6(g) for g in gs] == sorted(to_graph6(g) for g in gs)
    # representatives are already canonical
    assert all(canonical_form(g) == to_graph6(g).encode() for g in gs)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_only(n, expected):
    cfg = EnumerationConfig(n, connected_only=True)
    got = list(enumerate_graphs(cfg))
    assert got == [g for g in enumerate_graphs(EnumerationConfig(n)) if g.is_connected()]
    assert len(got) == count(cfg) == expected


def test_deterministic():
    a = [to_graph6(g) for g in enumerate_graphs(EnumerationConfig(6))]
    b = [to_graph6(g) for g in enumerate_graphs(EnumerationConfig(6))]
    assert a == b


@pytest.mark.parametrize("n", range(2, 8))
def test_level_accounting(n):
    rep = level_accounting(n)
    assert rep["ok"], rep


def test_children_partition_level():
    total = sum(len(children(p)) for p in level(5))
    assert total == len(level(6))
