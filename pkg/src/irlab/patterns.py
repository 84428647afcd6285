"""Induced-subgraph detection against the named catalog."""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from irlab import kernels
from irlab.catalog import CatalogEntry, F_NAMES, catalog, get
from irlab.graph import Graph, path, popcount

# Embedding: tuple indexed by pattern vertex, giving the host vertex.
Embedding = tuple[int, ...]

_P6 = path(6)


def search_order(pattern: Graph) -> list[int]:
    """Static order in which pattern vertices are mapped: degree descending, then index."""
    return sorted(range(pattern.n), key=lambda v: (-popcount(pattern.adj[v]), v))


@lru_cache(maxsize=256)
def _order_for(pattern: Graph) -> tuple[int, ...]:
    return tuple(search_order(pattern))


def find_induced(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """Least induced embedding of ``pattern`` in ``host``, or None.

    "Least" compares images of pattern vertices taken in :func:`search_order`.
    Non-edges are preserved as well as edges, so disconnected patterns work.
    """
    if pattern.n > host.n:
        return None
    return kernels.find_induced(host.n, host.adj, pattern.n, pattern.adj, _order_for(pattern))


def is_induced_embedding(host: Graph, pattern: Graph, emb: Sequence[int]) -> bool:
    """Independent checker: injective, and adjacency agrees on every pair."""
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= h < host.n for h in emb):
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != host.has_edge(emb[u], emb[v]):
                return False
    return True


def contains(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None


def is_p6_free(g: Graph) -> bool:
    return find_induced(g, _P6) is None


def _scan_order(names: Sequence[str]) -> list[CatalogEntry]:
    index = {e.name: i for i, e in enumerate(catalog())}
    entries = []
    for name in names:
        if name not in index:
            raise KeyError(f"unknown catalog name {name!r}")
        entries.append(get(name))
    return sorted(entries, key=lambda e: (e.order, index[e.name]))


def find_forbidden_witness(g: Graph, names: Sequence[str] = F_NAMES
                           ) -> Optional[tuple[str, Embedding]]:
    """First catalog pattern from ``names`` found in ``g``, smallest order first."""
    if not names:
        raise ValueError("names must be nonempty")
    for entry in _scan_order(names):
        if entry.order > g.n:
            break
        emb = find_induced(g, entry.graph)
        if emb is not None:
            return entry.name, emb
    return None


def contained_names(g: Graph, names: Sequence[str]) -> frozenset[str]:
    """All names from ``names`` whose pattern occurs in ``g``."""
    return frozenset(e.name for e in _scan_order(names)
                     if e.order <= g.n and find_induced(g, e.graph) is not None)


def induced_p4_sequences(g: Graph) -> list[tuple[int, int, int, int]]:
    return kernels.induced_p4_sequences(g.n, g.adj)


def bollobas_cockayne_condition(g: Graph) -> bool:
    """True iff no pair of induced-P4 sequences (a_i, b_i, c_i, d_i) has
    b1, b2, c1, c2, d1, d2 pairwise distinct and a1, a2 outside {c1, c2, d1, d2}.
    """
    return not kernels.bc_pair_exists(g.n, g.adj)
