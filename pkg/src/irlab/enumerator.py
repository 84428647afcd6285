"""Isomorph-free generation of all graphs of a given order.

Level ``n`` is built from the canonical graphs of level ``n - 1``: each parent
is extended by one new vertex over every neighbour mask, and a child is kept
iff its canonical deletion vertex yields a graph isomorphic to the parent.
The canonical deletion vertex is the maximum-degree vertex that comes last
in the canonical labelling, so children whose new vertex does not have
maximum degree are rejected before any canonical labelling is computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from irlab import kernels
from irlab.graph import Graph, to_graph6

MAX_ENUM_ORDER = 10


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    connected_only: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUM_ORDER:
            raise ValueError(f"enumeration order must be in 1..{MAX_ENUM_ORDER}, got {self.n}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _deletion_vertex(n: int, adj, order) -> int:
    degs = [_popcount(a) for a in adj]
    top = max(degs)
    for v in reversed(order):
        if degs[v] == top:
            return v
    raise AssertionError


def _delete(adj, w: int) -> tuple[int, ...]:
    low = (1 << w) - 1
    out = []
    for v, a in enumerate(adj):
        if v != w:
            out.append((a & low) | (a >> (w + 1) << w))
    return tuple(out)


def children(parent: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Canonical keys of the accepted children of one canonical parent."""
    m = len(parent)
    n = m + 1
    pdeg = [_popcount(a) for a in parent]
    seen = set()
    out = []
    for mask in range(1 << m):
        d = _popcount(mask)
        # new vertex must be a maximum-degree vertex of the child
        if any(pdeg[v] + (mask >> v & 1) > d for v in range(m)):
            continue
        adj = tuple(a | ((mask >> v & 1) << m) for v, a in enumerate(parent)) + (mask,)
        order, key = kernels.canon_label(n, adj)
        if key in seen:
            continue
        w = _deletion_vertex(n, adj, order)
        if w != m:
            _, pkey = kernels.canon_label(m, _delete(adj, w))
            if pkey != parent:
                continue
        seen.add(key)
        out.append(key)
    return out


_levels: dict[int, tuple[tuple[int, ...], ...]] = {1: ((0,),)}


def _g6key(n: int, key: tuple[int, ...]) -> str:
    return to_graph6(Graph(n, key))


def level(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical adjacency keys of all graphs of order ``n``, sorted by canonical graph6."""
    if n < 1:
        raise ValueError("order must be positive")
    if n not in _levels:
        prev = level(n - 1)
        keys = []
        for parent in prev:
            keys.extend(children(parent))
        keys.sort(key=lambda k: _g6key(n, k))
        _levels[n] = tuple(keys)
    return _levels[n]


def enumerate_graphs(config: EnumerationConfig) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-form order."""
    for key in level(config.n):
        g = Graph(config.n, key)
        if config.connected_only and not g.is_connected():
            continue
        yield g


def count(config: EnumerationConfig) -> int:
    if not config.connected_only:
        return len(level(config.n))
    return sum(1 for _ in enumerate_graphs(config))


def level_accounting(n: int) -> dict[str, object]:
    """Parent-child consistency checks for level ``n`` against level ``n - 1``.

    * every class is distinct;
    * every class's canonical deletion lands in the previous level;
    * every one-vertex deletion of every class lands in the previous level;
    * the classes of all one-vertex extensions of the previous level are
      exactly this level.
    """
    if n < 2:
        raise ValueError("accounting needs n >= 2")
    prev = set(level(n - 1))
    cur = level(n)
    cur_set = set(cur)
    report = {"n": n, "count": len(cur), "distinct": len(cur_set) == len(cur)}
    deletion_ok = canonical_parent_ok = True
    parents_used: dict[tuple[int, ...], int] = {}
    for key in cur:
        order, _ = kernels.canon_label(n, key)
        w = _deletion_vertex(n, key, order)
        _, pk = kernels.canon_label(n - 1, _delete(key, w))
        if pk not in prev:
            canonical_parent_ok = False
        parents_used[pk] = parents_used.get(pk, 0) + 1
        for v in range(n):
            _, dk = kernels.canon_label(n - 1, _delete(key, v))
            if dk not in prev:
                deletion_ok = False
    extended = set()
    for parent in prev:
        m = n - 1
        for mask in range(1 << m):
            adj = tuple(a | ((mask >> v & 1) << m) for v, a in enumerate(parent)) + (mask,)
            extended.add(kernels.canon_label(n, adj)[1])
    report["canonical_parent_in_previous_level"] = canonical_parent_ok
    report["deletions_in_previous_level"] = deletion_ok
    report["extension_closure_matches"] = extended == cur_set
    report["children_per_parent_total"] = sum(parents_used.values())
    report["ok"] = (report["distinct"] and canonical_parent_ok and deletion_ok
                    and report["extension_closure_matches"]
                    and report["children_per_parent_total"] == len(cur))
    return report
