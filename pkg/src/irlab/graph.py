"""Simple undirected graphs on at most 64 vertices, stored as bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` marks vertex ``v``.  A
:class:`Graph` keeps one such mask per vertex for its open neighbourhood.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from irlab import kernels

MAX_ORDER = 64


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


class Graph6OrderError(Graph6Error):
    pass


class Graph6BodyError(Graph6Error):
    pass


def vset(vertices: Iterable[int]) -> int:
    """Mask of an iterable of vertex numbers."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of a mask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the open neighbourhood mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the graph")
            if a >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(a):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in members(self.adj[v] >> (v + 1) << (v + 1)):
                yield v, u

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhood masks of all vertices."""
        return tuple(a | (1 << v) for v, a in enumerate(self.adj))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertices")
        adj = [0] * self.n
        for v, a in enumerate(self.adj):
            adj[perm[v]] = vset(perm[u] for u in members(a))
        return Graph(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, self.full & ~(1 << v))

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __str__(self) -> str:
        return to_graph6(self)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for order {g.n}")


def check_set(g: Graph, X: int) -> None:
    if X < 0 or X & ~g.full:
        raise ValueError(f"vertex set {X:#x} is not a subset of V(G)")


def closed_neighborhood(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v] | (1 << v)


def closed_neighborhood_of_set(g: Graph, X: int) -> int:
    check_set(g, X)
    out = X
    for v in members(X):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, S: int) -> Graph:
    """Subgraph induced by ``S``, vertices renumbered in ascending order."""
    check_set(g, S)
    keep = members(S)
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(vset(pos[u] for u in members(g.adj[v] & S)))
    return Graph(len(keep), tuple(adj))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> str:
    """graph6 text (no ``>>graph6<<`` header, no newline)."""
    bits = []
    for j in range(1, g.n):
        a = g.adj[j]
        for i in range(j):
            bits.append(a >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    return (_encode_order(g.n) + bytes(body)).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if data[0] < 0 or data[0] > 63:
        raise Graph6HeaderError(f"invalid order byte {s[0]!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    else:
        if len(data) < 2 or data[1] == 63:
            # '~~' introduces a 36-bit order, far beyond the cap.
            if len(data) >= 2:
                raise Graph6OrderError("order too large (8-byte header)")
            raise Graph6HeaderError("truncated extended header")
        if len(data) < 4 or any(not 0 <= x < 64 for x in data[1:4]):
            raise Graph6HeaderError("malformed extended header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n > MAX_ORDER:
        raise Graph6OrderError(f"order {n} exceeds {MAX_ORDER}")
    if any(not 0 <= x < 64 for x in body):
        raise Graph6BodyError("byte outside graph6 range")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6BodyError(f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# emit-only formats
# ---------------------------------------------------------------------------

def to_adjlist(g: Graph) -> str:
    lines = []
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(map(str, members(g.adj[v]))))
    return "\n".join(lines)


def to_dot(g: Graph, name: str = "G", labels: list[str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def canonical_labeling(g: Graph) -> list[int]:
    """``order[i]`` is the vertex of ``g`` that takes canonical position ``i``."""
    order, _ = kernels.canon_label(g.n, g.adj)
    return order


def canonical_graph(g: Graph) -> Graph:
    order, key = kernels.canon_label(g.n, g.adj)
    return Graph(g.n, tuple(key))


def canonical_form(g: Graph) -> bytes:
    """Labelling-invariant key: graph6 bytes of the canonical relabelling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(map(popcount, g.adj)) != sorted(map(popcount, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# common constructors
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj = []
    off = 0
    for g in graphs:
        adj.extend(a << off for a in g.adj)
        off += g.n
    return Graph(off, tuple(adj))
