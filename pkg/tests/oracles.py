"""Independent reference computations used only by the tests.

Nothing here calls the search kernels; each routine follows the plain
definition and is only practical at very small orders.
"""
from itertools import combinations, permutations
from math import factorial

from irlab.graph import Graph


def relabel_adj(adj, perm):
    n = len(adj)
    out = [0] * n
    for v in range(n):
        m = 0
        for u in range(n):
            if adj[v] >> u & 1:
                m |= 1 << perm[u]
        out[perm[v]] = m
    return tuple(out)


def certificate(g: Graph):
    """Minimum relabelled adjacency over all n! permutations."""
    return min(relabel_adj(g.adj, p) for p in permutations(range(g.n)))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    target = h.adj
    return any(relabel_adj(g.adj, p) == target for p in permutations(range(g.n)))


def all_labeled(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def burnside_count(n):
    """Number of isomorphism classes of graphs on n vertices, by orbit counting."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for i, (a, b) in enumerate(pairs):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                x, y = pairs[j]
                x, y = perm[x], perm[y]
                j = index[(min(x, y), max(x, y))]
        total += 1 << cycles
    assert total % factorial(n) == 0
    return total // factorial(n)


def induced_embeddings(host: Graph, pattern: Graph):
    """Every injective map preserving adjacency and non-adjacency."""
    for image in permutations(range(host.n), pattern.n):
        ok = True
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(image[u], image[v]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield image


def closed_nbhd_set(g: Graph, X: int) -> int:
    out = X
    for v in range(g.n):
        if X >> v & 1:
            out |= g.adj[v]
    return out


def irredundant_flags(g: Graph):
    """irr[X] for every subset, straight from the private-neighbourhood definition."""
    flags = []
    for X in range(1 << g.n):
        ok = True
        for x in range(g.n):
            if X >> x & 1:
                pn = (g.adj[x] | 1 << x) & ~closed_nbhd_set(g, X & ~(1 << x))
                if not pn:
                    ok = False
                    break
        flags.append(ok)
    return flags


def maximal_by_supersets(g: Graph, flags):
    """max[X]: X irredundant and no proper superset (of any size) irredundant."""
    size = 1 << g.n
    out = []
    for X in range(size):
        if not flags[X]:
            out.append(False)
            continue
        free = (size - 1) & ~X
        sub = free
        hit = False
        while sub:
            if flags[X | sub]:
                hit = True
                break
            sub = (sub - 1) & free
        out.append(not hit)
    return out
