"""Exact domination and irredundance numbers.

Both parameters are additive over connected components, so the public
solvers split the graph, solve each component with the compiled or
pure-Python kernel, and add up.  Witnesses are always the smallest
qualifying vertex set by mask value.
"""
from __future__ import annotations

from dataclasses import dataclass

from irlab import kernels
from irlab.graph import (
    Graph,
    check_set,
    closed_neighborhood_of_set,
    induced_subgraph,
    members,
    popcount,
)

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)


def dominates(g: Graph, X: int, Y: int) -> bool:
    check_set(g, Y)
    return Y & ~closed_neighborhood_of_set(g, X) == 0


def is_dominating(g: Graph, X: int) -> bool:
    return dominates(g, X, g.full)


def private_neighborhood(g: Graph, X: int, x: int) -> int:
    """Vertices of N[x] not in N[X - {x}]."""
    check_set(g, X)
    if not X >> x & 1:
        raise ValueError(f"vertex {x} is not a member of X")
    others = closed_neighborhood_of_set(g, X & ~(1 << x))
    return (g.adj[x] | (1 << x)) & ~others


def is_irredundant(g: Graph, X: int) -> bool:
    return all(private_neighborhood(g, X, x) for x in members(X))


def is_maximal_irredundant(g: Graph, X: int) -> bool:
    """Maximality via the private-neighbourhood domination criterion.

    With ``U = V - N[X]``, an irredundant ``X`` is maximal iff every
    ``v`` in ``N[U]`` has ``PN(x, X) <= N[v]`` for some ``x`` in ``X``.
    """
    if not is_irredundant(g, X):
        raise ValueError("X is not irredundant")
    pns = [private_neighborhood(g, X, x) for x in members(X)]
    U = g.full & ~closed_neighborhood_of_set(g, X)
    for v in members(closed_neighborhood_of_set(g, U)):
        nv = g.adj[v] | (1 << v)
        if not any(pn & ~nv == 0 for pn in pns):
            return False
    return True


def is_maximal_irredundant_by_extension(g: Graph, X: int) -> bool:
    """Maximality straight from the definition: no irredundant proper superset.

    Checking one-vertex extensions suffices, since a subset of an
    irredundant set is irredundant.
    """
    if not is_irredundant(g, X):
        raise ValueError("X is not irredundant")
    return not any(is_irredundant(g, X | (1 << u)) for u in members(g.full & ~X))


# ---------------------------------------------------------------------------
# exact solvers
# ---------------------------------------------------------------------------

def _greedy_dominating(closed: tuple[int, ...], full: int) -> int:
    dom = chosen = 0
    while dom != full:
        best = max(range(len(closed)), key=lambda v: (popcount(closed[v] & ~dom), -v))
        chosen |= 1 << best
        dom |= closed[best]
    return chosen


def _gamma_connected(g: Graph) -> tuple[int, int]:
    n = g.n
    closed = g.closed()
    full = g.full
    upper = popcount(_greedy_dominating(closed, full))
    maxcover = max(popcount(c) for c in closed)
    k = max(1, -(-n // maxcover))
    while k < upper and kernels.dom_feasible(n, closed, k, full, 0) < 0:
        k += 1
    # Lexicographic minimisation: drop high vertices whenever still feasible.
    allowed, forced = full, 0
    for p in range(n - 1, -1, -1):
        if kernels.dom_feasible(n, closed, k, allowed & ~(1 << p), forced) >= 0:
            allowed &= ~(1 << p)
        else:
            forced |= 1 << p
    return k, forced


def _ir_connected(g: Graph) -> tuple[int, int]:
    closed = g.closed()
    for k in range(1, g.n + 1):
        found = kernels.ir_search(g.n, closed, k)
        if found >= 0:
            return k, found
    raise AssertionError("every graph has a maximal irredundant set")


def _by_components(g: Graph, solve) -> SolveResult:
    total = witness = 0
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        value, local = solve(sub)
        total += value
        verts = members(comp)
        for i in members(local):
            witness |= 1 << verts[i]
    return SolveResult(total, witness)


def domination_number(g: Graph) -> SolveResult:
    return _by_components(g, _gamma_connected)


def irredundance_number(g: Graph) -> SolveResult:
    return _by_components(g, _ir_connected)


# ---------------------------------------------------------------------------
# brute-force oracles (tests only)
# ---------------------------------------------------------------------------

def _guard(g: Graph) -> None:
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")


def brute_force_gamma(g: Graph) -> SolveResult:
    _guard(g)
    best = None
    for X in range(1 << g.n):
        if dominates(g, X, g.full):
            size = popcount(X)
            if best is None or size < best[0]:
                best = (size, X)
    return SolveResult(*best)


def brute_force_ir(g: Graph) -> SolveResult:
    _guard(g)
    size_all = 1 << g.n
    irr = [is_irredundant(g, X) for X in range(size_all)]
    # above[X]: some proper superset of X is irredundant
    above = [False] * size_all
    for X in range(size_all - 1, -1, -1):
        for u in range(g.n):
            Y = X | (1 << u)
            if Y != X and (irr[Y] or above[Y]):
                above[X] = True
                break
    best = None
    for X in range(size_all):
        if not irr[X] or above[X]:
            continue
        size = popcount(X)
        if best is None or size < best[0]:
            best = (size, X)
    return SolveResult(*best)
