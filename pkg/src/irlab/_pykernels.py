"""Pure-Python reference kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and bit-for-bit identical results; ``irlab.kernels`` picks one at import.
Graphs are passed as ``(n, adj)`` where ``adj`` is a sequence of ``n`` integer
neighbourhood masks (open or closed, as documented per function).
"""


def _popcount(x):
    return bin(x).count("1")


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

def _refine(adj, cells):
    # Split every cell by neighbour count into each splitter cell until stable.
    while True:
        for splitter in cells:
            w = 0
            for v in splitter:
                w |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(_popcount(adj[v] & w), []).append(v)
                if len(groups) > 1:
                    split = True
                    for key in sorted(groups):
                        out.append(groups[key])
                else:
                    out.append(cell)
            if split:
                cells = out
                break
        else:
            return cells


def canon_label(n, adj):
    """Return ``(order, key)`` for the canonical relabelling of ``(n, adj)``.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``key`` is the tuple of relabelled adjacency masks, minimal over the
    search tree of individualise-and-refine.
    """
    if n == 0:
        return [], ()
    twin = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if adj[a] & ~(1 << b) == adj[b] & ~(1 << a):
                twin[a][b] = twin[b][a] = True

    best = [None, None]

    def leaf(cells):
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        key = []
        for v in order:
            m = 0
            for u in _bits(adj[v]):
                m |= 1 << pos[u]
            key.append(m)
        key = tuple(key)
        if best[1] is None or key < best[1]:
            best[0], best[1] = order, key

    def search(cells):
        if len(cells) == n:
            leaf(cells)
            return
        t = 0
        while len(cells[t]) == 1:
            t += 1
        target = cells[t]
        tried = []
        for v in target:
            if any(twin[u][v] for u in tried):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(_refine(adj, cells[:t] + [[v], rest] + cells[t + 1:]))

    search(_refine(adj, [list(range(n))]))
    return best[0], best[1]


# ---------------------------------------------------------------------------
# domination
# ---------------------------------------------------------------------------

def dom_feasible(n, closed, k, allowed, forced):
    """Find a dominating set ``S`` with ``forced <= S <= allowed``, ``|S| <= k``.

    Returns the mask of one such set, or -1.  Branches on the undominated
    vertex with the fewest allowed dominators; a vertex with a single
    candidate is thereby forced.
    """
    full = (1 << n) - 1
    dom = 0
    for v in _bits(forced):
        dom |= closed[v]
    start = _popcount(forced)
    if start > k:
        return -1

    def rec(dom, chosen, size, allowed):
        undom = full & ~dom
        if not undom:
            return chosen
        if size == k:
            return -1
        best_u = -1
        best_c = 0
        best_cnt = n + 1
        for u in _bits(undom):
            c = closed[u] & allowed
            cnt = _popcount(c)
            if cnt < best_cnt:
                best_u, best_c, best_cnt = u, c, cnt
                if cnt <= 1:
                    break
        if best_cnt == 0:
            return -1
        cover = 0
        for v in _bits(allowed):
            cv = _popcount(closed[v] & undom)
            if cv > cover:
                cover = cv
        need = -(-_popcount(undom) // cover)
        if size + need > k:
            return -1
        for v in _bits(best_c):
            found = rec(dom | closed[v], chosen | (1 << v), size + 1, allowed)
            if found >= 0:
                return found
            allowed &= ~(1 << v)
        return -1

    return rec(dom, forced, start, allowed & ~forced)


# ---------------------------------------------------------------------------
# irredundance
# ---------------------------------------------------------------------------

def _max_irr_prop1(n, closed, members, once, twice):
    # Maximality test for an irredundant set, by neighbourhood coverage.
    full = (1 << n) - 1
    pns = [closed[x] & ~twice for x in members]
    undom = full & ~once
    nu = 0
    for u in _bits(undom):
        nu |= closed[u]
    for v in _bits(nu):
        cv = closed[v]
        for pn in pns:
            if pn & ~cv == 0:
                break
        else:
            return False
    return True


def ir_search(n, closed, k):
    """Smallest-mask maximal irredundant set of size exactly ``k``, or -1.

    Sets are produced in increasing mask order: the highest member is
    chosen first, ascending, then the rest recursively below it.  Partial
    sets that are not irredundant are cut, which is sound because every
    subset of an irredundant set is irredundant.
    """
    members = []

    def rec(r, below, once, twice):
        if r == 0:
            if _max_irr_prop1(n, closed, members, once, twice):
                m = 0
                for x in members:
                    m |= 1 << x
                return m
            return -1
        for t in range(r - 1, below):
            ct = closed[t]
            nt = twice | (once & ct)
            no = once | ct
            if ct & ~nt == 0:
                continue
            ok = True
            for x in members:
                if closed[x] & ~nt == 0:
                    ok = False
                    break
            if not ok:
                continue
            members.append(t)
            found = rec(r - 1, t, no, nt)
            members.pop()
            if found >= 0:
                return found
        return -1

    if k <= 0 or k > n:
        return -1
    return rec(k, n, 0, 0)


# ---------------------------------------------------------------------------
# induced subgraph embedding
# ---------------------------------------------------------------------------

def find_induced(hn, hadj, pn, padj, order):
    """First induced embedding of the pattern in the host, or None.

    Pattern vertices are mapped in ``order``; host candidates are tried in
    ascending vertex number, so the result is the least embedding under that
    ordering.  The result is indexed by pattern vertex.
    """
    if pn > hn:
        return None
    if pn == 0:
        return ()
    hdeg = [_popcount(a) for a in hadj]
    hfull = (1 << hn) - 1
    pos_adj = []
    deg_ok = []
    for i, p in enumerate(order):
        earlier = []
        for j in range(i):
            earlier.append((j, bool(padj[p] >> order[j] & 1)))
        pos_adj.append(earlier)
        pd = _popcount(padj[p])
        pnd = pn - 1 - pd
        m = 0
        for h in range(hn):
            if hdeg[h] >= pd and hn - 1 - hdeg[h] >= pnd:
                m |= 1 << h
        deg_ok.append(m)
    img = [0] * pn

    def rec(i, used):
        if i == pn:
            return True
        cand = deg_ok[i] & ~used
        for j, adjacent in pos_adj[i]:
            hj = img[j]
            if adjacent:
                cand &= hadj[hj]
            else:
                cand &= hfull & ~hadj[hj]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    if not rec(0, 0):
        return None
    out = [0] * pn
    for i, p in enumerate(order):
        out[p] = img[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# Bollobas-Cockayne pair scan
# ---------------------------------------------------------------------------

def induced_p4_sequences(n, adj):
    """All ordered vertex sequences (a, b, c, d) spanning an induced P4."""
    out = []
    for b in range(n):
        for c in _bits(adj[b]):
            for a in _bits(adj[b] & ~adj[c] & ~(1 << c)):
                for d in _bits(adj[c] & ~adj[b] & ~adj[a] & ~(1 << b) & ~(1 << a)):
                    out.append((a, b, c, d))
    return out


def bc_pair_exists(n, adj):
    """True iff two induced-P4 sequences form a qualifying pair.

    A pair qualifies when b1, b2, c1, c2, d1, d2 are pairwise distinct and
    neither a1 nor a2 lies in {c1, c2, d1, d2}.
    """
    seqs = []
    for a, b, c, d in induced_p4_sequences(n, adj):
        seqs.append((1 << a, (1 << b) | (1 << c) | (1 << d), (1 << c) | (1 << d)))
    for i in range(len(seqs)):
        a1, m1, cd1 = seqs[i]
        for j in range(i + 1, len(seqs)):
            a2, m2, cd2 = seqs[j]
            if m1 & m2 or a1 & cd2 or a2 & cd1:
                continue
            return True
    return False
