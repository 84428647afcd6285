# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; results match ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)

cdef inline u64 bit(int i) nogil:
    return (<u64>1) << i

cdef inline u64 fullmask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return bit(n) - 1


cdef int load(object seq, u64* out, int n) except -1:
    cdef int i
    for i in range(n):
        out[i] = <u64>seq[i]
    return 0


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

cdef struct Canon:
    int n
    u64 adj[64]
    u64 twins[64]
    int have
    int best_order[64]
    u64 best_key[64]


cdef void refine(Canon* C, int* lab, int* start, int* ncells) nogil:
    cdef int n = C.n
    cdef int nlab[64]
    cdef int nstart[65]
    cdef int cnt[64]
    cdef int s, c, i, j, a, b, nn, pos, split, lo, hi, val, nxt
    cdef u64 w
    while True:
        split = 0
        for s in range(ncells[0]):
            w = 0
            for i in range(start[s], start[s + 1]):
                w |= bit(lab[i])
            pos = 0
            nn = 0
            for c in range(ncells[0]):
                a = start[c]
                b = start[c + 1]
                if b - a == 1:
                    nstart[nn] = pos
                    nn += 1
                    nlab[pos] = lab[a]
                    pos += 1
                    continue
                lo = 1 << 30
                hi = -1
                for i in range(a, b):
                    cnt[i] = popc(C.adj[lab[i]] & w)
                    if cnt[i] < lo:
                        lo = cnt[i]
                    if cnt[i] > hi:
                        hi = cnt[i]
                if lo == hi:
                    nstart[nn] = pos
                    nn += 1
                    for i in range(a, b):
                        nlab[pos] = lab[i]
                        pos += 1
                    continue
                split = 1
                val = lo
                while val <= hi:
                    nxt = 1 << 30
                    nstart[nn] = pos
                    nn += 1
                    for i in range(a, b):
                        if cnt[i] == val:
                            nlab[pos] = lab[i]
                            pos += 1
                        elif cnt[i] > val and cnt[i] < nxt:
                            nxt = cnt[i]
                    val = nxt
            if split:
                nstart[nn] = pos
                memcpy(lab, nlab, n * sizeof(int))
                memcpy(start, nstart, (nn + 1) * sizeof(int))
                ncells[0] = nn
                break
        if not split:
            return


cdef void canon_leaf(Canon* C, int* lab) nogil:
    cdef int n = C.n
    cdef int pos[64]
    cdef u64 key[64]
    cdef int i, v
    cdef u64 a, m
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        a = C.adj[lab[i]]
        m = 0
        while a:
            v = ctz(a)
            a &= a - 1
            m |= bit(pos[v])
        key[i] = m
    if C.have:
        for i in range(n):
            if key[i] != C.best_key[i]:
                break
        else:
            return
        if key[i] > C.best_key[i]:
            return
    C.have = 1
    memcpy(C.best_key, key, n * sizeof(u64))
    memcpy(C.best_order, lab, n * sizeof(int))


cdef void canon_search(Canon* C, int* lab, int* start, int ncells) nogil:
    cdef int n = C.n
    cdef int nlab[64]
    cdef int nstart[65]
    cdef int nc, t, a, b, i, j, v, pos
    cdef u64 tried
    if ncells == n:
        canon_leaf(C, lab)
        return
    t = 0
    while start[t + 1] - start[t] == 1:
        t += 1
    a = start[t]
    b = start[t + 1]
    tried = 0
    for i in range(a, b):
        v = lab[i]
        if C.twins[v] & tried:
            continue
        tried |= bit(v)
        memcpy(nlab, lab, n * sizeof(int))
        nlab[a] = v
        pos = a + 1
        for j in range(a, b):
            if lab[j] != v:
                nlab[pos] = lab[j]
                pos += 1
        for j in range(t + 1):
            nstart[j] = start[j]
        nstart[t + 1] = a + 1
        for j in range(t + 1, ncells + 1):
            nstart[j + 1] = start[j]
        nc = ncells + 1
        refine(C, nlab, nstart, &nc)
        canon_search(C, nlab, nstart, nc)


def canon_label(int n, adj):
    cdef Canon C
    cdef int lab[64]
    cdef int start[65]
    cdef int ncells, a, b, i
    if n == 0:
        return [], ()
    C.n = n
    C.have = 0
    load(adj, C.adj, n)
    for a in range(n):
        C.twins[a] = 0
    for a in range(n):
        for b in range(a + 1, n):
            if (C.adj[a] & ~bit(b)) == (C.adj[b] & ~bit(a)):
                C.twins[a] |= bit(b)
                C.twins[b] |= bit(a)
    for i in range(n):
        lab[i] = i
    start[0] = 0
    start[1] = n
    ncells = 1
    with nogil:
        refine(&C, lab, start, &ncells)
        canon_search(&C, lab, start, ncells)
    return ([C.best_order[i] for i in range(n)],
            tuple([C.best_key[i] for i in range(n)]))


# ---------------------------------------------------------------------------
# domination
# ---------------------------------------------------------------------------

cdef bint dom_rec(int n, u64* closed, int k, u64 full,
                  u64 dom, u64 chosen, int size, u64 allowed, u64* out) nogil:
    cdef u64 undom = full & ~dom
    cdef u64 c, best_c, x
    cdef int u, cnt, best_cnt, cover, cv, need, v
    if not undom:
        out[0] = chosen
        return True
    if size == k:
        return False
    best_c = 0
    best_cnt = n + 1
    x = undom
    while x:
        u = ctz(x)
        x &= x - 1
        c = closed[u] & allowed
        cnt = popc(c)
        if cnt < best_cnt:
            best_c = c
            best_cnt = cnt
            if cnt <= 1:
                break
    if best_cnt == 0:
        return False
    cover = 0
    x = allowed
    while x:
        v = ctz(x)
        x &= x - 1
        cv = popc(closed[v] & undom)
        if cv > cover:
            cover = cv
    need = (popc(undom) + cover - 1) // cover
    if size + need > k:
        return False
    while best_c:
        v = ctz(best_c)
        best_c &= best_c - 1
        if dom_rec(n, closed, k, full, dom | closed[v], chosen | bit(v),
                   size + 1, allowed, out):
            return True
        allowed &= ~bit(v)
    return False


def dom_feasible(int n, closed, int k, allowed, forced):
    cdef u64 cl[64]
    cdef u64 f = <u64>forced
    cdef u64 al = <u64>allowed
    cdef u64 dom = 0, x
    cdef u64 res = 0
    cdef int start
    cdef bint ok
    load(closed, cl, n)
    x = f
    while x:
        dom |= cl[ctz(x)]
        x &= x - 1
    start = popc(f)
    if start > k:
        return -1
    with nogil:
        ok = dom_rec(n, cl, k, fullmask(n), dom, f, start, al & ~f, &res)
    if not ok:
        return -1
    return res


# ---------------------------------------------------------------------------
# irredundance
# ---------------------------------------------------------------------------

cdef bint max_irr(int n, u64* closed, int* members, int m, u64 once, u64 twice) nogil:
    cdef u64 pns[64]
    cdef u64 undom, nu, cv, x
    cdef int i, v
    cdef bint ok
    for i in range(m):
        pns[i] = closed[members[i]] & ~twice
    undom = fullmask(n) & ~once
    nu = 0
    x = undom
    while x:
        nu |= closed[ctz(x)]
        x &= x - 1
    while nu:
        v = ctz(nu)
        nu &= nu - 1
        cv = closed[v]
        ok = False
        for i in range(m):
            if pns[i] & ~cv == 0:
                ok = True
                break
        if not ok:
            return False
    return True


cdef bint ir_rec(int n, u64* closed, int* members, int m, int r, int below,
                 u64 once, u64 twice, u64* out) nogil:
    cdef int t, i
    cdef u64 ct, nt, no, mask
    cdef bint ok
    if r == 0:
        if max_irr(n, closed, members, m, once, twice):
            mask = 0
            for i in range(m):
                mask |= bit(members[i])
            out[0] = mask
            return True
        return False
    for t in range(r - 1, below):
        ct = closed[t]
        nt = twice | (once & ct)
        no = once | ct
        if ct & ~nt == 0:
            continue
        ok = True
        for i in range(m):
            if closed[members[i]] & ~nt == 0:
                ok = False
                break
        if not ok:
            continue
        members[m] = t
        if ir_rec(n, closed, members, m + 1, r - 1, t, no, nt, out):
            return True
    return False


def ir_search(int n, closed, int k):
    cdef u64 cl[64]
    cdef int members[64]
    cdef u64 res = 0
    cdef bint ok
    if k <= 0 or k > n:
        return -1
    load(closed, cl, n)
    with nogil:
        ok = ir_rec(n, cl, members, 0, k, n, 0, 0, &res)
    if not ok:
        return -1
    return res


# ---------------------------------------------------------------------------
# induced subgraph embedding
# ---------------------------------------------------------------------------

cdef struct Embed:
    int hn
    int pn
    u64 hadj[64]
    u64 hfull
    u64 deg_ok[64]
    u64 padj_pos[64]    # earlier positions adjacent to position i
    int img[64]


cdef bint embed_rec(Embed* E, int i, u64 used) nogil:
    cdef u64 cand, low
    cdef int j
    if i == E.pn:
        return True
    cand = E.deg_ok[i] & ~used
    for j in range(i):
        if E.padj_pos[i] & bit(j):
            cand &= E.hadj[E.img[j]]
        else:
            cand &= E.hfull & ~E.hadj[E.img[j]]
        if not cand:
            return False
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        E.img[i] = ctz(low)
        if embed_rec(E, i + 1, used | low):
            return True
    return False


def find_induced(int hn, hadj, int pn, padj, order):
    cdef Embed E
    cdef u64 pa[64]
    cdef int ordr[64]
    cdef int hdeg[64]
    cdef int i, j, h, p, pd, pnd
    cdef u64 m
    cdef bint ok
    if pn > hn:
        return None
    if pn == 0:
        return ()
    E.hn = hn
    E.pn = pn
    load(hadj, E.hadj, hn)
    load(padj, pa, pn)
    for i in range(pn):
        ordr[i] = order[i]
    E.hfull = fullmask(hn)
    for h in range(hn):
        hdeg[h] = popc(E.hadj[h])
    for i in range(pn):
        p = ordr[i]
        m = 0
        for j in range(i):
            if pa[p] & bit(ordr[j]):
                m |= bit(j)
        E.padj_pos[i] = m
        pd = popc(pa[p])
        pnd = pn - 1 - pd
        m = 0
        for h in range(hn):
            if hdeg[h] >= pd and hn - 1 - hdeg[h] >= pnd:
                m |= bit(h)
        E.deg_ok[i] = m
    with nogil:
        ok = embed_rec(&E, 0, 0)
    if not ok:
        return None
    out = [0] * pn
    for i in range(pn):
        out[ordr[i]] = E.img[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# Bollobas-Cockayne pair scan
# ---------------------------------------------------------------------------

def induced_p4_sequences(int n, adj):
    cdef u64 A[64]
    cdef int a, b, c, d
    cdef u64 xa, xc, xd
    load(adj, A, n)
    out = []
    for b in range(n):
        xc = A[b]
        while xc:
            c = ctz(xc)
            xc &= xc - 1
            xa = A[b] & ~A[c] & ~bit(c)
            while xa:
                a = ctz(xa)
                xa &= xa - 1
                xd = A[c] & ~A[b] & ~A[a] & ~bit(b) & ~bit(a)
                while xd:
                    d = ctz(xd)
                    xd &= xd - 1
                    out.append((a, b, c, d))
    return out


def bc_pair_exists(int n, adj):
    cdef u64 A[64]
    cdef int a, b, c, d, cnt, i, j
    cdef u64 xa, xc, xd
    cdef u64* sa
    cdef u64* sm
    cdef u64* scd
    cdef bint hit = False
    load(adj, A, n)
    cnt = 0
    for b in range(n):
        xc = A[b]
        while xc:
            c = ctz(xc)
            xc &= xc - 1
            xa = A[b] & ~A[c] & ~bit(c)
            while xa:
                a = ctz(xa)
                xa &= xa - 1
                cnt += popc(A[c] & ~A[b] & ~A[a] & ~bit(b) & ~bit(a))
    if cnt < 2:
        return False
    sa = <u64*>malloc(cnt * sizeof(u64))
    sm = <u64*>malloc(cnt * sizeof(u64))
    scd = <u64*>malloc(cnt * sizeof(u64))
    if sa == NULL or sm == NULL or scd == NULL:
        free(sa)
        free(sm)
        free(scd)
        raise MemoryError()
    try:
        with nogil:
            i = 0
            for b in range(n):
                xc = A[b]
                while xc:
                    c = ctz(xc)
                    xc &= xc - 1
                    xa = A[b] & ~A[c] & ~bit(c)
                    while xa:
                        a = ctz(xa)
                        xa &= xa - 1
                        xd = A[c] & ~A[b] & ~A[a] & ~bit(b) & ~bit(a)
                        while xd:
                            d = ctz(xd)
                            xd &= xd - 1
                            sa[i] = bit(a)
                            sm[i] = bit(b) | bit(c) | bit(d)
                            scd[i] = bit(c) | bit(d)
                            i += 1
            for i in range(cnt):
                if hit:
                    break
                for j in range(i + 1, cnt):
                    if (sm[i] & sm[j]) or (sa[i] & scd[j]) or (sa[j] & scd[i]):
                        continue
                    hit = True
                    break
    finally:
        free(sa)
        free(sm)
        free(scd)
    return hit
