# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled counting kernels; _pure.py is the algorithmic twin.

brute_count backtracks over colorings in a fixed BFS vertex order, checking
each vertex condition as soon as its closed neighborhood is fully colored.
pruefer_census walks all n^(n-2) Pruefer sequences, canonicalizing each
labeled tree to a packed AHU code (2n bits, '(' = 0, ')' = 1, MSB first)
and deduplicating in an open-addressed table.

Capacity limits: n <= 16 vertices (codes fit 32 bits) and counts below
2^63; the Python wrappers route anything larger to the pure backend.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64

cdef enum:
    S_PROPER = 0
    S_CF = 1
    S_ODD = 2
    S_SR = 3
    S_NM = 4
    S_KSCF = 5
    S_STAR = 6
    S_XHOM = 7


def brute_count(int n, int q,
                int[::1] order, int[::1] nbr_start, int[::1] nbr_flat,
                int[::1] check_start, int[::1] check_flat,
                int scheme_id, int kparam,
                int[::1] p4_start, int[::1] p4_flat):
    cdef int colors[16]
    cdef int col[16]
    cdef int *cnt = <int *> malloc((q + 1) * sizeof(int))
    if cnt == NULL:
        raise MemoryError()
    memset(cnt, 0, (q + 1) * sizeof(int))
    cdef u64 count = 0
    cdef int depth = 0
    cdef int v, cv, j, ci, m, c, singles, base, dup_pairs, ca, cb, cc, cd
    cdef bint ok, odd_found, repeat
    col[0] = 0
    try:
        while depth >= 0:
            col[depth] += 1
            if col[depth] > q:
                depth -= 1
                continue
            colors[order[depth]] = col[depth]

            ok = True
            for ci in range(check_start[depth], check_start[depth + 1]):
                v = check_flat[ci]
                cv = colors[v]
                if scheme_id == S_XHOM:
                    ok = False
                    for j in range(nbr_start[v], nbr_start[v + 1]):
                        if colors[nbr_flat[j]] == cv:
                            ok = True
                            break
                elif scheme_id == S_PROPER or scheme_id == S_STAR:
                    for j in range(nbr_start[v], nbr_start[v + 1]):
                        if colors[nbr_flat[j]] == cv:
                            ok = False
                            break
                elif scheme_id == S_NM:
                    ok = False
                    for j in range(nbr_start[v], nbr_start[v + 1]):
                        if colors[nbr_flat[j]] != cv:
                            ok = True
                            break
                else:
                    # multiset schemes: cf, odd, sr, kscf
                    cnt[cv] += 1
                    for j in range(nbr_start[v], nbr_start[v + 1]):
                        cnt[colors[nbr_flat[j]]] += 1
                    singles = 0
                    odd_found = False
                    repeat = False
                    m = cnt[cv]
                    if m:
                        if m == 1:
                            singles += 1
                        else:
                            repeat = True
                        if m & 1:
                            odd_found = True
                        cnt[cv] = 0
                    for j in range(nbr_start[v], nbr_start[v + 1]):
                        c = colors[nbr_flat[j]]
                        m = cnt[c]
                        if m:
                            if m == 1:
                                singles += 1
                            else:
                                repeat = True
                            if m & 1:
                                odd_found = True
                            cnt[c] = 0
                    if scheme_id == S_CF:
                        ok = singles >= 1
                    elif scheme_id == S_ODD:
                        ok = odd_found
                    elif scheme_id == S_SR:
                        ok = not repeat
                    else:
                        ok = singles >= kparam
                if not ok:
                    break

            if ok and scheme_id == S_STAR:
                # quadruple j occupies p4_flat[4j .. 4j+3]; >= 3 distinct colors
                # iff at most one of the six pairs coincides
                for j in range(p4_start[depth], p4_start[depth + 1]):
                    base = 4 * j
                    ca = colors[p4_flat[base]]
                    cb = colors[p4_flat[base + 1]]
                    cc = colors[p4_flat[base + 2]]
                    cd = colors[p4_flat[base + 3]]
                    dup_pairs = ((ca == cb) + (ca == cc) + (ca == cd)
                                 + (cb == cc) + (cb == cd) + (cc == cd))
                    if dup_pairs > 1:
                        ok = False
                        break
            if not ok:
                continue
            if depth == n - 1:
                count += 1
            else:
                depth += 1
                col[depth] = 0
    finally:
        free(cnt)
    return count


cdef u64 _rooted_packed(int n, int *adeg, int *adj_flat, int root) noexcept nogil:
    cdef int parent[16]
    cdef int order[16]
    cdef u64 vals[16]
    cdef int lens[16]
    cdef u64 keybuf[16]
    cdef u64 kidval[16]
    cdef int kidlen[16]
    cdef int no, head, v, u, i, j, k, nk, ln
    cdef u64 val, key

    for v in range(n):
        parent[v] = -1
    parent[root] = root
    order[0] = root
    no = 1
    head = 0
    while head < no:
        v = order[head]
        head += 1
        for j in range(adeg[v]):
            u = adj_flat[16 * v + j]
            if parent[u] == -1:
                parent[u] = v
                order[no] = u
                no += 1
    for i in range(n - 1, -1, -1):
        v = order[i]
        nk = 0
        for j in range(adeg[v]):
            u = adj_flat[16 * v + j]
            if u != parent[v]:
                kidval[nk] = vals[u]
                kidlen[nk] = lens[u]
                # MSB-aligned key: lexicographic order on the bit strings
                keybuf[nk] = vals[u] << (64 - lens[u])
                nk += 1
        for j in range(1, nk):
            val = kidval[j]
            ln = kidlen[j]
            key = keybuf[j]
            k = j - 1
            while k >= 0 and keybuf[k] > key:
                keybuf[k + 1] = keybuf[k]
                kidval[k + 1] = kidval[k]
                kidlen[k + 1] = kidlen[k]
                k -= 1
            keybuf[k + 1] = key
            kidval[k + 1] = val
            kidlen[k + 1] = ln
        val = 0
        ln = 0
        for j in range(nk):
            val = (val << kidlen[j]) | kidval[j]
            ln += kidlen[j]
        vals[v] = (val << 1) | 1  # leading '(' is a 0 bit: length bump only
        lens[v] = ln + 2
    return vals[root]


cdef u64 _canon_packed(int n, int *adeg, int *adj_flat) noexcept nogil:
    cdef int deg2[16]
    cdef int layer[16]
    cdef int nxt[16]
    cdef int nl, nn, remaining, v, u, i, j
    cdef u64 best, cand

    if n == 1:
        return 1  # "()"
    for v in range(n):
        deg2[v] = adeg[v]
    nl = 0
    for v in range(n):
        if deg2[v] == 1:
            layer[nl] = v
            nl += 1
    remaining = n
    while remaining > 2:
        nn = 0
        for i in range(nl):
            v = layer[i]
            remaining -= 1
            for j in range(adeg[v]):
                u = adj_flat[16 * v + j]
                deg2[u] -= 1
                if deg2[u] == 1:
                    nxt[nn] = u
                    nn += 1
        for i in range(nn):
            layer[i] = nxt[i]
        nl = nn
    best = _rooted_packed(n, adeg, adj_flat, layer[0])
    if nl == 2:
        cand = _rooted_packed(n, adeg, adj_flat, layer[1])
        if cand < best:
            best = cand
    return best


def pruefer_census(int n):
    """Sorted distinct packed codes over all n^(n-2) Pruefer sequences (2 <= n <= 12)."""
    if not 2 <= n <= 12:
        raise ValueError("pruefer_census kernel supports 2 <= n <= 12")
    cdef int L = n - 2
    cdef int seq[10]
    cdef int deg[16]
    cdef int adeg[16]
    cdef int adj_flat[256]
    cdef int tbits = 13
    cdef int tsize = 1 << tbits
    cdef u64 tmask = tsize - 1
    cdef u64 *table = <u64 *> malloc(tsize * sizeof(u64))
    if table == NULL:
        raise MemoryError()
    memset(table, 0, tsize * sizeof(u64))
    cdef int i, x, ptr, leaf
    cdef u64 code, idx

    try:
        for i in range(L):
            seq[i] = 0
        while True:
            # decode one sequence (pointer variant of smallest-leaf removal)
            for i in range(n):
                deg[i] = 1
                adeg[i] = 0
            for i in range(L):
                deg[seq[i]] += 1
            ptr = 0
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
            for i in range(L):
                x = seq[i]
                adj_flat[16 * leaf + adeg[leaf]] = x
                adeg[leaf] += 1
                adj_flat[16 * x + adeg[x]] = leaf
                adeg[x] += 1
                deg[x] -= 1
                if deg[x] == 1 and x < ptr:
                    leaf = x
                else:
                    ptr += 1
                    while deg[ptr] != 1:
                        ptr += 1
                    leaf = ptr
            adj_flat[16 * leaf + adeg[leaf]] = n - 1
            adeg[leaf] += 1
            adj_flat[16 * (n - 1) + adeg[n - 1]] = leaf
            adeg[n - 1] += 1

            code = _canon_packed(n, adeg, adj_flat)
            idx = (code * <u64> 0x9E3779B97F4A7C15) >> (64 - tbits)
            while table[idx] != 0 and table[idx] != code:
                idx = (idx + 1) & tmask
            table[idx] = code

            i = L - 1
            while i >= 0 and seq[i] == n - 1:
                seq[i] = 0
                i -= 1
            if i < 0:
                break
            seq[i] += 1

        out = []
        for i in range(tsize):
            if table[i] != 0:
                out.append(table[i])
    finally:
        free(table)
    out.sort()
    return out
