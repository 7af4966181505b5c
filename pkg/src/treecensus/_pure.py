"""Pure-Python counting kernels; algorithmic twin of the compiled module.

Both backends implement the same two hot loops so results are directly
comparable and either can serve as the runtime.

* ``brute_count``: backtracking over colorings in a BFS vertex order.  The
  condition at vertex v is checked as soon as the last member of N[v] is
  colored, pruning the whole color subtree on failure; the star scheme also
  checks each 4-path when its fourth vertex is colored.
* ``pruefer_census``: decodes every Pruefer sequence of length n-2,
  canonicalizes each labeled tree to a packed AHU code (2n bits, '(' = 0,
  ')' = 1, MSB first) and returns the sorted distinct codes.

Counts are plain Python ints, so no overflow is possible here.
"""

from __future__ import annotations

from typing import Sequence

SCHEME_PROPER = 0
SCHEME_CF = 1
SCHEME_ODD = 2
SCHEME_SR = 3
SCHEME_NM = 4
SCHEME_KSCF = 5
SCHEME_STAR = 6
SCHEME_XHOM = 7


def brute_count(
    n: int,
    q: int,
    order: Sequence[int],
    nbr_start: Sequence[int],
    nbr_flat: Sequence[int],
    check_start: Sequence[int],
    check_flat: Sequence[int],
    scheme_id: int,
    kparam: int,
    p4_start: Sequence[int],
    p4_flat: Sequence[int],
) -> int:
    colors = [0] * n
    cnt = [0] * (q + 1)
    col = [0] * n
    count = 0
    depth = 0
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
            if scheme_id == SCHEME_XHOM:
                ok = False
                for j in range(nbr_start[v], nbr_start[v + 1]):
                    if colors[nbr_flat[j]] == cv:
                        ok = True
                        break
            elif scheme_id in (SCHEME_PROPER, SCHEME_STAR):
                for j in range(nbr_start[v], nbr_start[v + 1]):
                    if colors[nbr_flat[j]] == cv:
                        ok = False
                        break
            elif scheme_id == SCHEME_NM:
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
                    if m % 2 == 1:
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
                        if m % 2 == 1:
                            odd_found = True
                        cnt[c] = 0
                if scheme_id == SCHEME_CF:
                    ok = singles >= 1
                elif scheme_id == SCHEME_ODD:
                    ok = odd_found
                elif scheme_id == SCHEME_SR:
                    ok = not repeat
                else:
                    ok = singles >= kparam
            if not ok:
                break

        if ok and scheme_id == SCHEME_STAR:
            # quadruple j occupies p4_flat[4j .. 4j+3]; grouped by ready step
            for j in range(p4_start[depth], p4_start[depth + 1]):
                base = 4 * j
                ca = colors[p4_flat[base]]
                cb = colors[p4_flat[base + 1]]
                cc = colors[p4_flat[base + 2]]
                cd = colors[p4_flat[base + 3]]
                if len({ca, cb, cc, cd}) < 3:
                    ok = False
                    break
        if not ok:
            continue
        if depth == n - 1:
            count += 1
        else:
            depth += 1
            col[depth] = 0
    return count


def _decode_pruefer(n: int, seq: Sequence[int]) -> list[list[int]]:
    """Adjacency lists of the labeled tree for one Pruefer sequence.

    Linear-time pointer variant of smallest-leaf removal: `ptr` scans
    upward and never revisits consumed vertices; a vertex whose degree
    drops to 1 below the pointer becomes the next leaf immediately.
    """
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        adj[leaf].append(x)
        adj[x].append(leaf)
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf].append(n - 1)
    adj[n - 1].append(leaf)
    return adj


def canon_packed(n: int, adj: Sequence[Sequence[int]]) -> int:
    """Packed AHU code (2n bits) of the tree, minimized over its centers."""
    if n == 1:
        return 1  # "()"
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            remaining -= 1
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return min(_rooted_packed(n, adj, root) for root in layer)


def _rooted_packed(n: int, adj: Sequence[Sequence[int]], root: int) -> int:
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for u in adj[v]:
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
    vals = [0] * n
    lens = [0] * n
    for v in reversed(order):
        kids = [u for u in adj[v] if u != parent[v]]
        # MSB-aligned keys give lexicographic order on the bit strings
        kids.sort(key=lambda u: vals[u] << (64 - lens[u]))
        val = 0
        ln = 0
        for u in kids:
            val = (val << lens[u]) | vals[u]
            ln += lens[u]
        vals[v] = (val << 1) | 1  # leading '(' is a 0 bit: length bump only
        lens[v] = ln + 2
    return vals[root]


def pruefer_census(n: int) -> list[int]:
    """Sorted distinct packed codes over all n^(n-2) Pruefer sequences (n >= 2)."""
    out: set[int] = set()
    seq = [0] * (n - 2)
    while True:
        out.add(canon_packed(n, _decode_pruefer(n, seq)))
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return sorted(out)
