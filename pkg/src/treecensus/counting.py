"""Exact counts of valid colorings: pruned brute force plus all closed forms.

Counts are plain Python ints, so results are exact at any size and overflow
is impossible; the compiled kernel is only dispatched when the whole search
space fits 64-bit accumulators.

Closed forms evaluate the counting rules known for paths and stars, with
small-n values fixed by literal evaluation of the predicates (the
brute-force engine arbitrates).  Two boundary cases worth noting:

* odd colorings of paths follow q^(n-2) (q-1)^2 only from n >= 3; the two
  colorings of a single edge must differ, giving q(q-1) at n = 2;
* q(q-1)(q-2)^(n-2) counts star-rainbow and 2-strong-conflict-free path
  colorings from n >= 2, but a single vertex has q star-rainbow colorings
  and no 2-strong-conflict-free coloring at all.
"""

from __future__ import annotations

from array import array
from collections import deque

from . import _backend
from .schemes import CF, Scheme, four_paths
from .trees import Tree

DEFAULT_BUDGET = 2**36
SPOT_CHECK_BUDGET = 2**24

_SCHEME_IDS = {"proper": 0, "cf": 1, "odd": 2, "sr": 3, "nm": 4, "kscf": 5,
               "star": 6, "xhom": 7}


class BudgetExceededError(RuntimeError):
    """The q^n search space exceeds the configured enumeration budget."""


def _bfs_order(t: Tree) -> list[int]:
    order = [0]
    seen = [False] * t.n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in t.adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
                queue.append(u)
    return order


def _prepare(t: Tree, scheme: Scheme):
    """Flatten the search plan into int arrays shared by both backends."""
    n = t.n
    order = _bfs_order(t)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    nbr_start = array("i", [0] * (n + 1))
    nbr_flat = array("i")
    for v in range(n):
        nbr_start[v + 1] = nbr_start[v] + len(t.adj[v])
        nbr_flat.extend(t.adj[v])
    if not nbr_flat:
        nbr_flat.append(0)  # keep the buffer non-empty for memoryviews

    # the condition at v becomes checkable once all of N[v] is colored
    ready = [max(pos[v], max((pos[u] for u in t.adj[v]), default=0)) for v in range(n)]
    by_step: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        by_step[ready[v]].append(v)
    check_start = array("i", [0] * (n + 1))
    check_flat = array("i")
    for i in range(n):
        check_start[i + 1] = check_start[i] + len(by_step[i])
        check_flat.extend(by_step[i])

    p4_start = array("i", [0] * (n + 1))
    p4_flat = array("i")
    if scheme.kind == "star":
        grouped: list[list[tuple[int, int, int, int]]] = [[] for _ in range(n)]
        for quad in four_paths(t):
            grouped[max(pos[x] for x in quad)].append(quad)
        for i in range(n):
            p4_start[i + 1] = p4_start[i] + len(grouped[i])
            for quad in grouped[i]:
                p4_flat.extend(quad)
    if not p4_flat:
        p4_flat.extend((0, 0, 0, 0))

    return array("i", order), nbr_start, nbr_flat, check_start, check_flat, p4_start, p4_flat


def brute_count(t: Tree, q: int, scheme: Scheme, *, budget: int | None = DEFAULT_BUDGET) -> int:
    """Exact number of valid colorings by definition-level enumeration.

    Vertices are colored in BFS order from vertex 0 and each vertex
    condition is checked as soon as its closed neighborhood is complete,
    pruning failing prefixes.  Raises BudgetExceededError when q^n exceeds
    the budget (default 2^36; pass budget=None to disable the guard).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if budget is not None and q**t.n > budget:
        raise BudgetExceededError(
            f"q^n = {q}^{t.n} exceeds enumeration budget {budget}")
    order, nbr_start, nbr_flat, check_start, check_flat, p4_start, p4_flat = _prepare(t, scheme)
    kparam = scheme.k if scheme.kind == "kscf" else 0
    return _backend.brute_count(t.n, q, order, nbr_start, nbr_flat,
                                check_start, check_flat,
                                _SCHEME_IDS[scheme.kind], kparam,
                                p4_start, p4_flat)


# ---------------------------------------------------------------------------
# Closed forms


def proper_count(n: int, q: int) -> int:
    """q (q-1)^(n-1): the same for every tree on n vertices."""
    _check_nq(n, q)
    return q * (q - 1) ** (n - 1)


def path_count(scheme: Scheme, n: int, q: int) -> int:
    """Exact count on the n-vertex path, by closed form or recurrence."""
    _check_nq(n, q)
    kind = scheme.kind
    if kind == "proper":
        return proper_count(n, q)
    if kind == "odd":
        if n == 1:
            return q
        if n == 2:
            return q * (q - 1)
        return q ** (n - 2) * (q - 1) ** 2
    if kind == "sr":
        return q if n == 1 else q * (q - 1) * (q - 2) ** (n - 2)
    if kind == "kscf":
        if scheme.k == 1:
            return path_count(CF, n, q)
        if scheme.k == 2:
            return 0 if n == 1 else q * (q - 1) * (q - 2) ** (n - 2)
        # k >= 3: an endpoint's closed neighborhood has only 2 members
        return 0
    if kind in ("cf", "nm"):
        first = q if kind == "cf" else 0
        vals = (first, q * (q - 1), q * (q - 1) ** 2)
        if n <= 3:
            return vals[n - 1]
        a, b = vals[1], vals[2]
        for _ in range(4, n + 1):
            a, b = b, (q - 1) * (a + b)
        return b
    if kind == "star":
        vals = (q, q * (q - 1), q * (q - 1) ** 2)
        if n <= 3:
            return vals[n - 1]
        a, b = vals[1], vals[2]
        for _ in range(4, n + 1):
            a, b = b, (q - 2) * (a + b)
        return b
    if kind == "xhom":
        if n == 1:
            return 0
        if n <= 3:
            return q
        a, b = q, q
        for _ in range(4, n + 1):
            a, b = b, b + (q - 1) * a
        return b
    raise AssertionError(kind)  # pragma: no cover


def star_count(scheme: Scheme, n: int, q: int) -> int:
    """Exact count on the n-vertex star.

    Leaves force proper behavior for most schemes, so the star count is the
    proper count; star-rainbow needs all n colors distinct (falling
    factorial); a looped-homomorphism coloring of a star must be
    monochromatic.  No closed form is known for kscf with k >= 2, which
    delegates to the brute-force engine.
    """
    _check_nq(n, q)
    kind = scheme.kind
    if n == 1:
        if kind in ("nm", "xhom"):
            return 0
        if kind == "kscf":
            return q if scheme.k == 1 else 0
        return q
    if kind in ("proper", "cf", "odd", "nm", "star"):
        return proper_count(n, q)
    if kind == "sr":
        return _falling_factorial(q, n)
    if kind == "xhom":
        return q
    if kind == "kscf":
        if scheme.k == 1:
            return proper_count(n, q)
        from .trees import star as _star

        return brute_count(_star(n), q, scheme)
    raise AssertionError(kind)  # pragma: no cover


def _falling_factorial(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q - i
        if out <= 0:
            return 0
    return out


def _leaf_bfs_order(t: Tree) -> list[int]:
    if t.n == 1:
        return [0]
    start = min(v for v in range(t.n) if len(t.adj[v]) == 1)
    order = [start]
    seen = [False] * t.n
    seen[start] = True
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in t.adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
                queue.append(u)
    return order


def sr_count_product(t: Tree, q: int, order: list[int] | None = None) -> int:
    """Star-rainbow count of any tree by the iterative coloring product.

    Color along a connected order started at a leaf; vertex v attaching via
    its already-colored neighbor w must avoid w and every colored neighbor
    of w (all distinct by validity at w), so it contributes a factor of
    q - colored_degree(w) - 1.  A nonpositive factor makes the count 0.
    The result is independent of which valid order is used.
    """
    _check_nq(t.n, q)
    if order is None:
        order = _leaf_bfs_order(t)
    else:
        if sorted(order) != list(range(t.n)):
            raise ValueError("order must be a permutation of the vertices")
        if t.n >= 2 and len(t.adj[order[0]]) != 1:
            raise ValueError("order must start at a leaf")
    total = q
    colored = [False] * t.n
    colored[order[0]] = True
    for v in order[1:]:
        anchors = [u for u in t.adj[v] if colored[u]]
        if len(anchors) != 1:
            raise ValueError("order does not grow a connected subtree")
        w = anchors[0]
        factor = q - 1 - sum(1 for u in t.adj[w] if colored[u])
        if factor <= 0:
            return 0
        total *= factor
        colored[v] = True
    return total


# ---------------------------------------------------------------------------
# Closed-form dispatch used by the CLI


def is_path_graph(t: Tree) -> bool:
    return all(len(a) <= 2 for a in t.adj)


def is_star_graph(t: Tree) -> bool:
    return t.n <= 2 or max(len(a) for a in t.adj) == t.n - 1


def has_closed_form(t: Tree, scheme: Scheme) -> bool:
    if scheme.kind in ("proper", "sr"):
        return True
    if is_path_graph(t):
        return True
    if is_star_graph(t):
        return not (scheme.kind == "kscf" and scheme.k >= 2)
    return False


def closed_count(t: Tree, q: int, scheme: Scheme) -> int:
    """Closed-form count for (tree, scheme) pairs that have one."""
    if not has_closed_form(t, scheme):
        raise ValueError(f"no closed form for scheme {scheme} on this tree")
    if scheme.kind == "proper":
        return proper_count(t.n, q)
    if scheme.kind == "sr":
        return sr_count_product(t, q)
    if is_path_graph(t):
        return path_count(scheme, t.n, q)
    return star_count(scheme, t.n, q)


def _check_nq(n: int, q: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if q < 1:
        raise ValueError("q must be >= 1")
