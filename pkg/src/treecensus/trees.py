"""Trees on up to 16 labeled vertices: construction, canonical codes, enumeration.

Vertices are dense 0-indexed integers.  A Tree is immutable once built and
always satisfies the tree axioms (connected, acyclic, exactly n-1 edges,
symmetric adjacency).  Isomorphism is decided through an AHU canonical code:
the subtree encoding rooted at the tree's center (both centers tried when
the center is an edge), children sorted, lexicographic minimum taken.  The
code is a balanced-parenthesis byte string of length 2n; equal codes iff
isomorphic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_VERTICES = 16
MAX_CENSUS_VERTICES = 12

CanonicalCode = bytes


class TreeError(ValueError):
    """Input does not describe a valid tree on n vertices."""


class Tree:
    """Undirected tree: vertex count, sorted edge list, sorted adjacency lists."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not 1 <= n <= MAX_VERTICES:
            raise TreeError(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise TreeError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            norm.append(e)
        if len(norm) != n - 1:
            raise TreeError(f"wrong edge count: {len(norm)} edges for {n} vertices (need {n - 1})")
        # Union-find: with exactly n-1 distinct edges a cycle and a
        # disconnection can only occur together; report the cycle.
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in norm:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise TreeError(f"edge ({u},{v}) closes a cycle")
            parent[ru] = rv
        if len({find(v) for v in range(n)}) != 1:
            raise TreeError("graph is disconnected")

        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(sorted(norm))
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __reduce__(self):
        return (Tree, (self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DegreeProfile:
    """Degree multiset plus the two counts the structural checks need."""

    degrees: tuple[int, ...]
    leaf_count: int
    even_degree_count: int


def path(n: int) -> Tree:
    """Path v0-v1-...-v(n-1)."""
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """Star with center 0 adjacent to all other vertices."""
    return Tree(n, [(0, i) for i in range(1, n)])


def double_star(s: int, t: int) -> Tree:
    """Two adjacent centers 0 and 1 with s leaves on 0 and t leaves on 1."""
    if s < 0 or t < 0:
        raise TreeError("leaf counts must be nonnegative")
    n = s + t + 2
    if n > MAX_VERTICES:
        raise TreeError(f"double star on {n} vertices exceeds cap {MAX_VERTICES}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s)]
    edges += [(1, 2 + s + i) for i in range(t)]
    return Tree(n, edges)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validated tree from an explicit 0-indexed edge list."""
    return Tree(n, edges)


def from_pruefer(seq: Sequence[int]) -> Tree:
    """The unique labeled tree on len(seq)+2 vertices with this Pruefer sequence."""
    n = len(seq) + 2
    if n > MAX_VERTICES:
        raise TreeError(f"sequence length {len(seq)} implies {n} vertices, cap is {MAX_VERTICES}")
    for x in seq:
        if not 0 <= x < n:
            raise TreeError(f"sequence entry {x} outside 0..{n - 1}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Tree(n, edges)


def degree_profile(t: Tree) -> DegreeProfile:
    degs = tuple(sorted(len(a) for a in t.adj))
    return DegreeProfile(
        degrees=degs,
        leaf_count=sum(1 for d in degs if d == 1),
        even_degree_count=sum(1 for d in degs if d % 2 == 0),
    )


# ---------------------------------------------------------------------------
# Canonical codes


def centers(t: Tree) -> tuple[int, ...]:
    """The 1 or 2 middle vertices obtained by repeatedly stripping leaves."""
    n = t.n
    if n <= 2:
        return tuple(range(n))
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            remaining -= 1
            for u in t.adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(t: Tree, root: int) -> bytes:
    def code(v: int, parent: int) -> bytes:
        subs = sorted(code(u, v) for u in t.adj[v] if u != parent)
        return b"(" + b"".join(subs) + b")"

    return code(root, -1)


def canonical_code(t: Tree) -> CanonicalCode:
    """Label-invariant identifier; equal codes iff the trees are isomorphic."""
    return min(_rooted_code(t, c) for c in centers(t))


def code_to_packed(code: bytes) -> int:
    """Pack a parenthesis code into an int, MSB first, '(' = 0 and ')' = 1."""
    val = 0
    for ch in code:
        val = (val << 1) | (ch == 0x29)
    return val


def packed_to_code(packed: int, n: int) -> CanonicalCode:
    """Inverse of code_to_packed for a code of a tree on n vertices (2n bits)."""
    bits = 2 * n
    return bytes(0x29 if (packed >> (bits - 1 - i)) & 1 else 0x28 for i in range(bits))


# ---------------------------------------------------------------------------
# Free-tree enumeration

#: unlabeled trees on 1..12 vertices (OEIS A000055), used as a sanity guard
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


@lru_cache(maxsize=None)
def _free_trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, []),)
    # Every tree on n vertices is a tree on n-1 vertices plus one leaf, so
    # growing a leaf at every vertex of every smaller class and deduplicating
    # by canonical code covers each isomorphism class exactly once.
    out: dict[bytes, Tree] = {}
    for base in _free_trees(n - 1):
        for v in range(base.n):
            grown = Tree(n, list(base.edges) + [(v, n - 1)])
            out.setdefault(canonical_code(grown), grown)
    return tuple(t for _, t in sorted(out.items()))


def enumerate_free_trees(n: int) -> list[Tree]:
    """One representative per isomorphism class, sorted by canonical code."""
    if not 1 <= n <= MAX_CENSUS_VERTICES:
        raise TreeError(f"free-tree enumeration supports 1..{MAX_CENSUS_VERTICES}, got {n}")
    trees = _free_trees(n)
    assert len(trees) == FREE_TREE_COUNTS[n - 1]
    return list(trees)


def pruefer_code_census(n: int) -> list[CanonicalCode]:
    """Canonical codes of all n^(n-2) Pruefer-generated labeled trees, deduplicated.

    Independent oracle for enumerate_free_trees: exhaustive over labeled
    trees, so it cannot miss an isomorphism class.  Cost is O(n^(n-2)); the
    compiled kernel keeps n = 10 (10^8 sequences) to a couple of minutes.
    """
    if not 1 <= n <= MAX_CENSUS_VERTICES:
        raise TreeError(f"Pruefer census supports 1..{MAX_CENSUS_VERTICES}, got {n}")
    if n == 1:
        return [canonical_code(Tree(1, []))]
    from . import _backend

    packed = _backend.pruefer_census_packed(n)
    return [packed_to_code(p, n) for p in packed]


# ---------------------------------------------------------------------------
# Tree-spec grammar: path:N | star:N | dstar:S,T | edges:N;a-b,c-d,... | pruefer:a,b,c


def parse_tree_spec(spec: str) -> Tree:
    """Parse the textual tree grammar used by the CLI and input files."""
    head, sep, rest = spec.partition(":")
    if not sep:
        raise TreeError(f"malformed tree spec {spec!r}: missing ':'")
    try:
        if head == "path":
            return path(int(rest))
        if head == "star":
            return star(int(rest))
        if head == "dstar":
            s, t = rest.split(",")
            return double_star(int(s), int(t))
        if head == "edges":
            npart, sep2, epart = rest.partition(";")
            if not sep2:
                raise TreeError(f"malformed edges spec {spec!r}: missing ';'")
            edges = []
            if epart:
                for item in epart.split(","):
                    a, b = item.split("-")
                    edges.append((int(a), int(b)))
            return from_edge_list(int(npart), edges)
        if head == "pruefer":
            seq = [int(x) for x in rest.split(",")] if rest else []
            return from_pruefer(seq)
    except TreeError:
        raise
    except ValueError as exc:
        raise TreeError(f"malformed tree spec {spec!r}: {exc}") from exc
    raise TreeError(f"unknown tree spec kind {head!r}")
