"""Coloring schemes as decidable validity predicates.

A coloring assigns each vertex a color in {1..q} and is represented as a
plain sequence of ints.  Every scheme below is a condition checked at each
vertex v, stated on the color multiset of the closed neighborhood
N[v] = {v} + neighbors(v), except:

* ``star``  additionally constrains every 4-vertex path to see >= 3 colors,
* ``xhom``  looks at the open neighborhood (v needs a same-colored neighbor;
  equivalently no color class has an isolated vertex, i.e. the coloring is
  an existence homomorphism to the fully looped graph on q vertices).

Scheme names (CLI and serialization): proper, cf, odd, sr, nm, kscf:K,
star, xhom.  kscf:1 coincides with cf; kscf:2 is the 2-strong variant.

Degenerate single-vertex trees are evaluated literally on N[v] = {v}:
proper/cf/odd/sr/star accept every coloring, while nm, kscf:K for K >= 2,
and xhom accept none.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .trees import Tree

Coloring = Sequence[int]
ColorMultiset = Counter

KINDS = ("proper", "cf", "odd", "sr", "nm", "kscf", "star", "xhom")


@dataclass(frozen=True)
class Scheme:
    """Tag naming a validity rule; kscf carries its strength parameter k."""

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown scheme kind {self.kind!r}")
        if self.kind == "kscf":
            if self.k is None or self.k < 1:
                raise ValueError("kscf requires k >= 1")
        elif self.k is not None:
            raise ValueError(f"scheme {self.kind!r} takes no parameter")

    @property
    def name(self) -> str:
        return f"kscf:{self.k}" if self.kind == "kscf" else self.kind

    @classmethod
    def parse(cls, name: str) -> "Scheme":
        head, sep, rest = name.partition(":")
        if head == "kscf":
            if not sep:
                raise ValueError("kscf needs a parameter, e.g. kscf:2")
            try:
                return cls("kscf", int(rest))
            except ValueError as exc:
                raise ValueError(f"bad kscf parameter {rest!r}") from exc
        if sep:
            raise ValueError(f"scheme {head!r} takes no parameter")
        return cls(head)

    def __str__(self) -> str:
        return self.name


PROPER = Scheme("proper")
CF = Scheme("cf")
ODD = Scheme("odd")
SR = Scheme("sr")
NM = Scheme("nm")
STAR = Scheme("star")
XHOM = Scheme("xhom")


def kscf(k: int) -> Scheme:
    return Scheme("kscf", k)


ALL_BASIC = (PROPER, CF, ODD, SR, NM, kscf(2), STAR, XHOM)


def closed_neighborhood_colors(t: Tree, colors: Coloring, v: int) -> ColorMultiset:
    """Multiset of colors on N[v] = {v} + neighbors(v)."""
    c = Counter()
    c[colors[v]] += 1
    for u in t.adj[v]:
        c[colors[u]] += 1
    return c


def four_paths(t: Tree) -> list[tuple[int, int, int, int]]:
    """All 4-vertex paths, each listed once per middle-edge orientation.

    Iterating each edge (u,v) as the middle edge with outside neighbors
    u' of u and v' of v covers every 4-path exactly once; in a tree the
    endpoints are automatically distinct.
    """
    quads = []
    for u, v in t.edges:
        for a in t.adj[u]:
            if a == v:
                continue
            for b in t.adj[v]:
                if b == u:
                    continue
                quads.append((a, u, v, b))
    return quads


def is_valid(t: Tree, colors: Coloring, scheme: Scheme) -> bool:
    """True iff the scheme's condition holds at every vertex (and, for the
    star scheme, on every 4-vertex path).  Total: never raises on in-range
    colorings."""
    kind = scheme.kind
    if kind == "proper":
        return all(colors[u] != colors[v] for u, v in t.edges)
    if kind == "xhom":
        return all(any(colors[u] == colors[v] for u in t.adj[v]) for v in range(t.n))
    if kind == "nm":
        return all(any(colors[u] != colors[v] for u in t.adj[v]) for v in range(t.n))
    if kind == "star":
        if any(colors[u] == colors[v] for u, v in t.edges):
            return False
        return all(len({colors[a], colors[b], colors[c], colors[d]}) >= 3
                   for a, b, c, d in four_paths(t))
    if kind == "sr":
        return all(
            max(closed_neighborhood_colors(t, colors, v).values()) == 1
            for v in range(t.n)
        )
    if kind == "cf":
        need = 1
    elif kind == "odd":
        return all(
            any(m % 2 == 1 for m in closed_neighborhood_colors(t, colors, v).values())
            for v in range(t.n)
        )
    elif kind == "kscf":
        need = scheme.k
    else:  # pragma: no cover - KINDS is exhaustive
        raise AssertionError(kind)
    return all(
        sum(1 for m in closed_neighborhood_colors(t, colors, v).values() if m == 1) >= need
        for v in range(t.n)
    )
