"""The link-star partial order on vertices and its derived inventories.

``v <= w`` means the link of ``v`` lies inside the closed star of ``w``;
it is only defined for distinct vertices. Mutual comparability is an
equivalence relation, and a vertex is maximal when nothing sits strictly
above it. These are exactly the conditions governing which transvections
exist, so the order inventory doubles as the transvection inventory.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import InputError
from .graph import SimplicialGraph, VertexRef, VertexSet, link_mask, star_mask


class OrderPair(NamedTuple):
    lower: int
    upper: int


class EquivClass(NamedTuple):
    members: VertexSet
    representative: int


class TransvectionSpec(NamedTuple):
    """The automorphism moving ``moved`` across ``by`` (right: v -> vw, left: v -> wv)."""

    moved: int
    by: int
    side: str  # "left" | "right"


def leq(g: SimplicialGraph, v: VertexRef, w: VertexRef) -> bool:
    """Whether ``v <= w`` in the link-star order; ``v == w`` is rejected.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> leq(g, "a", "b")
    True
    >>> leq(g, "b", "a")
    False
    """
    i, j = g.index(v), g.index(w)
    if i == j:
        raise InputError("the link-star order compares distinct vertices only")
    return not link_mask(g, i) & ~star_mask(g, j)


def order_pairs(g: SimplicialGraph) -> list[OrderPair]:
    """All ordered related pairs (v, w) with v <= w, in index order."""
    out = []
    for i in range(g.n):
        for j in range(g.n):
            if i != j and leq(g, i, j):
                out.append(OrderPair(i, j))
    return out


def related_unordered_pairs(g: SimplicialGraph) -> list[tuple[int, int]]:
    """Unordered pairs {v, w} with v <= w or w <= v, each listed once."""
    seen = set()
    for p in order_pairs(g):
        seen.add((min(p), max(p)))
    return sorted(seen)


def equivalence_classes(g: SimplicialGraph) -> list[EquivClass]:
    """Partition of the vertices by mutual link-star comparability.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> [c.members.names for c in equivalence_classes(g)]
    [('a', 'c'), ('b',)]
    """
    assigned = [None] * g.n
    classes = []
    for i in range(g.n):
        if assigned[i] is not None:
            continue
        mask = 1 << i
        for j in range(i + 1, g.n):
            if assigned[j] is None and leq(g, i, j) and leq(g, j, i):
                mask |= 1 << j
                assigned[j] = i
        assigned[i] = i
        classes.append(EquivClass(VertexSet(g, mask), i))
    return classes


def maximal_vertices(g: SimplicialGraph) -> VertexSet:
    """Vertices v such that v <= w forces w <= v as well."""
    mask = 0
    for i in range(g.n):
        if all(not leq(g, i, j) or leq(g, j, i) for j in range(g.n) if j != i):
            mask |= 1 << i
    return VertexSet(g, mask)


def leaf_like(g: SimplicialGraph, v: VertexRef) -> Optional[int]:
    """The unique maximal vertex above a leaf-like ``v``, else ``None``.

    ``v`` is leaf-like when its link carries exactly one maximal vertex
    ``w`` and ``v <= w``; the returned witness is what materializes the
    corresponding leaf transvection.
    """
    i = g.index(v)
    candidates = [j for j in maximal_vertices(g) if link_mask(g, i) >> j & 1]
    if len(candidates) != 1:
        return None
    w = candidates[0]
    return w if leq(g, i, w) else None


def has_no_transvection(g: SimplicialGraph) -> bool:
    """True when no two distinct vertices are link-star related."""
    return not order_pairs(g)
