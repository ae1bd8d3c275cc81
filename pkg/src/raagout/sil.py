"""SIL-pair detection, component classification, and maximal SIL-pair systems.

A SIL-pair ("separating intersection of links") is a nonadjacent pair
(a, b) such that removing the common link leaves a component containing
neither vertex. For a nonadjacent pair, the components of the two open
star complements split three ways:

  * the dominating component of a is the one containing b (and vice versa),
  * shared components appear in both complements,
  * subordinate components are the rest; each subordinate component of a
    sits inside the dominating component of b.

A pair is a SIL-pair exactly when it has a shared component. A SIL-pair
is *separated* when its two vertices end up in different components once
the common link is removed; separated pairs are what seed a maximal
SIL-pair system.

A maximal SIL-pair system is a vertex set {w_1..w_n} (n >= 2) such that
  (1) every pair of pivots is a SIL-pair,
  (2) all pairwise common links equal the system core (the intersection of
      all pivot links),
  (3) no separated SIL-pair has a common link smaller than the core,
  (4) each pivot lies in its own component of the graph minus the core,
      shared by no other pivot,
  (5) vertices in pivot-free components form no *separated* SIL-pair with
      any pivot.
Removing the core then decomposes the graph into the core, one
"simultaneously shared" component C_i per pivot, and possibly some
pivot-free "additional" components D_j.

Condition (5) is stated in its separated form deliberately: that is what
the greedy construction below can guarantee, and there are small graphs
(eight vertices suffice) where a separated SIL-pair exists yet no vertex
set satisfies the unrestricted form, because a pivot-free component may
carry a connected-type SIL partner of a pivot. Every structural
consequence drawn from a system in this package only needs the separated
form; the one exception (the additional-component product rule) carries
its own guard.

Construction is greedy and deterministic: start from the
lexicographically-least separated SIL-pair of minimum common-link size,
then repeatedly adopt the least-index vertex of a pivot-free component
that forms a separated SIL-pair with w_1. The result is validated
against the five defining conditions; a violation raises
``InternalCheckError`` rather than returning silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError, InternalCheckError
from .graph import (
    SimplicialGraph,
    VertexRef,
    VertexSet,
    is_connected,
    link_mask,
    mask_components,
    star_mask,
)
from .order import TransvectionSpec, leaf_like


@dataclass(frozen=True)
class PairComponentClassification:
    """Dominating / subordinate / shared split for a nonadjacent pair."""

    a: int
    b: int
    dominating_a: VertexSet  # component of g - st(a) containing b
    dominating_b: VertexSet  # component of g - st(b) containing a
    subordinate_a: tuple[VertexSet, ...]
    subordinate_b: tuple[VertexSet, ...]
    shared: tuple[VertexSet, ...]


@dataclass(frozen=True)
class SilSystem:
    pivots: tuple[int, ...]
    core: VertexSet


@dataclass(frozen=True)
class SilSystemDecomposition:
    """Core / shared-component / additional-component cover of the vertex set."""

    system: SilSystem
    shared_components: tuple[VertexSet, ...]  # C_i, pivot order; w_i in C_i
    additional_components: tuple[VertexSet, ...]  # D_j, ascending least index

    @property
    def graph(self) -> SimplicialGraph:
        return self.system.core.graph

    @property
    def core(self) -> VertexSet:
        return self.system.core

    @property
    def n(self) -> int:
        return len(self.system.pivots)

    @property
    def m(self) -> int:
        return len(self.additional_components)

    def locate(self, v: int) -> tuple[str, int]:
        """Where vertex ``v`` lives: ("core", -1), ("C", i) or ("D", j)."""
        if self.core.mask >> v & 1:
            return ("core", -1)
        for i, c in enumerate(self.shared_components):
            if c.mask >> v & 1:
                return ("C", i)
        for j, d in enumerate(self.additional_components):
            if d.mask >> v & 1:
                return ("D", j)
        raise InputError(f"vertex {v} not covered by the decomposition")


@dataclass(frozen=True)
class KerPGenerator:
    """A witness generator of the projection kernel.

    Either a leaf transvection or the conjugation of one reachability
    class by its base vertex (where reachability ignores edges lying
    inside the vertex's closed star).
    """

    kind: str  # "leaf_transvection" | "vhat_conjugation"
    transvection: Optional[TransvectionSpec] = None
    vertex: Optional[int] = None
    component: Optional[VertexSet] = None


def _pair_core(g: SimplicialGraph, a: int, b: int) -> int:
    return link_mask(g, a) & link_mask(g, b)


def _reach(g: SimplicialGraph, seed: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``seed`` inside it."""
    comp = seed & allowed
    frontier = comp
    adj = g.adj
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= adj[low.bit_length() - 1]
            m ^= low
        frontier = grow & allowed & ~comp
        comp |= frontier
    return comp


def is_sil_pair(g: SimplicialGraph, a: VertexRef, b: VertexRef) -> bool:
    """Whether (a, b) is a SIL-pair.

    Decided with a single search: some component avoids both vertices
    exactly when the joint reachable set of {a, b} misses part of the
    complement of the common link.

    >>> g = SimplicialGraph(["a", "b", "c"])
    >>> is_sil_pair(g, "a", "b")
    True
    """
    i, j = g.index(a), g.index(b)
    if i == j:
        raise InputError("a SIL-pair consists of two distinct vertices")
    if g.adj[i] >> j & 1:
        return False
    rest = g.full_mask & ~_pair_core(g, i, j)
    reached = _reach(g, (1 << i) | (1 << j), rest)
    return bool(rest & ~reached)


def is_separated_sil_pair(g: SimplicialGraph, a: VertexRef, b: VertexRef) -> bool:
    """SIL-pair whose vertices are disconnected once the common link is removed."""
    i, j = g.index(a), g.index(b)
    if i == j:
        raise InputError("a SIL-pair consists of two distinct vertices")
    if g.adj[i] >> j & 1:
        return False
    rest = g.full_mask & ~_pair_core(g, i, j)
    comp_i = _reach(g, 1 << i, rest)
    if comp_i >> j & 1:
        return False
    comp_j = _reach(g, 1 << j, rest)
    return bool(rest & ~(comp_i | comp_j))


def classify_pair(g: SimplicialGraph, a: VertexRef, b: VertexRef) -> PairComponentClassification:
    """Full dominating/subordinate/shared split for a nonadjacent pair.

    The shared list is empty exactly when (a, b) is not a SIL-pair.
    """
    i, j = g.index(a), g.index(b)
    if i == j:
        raise InputError("classify_pair needs two distinct vertices")
    if g.adj[i] >> j & 1:
        raise InputError(f"{g.names[i]!r} and {g.names[j]!r} are adjacent")
    comps_a = mask_components(g, g.full_mask & ~star_mask(g, i))
    comps_b = mask_components(g, g.full_mask & ~star_mask(g, j))
    set_b = set(comps_b)
    shared, sub_a, sub_b = [], [], []
    dom_a = dom_b = None
    for c in comps_a:
        if c in set_b:
            shared.append(c)
        elif c >> j & 1:
            dom_a = c
        else:
            sub_a.append(c)
    shared_set = set(shared)
    for c in comps_b:
        if c in shared_set:
            continue
        if c >> i & 1:
            dom_b = c
        else:
            sub_b.append(c)
    if dom_a is None or dom_b is None:  # nonadjacent, so b survives in g - st(a)
        raise InternalCheckError("dominating component missing for a nonadjacent pair")
    vs = lambda m: VertexSet(g, m)
    return PairComponentClassification(
        a=i,
        b=j,
        dominating_a=vs(dom_a),
        dominating_b=vs(dom_b),
        subordinate_a=tuple(vs(m) for m in sub_a),
        subordinate_b=tuple(vs(m) for m in sub_b),
        shared=tuple(vs(m) for m in shared),
    )


def sil_pairs(g: SimplicialGraph) -> list[tuple[int, int]]:
    """All unordered SIL-pairs as (i, j) with i < j, lexicographic."""
    out = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.adj[i] >> j & 1 and is_sil_pair(g, i, j):
                out.append((i, j))
    return out


def separated_sil_pairs(g: SimplicialGraph) -> list[tuple[int, int]]:
    """The SIL-pairs that are separated by their own common link."""
    out = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.adj[i] >> j & 1 and is_separated_sil_pair(g, i, j):
                out.append((i, j))
    return out


def all_sil_pairs_connected(g: SimplicialGraph) -> bool:
    """True when SIL-pairs exist but none of them is separated.

    This is the regime where no maximal SIL-pair system exists; with no
    SIL-pair at all the answer is False (callers branch on emptiness
    first).
    """
    pairs = sil_pairs(g)
    return bool(pairs) and not separated_sil_pairs(g)


def maximal_sil_system(g: SimplicialGraph) -> Optional[SilSystemDecomposition]:
    """Build the canonical maximal SIL-pair system, or None when none exists.

    Absent exactly when there is no separated SIL-pair. The returned
    decomposition has passed the five defining conditions plus the
    disjoint-cover check; any violation raises ``InternalCheckError``.
    """
    seps = separated_sil_pairs(g)
    if not seps:
        return None
    core_size = lambda p: (_pair_core(g, p[0], p[1]).bit_count(), p)
    w1, w2 = min(seps, key=core_size)
    core = _pair_core(g, w1, w2)
    pivots = [w1, w2]
    pivot_mask = (1 << w1) | (1 << w2)
    while True:
        comps = mask_components(g, g.full_mask & ~core)
        free = 0
        for comp in comps:
            if not comp & pivot_mask:
                free |= comp
        candidate = None
        for x in range(g.n):
            if free >> x & 1 and is_separated_sil_pair(g, w1, x):
                candidate = x
                break
        if candidate is None:
            break
        pivots.append(candidate)
        pivot_mask |= 1 << candidate
    comps = mask_components(g, g.full_mask & ~core)
    shared = []
    for w in pivots:
        shared.append(next(c for c in comps if c >> w & 1))
    additional = [c for c in comps if not c & pivot_mask]
    decomp = SilSystemDecomposition(
        system=SilSystem(tuple(pivots), VertexSet(g, core)),
        shared_components=tuple(VertexSet(g, c) for c in shared),
        additional_components=tuple(VertexSet(g, c) for c in additional),
    )
    validate_system(g, decomp, _separated=seps)
    return decomp


def validate_system(
    g: SimplicialGraph, d: SilSystemDecomposition, _separated: Optional[list] = None
) -> None:
    """Re-check the five defining conditions and the disjoint cover.

    Raises ``InternalCheckError`` on any violation.
    """
    pivots = d.system.pivots
    core = d.core.mask
    if len(pivots) < 2:
        raise InternalCheckError("a SIL-pair system needs at least two pivots")
    for idx, wj in enumerate(pivots):
        for wk in pivots[idx + 1 :]:
            if not is_sil_pair(g, wj, wk):
                raise InternalCheckError(f"pivots {wj},{wk} are not a SIL-pair")
            if _pair_core(g, wj, wk) != core:
                raise InternalCheckError(f"pivots {wj},{wk} have a different common link")
    expected_core = g.full_mask
    for w in pivots:
        expected_core &= link_mask(g, w)
    if expected_core != core:
        raise InternalCheckError("core is not the intersection of the pivot links")
    if _separated is None:
        _separated = separated_sil_pairs(g)
    for a, b in _separated:
        if _pair_core(g, a, b).bit_count() < core.bit_count():
            raise InternalCheckError(f"separated SIL-pair ({a},{b}) beats the core size")
    comps = mask_components(g, g.full_mask & ~core)
    comp_of = {}
    for c in comps:
        for v in VertexSet(g, c):
            comp_of[v] = c
    seen = set()
    for i, w in enumerate(pivots):
        c = comp_of[w]
        if c != d.shared_components[i].mask:
            raise InternalCheckError("pivot component disagrees with the decomposition")
        if c in seen:
            raise InternalCheckError("two pivots share a component")
        seen.add(c)
    pivot_mask = 0
    for w in pivots:
        pivot_mask |= 1 << w
    extra = [c for c in comps if not c & pivot_mask]
    if sorted(extra) != sorted(x.mask for x in d.additional_components):
        raise InternalCheckError("additional components disagree with the decomposition")
    for c in extra:
        for v in VertexSet(g, c):
            for w in pivots:
                if is_separated_sil_pair(g, v, w):
                    raise InternalCheckError(
                        f"vertex {g.names[v]} in an additional component forms a "
                        "separated SIL-pair with a pivot"
                    )
    cover = core
    for part in list(d.shared_components) + list(d.additional_components):
        if cover & part.mask:
            raise InternalCheckError("decomposition parts overlap")
        cover |= part.mask
    if cover != g.full_mask:
        raise InternalCheckError("decomposition does not cover the vertex set")


def vhat_components(g: SimplicialGraph, v: VertexRef) -> list[tuple[VertexSet, bool]]:
    """Reachability classes ignoring edges with both endpoints in st(v).

    Defined for connected graphs. Each class is flagged trivial when it
    lies entirely inside the closed star of ``v``; the base vertex itself
    is always in a trivial class since all of its edges sit inside its
    star.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> [(c.names, t) for c, t in vhat_components(g, "a")]
    [(('a',), True), (('b', 'c'), False)]
    """
    if not is_connected(g):
        raise InputError("reachability classes are defined for connected graphs only")
    i = g.index(v)
    st = star_mask(g, i)
    filtered = tuple(
        g.adj[x] & ~st if st >> x & 1 else g.adj[x] for x in range(g.n)
    )

    class _F:  # adjacency facade for mask_components
        adj = filtered
        full_mask = g.full_mask

    comps = mask_components(_F, g.full_mask)  # type: ignore[arg-type]
    return [(VertexSet(g, c), not c & ~st) for c in comps]


def ker_p_generators(g: SimplicialGraph) -> list[KerPGenerator]:
    """Witness generators of the projection kernel for a connected graph.

    Contributions are all leaf transvections, plus the class conjugations
    of every vertex carrying at least two nontrivial reachability classes
    (with a single nontrivial class the conjugation is inner and
    contributes nothing in the outer group).
    """
    if not is_connected(g):
        raise InputError("the projection kernel is computed for connected graphs only")
    out: list[KerPGenerator] = []
    for v in range(g.n):
        w = leaf_like(g, v)
        if w is not None:
            out.append(
                KerPGenerator(
                    kind="leaf_transvection",
                    transvection=TransvectionSpec(moved=v, by=w, side="right"),
                )
            )
    for v in range(g.n):
        nontrivial = [c for c, trivial in vhat_components(g, v) if not trivial]
        if len(nontrivial) >= 2:
            for c in nontrivial:
                out.append(KerPGenerator(kind="vhat_conjugation", vertex=v, component=c))
    return out
