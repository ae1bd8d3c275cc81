"""Partial conjugations: enumeration, the 13-type classification, commuting.

A partial conjugation is a pair (v, C) with C one connected component of
the graph minus the closed star of v. When that complement is connected,
the single conjugation it carries is inner in the outer automorphism
group; such tokens are enumerated but flagged ``OUT_TRIVIAL`` and
excluded from presentations and decisions.

Relative to a maximal SIL-pair system decomposition, every nontrivial
partial conjugation falls into exactly one of thirteen kinds, read as a
decision list on where the base vertex sits (shared component with or
without the core in its link, core, or additional component) and what
the support is. Kind 1 is *dominant* (whole other shared component) and
kind 3 is *subordinate* (piece of the own component containing a
core-dominated vertex); those two drive every structural theorem
downstream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InputError, InternalCheckError
from .graph import (
    SimplicialGraph,
    VertexSet,
    link_mask,
    mask_components,
    star_mask,
)
from .sil import SilSystemDecomposition, classify_pair, is_sil_pair


@dataclass(frozen=True)
class PartialConjugation:
    vertex: int
    support: VertexSet

    def key(self) -> tuple[int, int]:
        low = self.support.mask & -self.support.mask
        return (self.vertex, low.bit_length())

    def __repr__(self) -> str:
        g = self.support.graph
        return f"P[{g.names[self.vertex]}]^{self.support!r}"


class PCType(enum.IntEnum):
    """Classification tags; values follow the thirteen-case split."""

    OUT_TRIVIAL = 0
    DOMINANT = 1                  # v in C_i, core in lk(v), support = other C
    SHARED_TO_ADDITIONAL = 2      # v in C_i, core in lk(v), support = some D_j
    SUBORDINATE = 3               # support inside own C_i, meets a core-dominated vertex
    LOCAL_UNDOMINATED = 4         # support inside own C_i, no core-dominated vertex
    LOCAL_OF_UNDOMINATED = 5      # v in C_i, core not in lk(v), support inside C_i
    ADDITIONAL_OF_UNDOMINATED = 6  # v in C_i, core not in lk(v), support = some D_j
    CORE_SIDE_REMAINDER = 7       # v in C_i, core not in lk(v), support meets the core
    CORE_TO_CORE = 8              # v in core, support meets the core
    CORE_TO_SHARED_PART = 9       # v in core, support inside some C_i
    CORE_TO_ADDITIONAL_PART = 10  # v in core, support inside some D_j
    ADDITIONAL_LOCAL = 11         # v in D_j, support inside D_j
    ADDITIONAL_TO_ADDITIONAL = 12  # v in D_j, support = other D
    PIVOT_SIDE_REMAINDER = 13     # v in D_j, support contains every pivot


def enumerate_pcs(g: SimplicialGraph) -> list[PartialConjugation]:
    """All (vertex, component) partial conjugations, in canonical order."""
    out = []
    for v in range(g.n):
        for m in mask_components(g, g.full_mask & ~star_mask(g, v)):
            out.append(PartialConjugation(v, VertexSet(g, m)))
    return out


def is_out_trivial(g: SimplicialGraph, p: PartialConjugation) -> bool:
    """True when the star complement of the base vertex is connected."""
    comps = mask_components(g, g.full_mask & ~star_mask(g, p.vertex))
    if p.support.mask not in comps:
        raise InputError("support is not a star-complement component of its vertex")
    return len(comps) == 1


def out_nontrivial_pcs(g: SimplicialGraph) -> list[PartialConjugation]:
    """The partial conjugations that survive in the outer group."""
    out = []
    for v in range(g.n):
        comps = mask_components(g, g.full_mask & ~star_mask(g, v))
        if len(comps) >= 2:
            out.extend(PartialConjugation(v, VertexSet(g, m)) for m in comps)
    return out


def classify_pc(
    g: SimplicialGraph, d: SilSystemDecomposition, p: PartialConjugation
) -> PCType:
    """Exactly one of the thirteen tags, or OUT_TRIVIAL.

    Raises ``InputError`` when ``p`` is inconsistent with ``g``/``d`` and
    ``InternalCheckError`` when a nontrivial conjugation escapes every
    case (a defect, not an input problem).
    """
    if d.graph is not g:
        raise InputError("decomposition belongs to a different graph")
    v = p.vertex
    comps = mask_components(g, g.full_mask & ~star_mask(g, v))
    if p.support.mask not in comps:
        raise InputError("support is not a star-complement component of its vertex")
    if len(comps) == 1:
        return PCType.OUT_TRIVIAL
    c = p.support.mask
    core = d.core.mask
    place, idx = d.locate(v)
    shared = [x.mask for x in d.shared_components]
    additional = [x.mask for x in d.additional_components]
    if place == "C":
        own = shared[idx]
        if not core & ~link_mask(g, v):  # core inside lk(v)
            if c in shared:
                return PCType.DOMINANT
            if c in additional:
                return PCType.SHARED_TO_ADDITIONAL
            if not c & ~own:
                dominated = any(not core & ~link_mask(g, w) for w in VertexSet(g, c))
                return PCType.SUBORDINATE if dominated else PCType.LOCAL_UNDOMINATED
        else:
            if not c & ~own:
                return PCType.LOCAL_OF_UNDOMINATED
            if c in additional:
                return PCType.ADDITIONAL_OF_UNDOMINATED
            if c & core:
                return PCType.CORE_SIDE_REMAINDER
    elif place == "core":
        if c & core:
            return PCType.CORE_TO_CORE
        for s in shared:
            if not c & ~s:
                return PCType.CORE_TO_SHARED_PART
        for a in additional:
            if not c & ~a:
                return PCType.CORE_TO_ADDITIONAL_PART
    else:  # additional component
        own = additional[idx]
        if not c & ~own:
            return PCType.ADDITIONAL_LOCAL
        if c in additional:
            return PCType.ADDITIONAL_TO_ADDITIONAL
        pivot_mask = 0
        for w in d.system.pivots:
            pivot_mask |= 1 << w
        if pivot_mask & ~c == 0:
            return PCType.PIVOT_SIDE_REMAINDER
    raise InternalCheckError(
        f"partial conjugation {p!r} fits no classification case"
    )


def dominant_pcs(g: SimplicialGraph, d: SilSystemDecomposition) -> list[PartialConjugation]:
    return [p for p in out_nontrivial_pcs(g) if classify_pc(g, d, p) is PCType.DOMINANT]


def subordinate_pcs(g: SimplicialGraph, d: SilSystemDecomposition) -> list[PartialConjugation]:
    return [p for p in out_nontrivial_pcs(g) if classify_pc(g, d, p) is PCType.SUBORDINATE]


def subordinate_definers(g: SimplicialGraph, d: SilSystemDecomposition) -> set[int]:
    """Vertices defining at least one subordinate partial conjugation."""
    return {p.vertex for p in subordinate_pcs(g, d)}


def _support_role(cls, vertex_is_a: bool, mask: int) -> tuple[str, int]:
    """Role of a support for the ordered pair (a, b): dominating/shared/subordinate."""
    dom = cls.dominating_a.mask if vertex_is_a else cls.dominating_b.mask
    if mask == dom:
        return ("dominating", -1)
    for k, s in enumerate(cls.shared):
        if mask == s.mask:
            return ("shared", k)
    return ("subordinate", -1)


def commutes(g: SimplicialGraph, p: PartialConjugation, q: PartialConjugation) -> bool:
    """Whether two nontrivial partial conjugations commute in the outer group.

    Same base vertex or adjacent base vertices always commute. For
    nonadjacent vertices the pair fails to commute exactly when it is a
    SIL-pair and the supports are (dominating, dominating), (dominating,
    shared) in either order, or one and the same shared component.
    """
    if is_out_trivial(g, p) or is_out_trivial(g, q):
        raise InputError("commuting is computed for outer-nontrivial conjugations only")
    a, b = p.vertex, q.vertex
    if a == b or g.adj[a] >> b & 1:
        return True
    if not is_sil_pair(g, a, b):
        return True
    cls = classify_pair(g, a, b)
    role_p = _support_role(cls, True, p.support.mask)
    role_q = _support_role(cls, False, q.support.mask)
    if role_p[0] == "dominating" and role_q[0] == "dominating":
        return False
    if {role_p[0], role_q[0]} == {"dominating", "shared"}:
        return False
    if role_p[0] == "shared" and role_q[0] == "shared" and role_p[1] == role_q[1]:
        return False
    return True
