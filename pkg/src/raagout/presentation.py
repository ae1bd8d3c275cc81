"""Finite presentation of the pure symmetric outer group and its decompositions.

Generators are the outer-nontrivial partial conjugations; the defining
relations come in five families:

  1. [P_v^C, P_w^D] = 1 when v and w are adjacent,
  2. [P_v^C, P_w^D] = 1 when C and D are disjoint, w not in C, v not in D,
  3. [P_v^C, P_w^D] = 1 when {v} u C lies in D or {w} u D lies in C,
  4. [P_v^C P_v^D, P_w^D] = 1 when w lies in C and v not in D,
  5. the product of all conjugations at one vertex is trivial.

On top of the presentation this module materializes the two structural
decompositions (a two-factor direct product when no subordinate
conjugations exist; a core factor times an iterated semidirect tower
otherwise), conjugation rewriting, and the stable-letter data for the
HNN reading of the tower.

Conjugation rewriting is exact for pairs of partial conjugations: every
non-commuting pair resolves through family-(4) instances and the
per-vertex product relation, so a conjugate is always expressible as a
word in the standard generators. Only the transvection rules have a
finite case table; outside it they raise ``UnsupportedCaseError`` rather
than guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, PreconditionError, UnsupportedCaseError
from .graph import SimplicialGraph, VertexSet, link_mask, mask_components, star_mask
from .order import TransvectionSpec
from .pconj import PartialConjugation, PCType, classify_pc, commutes, out_nontrivial_pcs
from .sil import SilSystemDecomposition, classify_pair

# A group word is a tuple of (generator id, +1|-1) letters, freely reduced.
GroupWord = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PCGenerator:
    pc: PartialConjugation
    gid: int
    name: str


@dataclass(frozen=True)
class PsoPresentation:
    generators: tuple[PCGenerator, ...]
    relations: tuple[tuple[int, GroupWord], ...]  # (family, word)


@dataclass(frozen=True)
class DecompositionReport:
    kind: str  # "two_factor" | "semidirect_tower"
    factors: dict
    excluded: tuple[PartialConjugation, ...]
    hypotheses_met: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class HnnData:
    stable_letter: PCGenerator
    base_generators: tuple[PCGenerator, ...]
    associated_generators: tuple[PCGenerator, ...]
    t_relations: tuple[tuple[GroupWord, GroupWord], ...]


def free_reduce(word) -> GroupWord:
    out: list[tuple[int, int]] = []
    for gid, exp in word:
        if out and out[-1][0] == gid and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((gid, exp))
    return tuple(out)


def invert_word(word) -> GroupWord:
    return tuple((gid, -exp) for gid, exp in reversed(word))


def pc_generators(g: SimplicialGraph) -> tuple[PCGenerator, ...]:
    """The canonical generator table.

    Ids follow (vertex index, support ordinal); the name ``P<v><k>``
    embeds the vertex name and the 1-based ordinal of the support among
    the star-complement components of the vertex, so it is stable across
    runs.
    """
    gens = []
    for v in range(g.n):
        comps = mask_components(g, g.full_mask & ~star_mask(g, v))
        if len(comps) < 2:
            continue
        for k, m in enumerate(comps, start=1):
            pc = PartialConjugation(v, VertexSet(g, m))
            gens.append(PCGenerator(pc, len(gens), f"P{g.names[v]}{k}"))
    return tuple(gens)


def _generator_index(gens) -> dict[tuple[int, int], PCGenerator]:
    return {(x.pc.vertex, x.pc.support.mask): x for x in gens}


def pso_presentation(g: SimplicialGraph) -> PsoPresentation:
    """Generators and relations of the pure symmetric outer group."""
    gens = pc_generators(g)
    by_vertex: dict[int, list[PCGenerator]] = {}
    for x in gens:
        by_vertex.setdefault(x.pc.vertex, []).append(x)
    relations: list[tuple[int, GroupWord]] = []

    def commutator(x: PCGenerator, y: PCGenerator) -> GroupWord:
        return ((x.gid, 1), (y.gid, 1), (x.gid, -1), (y.gid, -1))

    for i, x in enumerate(gens):
        for y in gens[i + 1 :]:
            v, w = x.pc.vertex, y.pc.vertex
            c, d = x.pc.support.mask, y.pc.support.mask
            if v != w and g.adj[v] >> w & 1:
                relations.append((1, commutator(x, y)))
            elif not c & d and not c >> w & 1 and not d >> v & 1:
                relations.append((2, commutator(x, y)))
            elif (not (c | 1 << v) & ~d) or (not (d | 1 << w) & ~c):
                relations.append((3, commutator(x, y)))
    idx = _generator_index(gens)
    for x in gens:
        for y in gens:
            v, w = x.pc.vertex, y.pc.vertex
            if v == w or g.adj[v] >> w & 1:
                continue
            c, d = x.pc.support.mask, y.pc.support.mask
            # instance requires the companion token P_v^D to exist as well
            if c >> w & 1 and not d >> v & 1 and (v, d) in idx:
                vd = idx[(v, d)]
                word = (
                    (x.gid, 1),
                    (vd.gid, 1),
                    (y.gid, 1),
                    (vd.gid, -1),
                    (x.gid, -1),
                    (y.gid, -1),
                )
                relations.append((4, word))
    for v in sorted(by_vertex):
        word = tuple((x.gid, 1) for x in by_vertex[v])
        relations.append((5, word))
    return PsoPresentation(gens, tuple(relations))


# ---------------------------------------------------------------------------
# conjugation rewriting


class _Rewriter:
    """Rewrites g * target * g^-1 as a word in the standard generators."""

    def __init__(self, g: SimplicialGraph):
        self.g = g
        self.gens = pc_generators(g)
        self.index = _generator_index(self.gens)
        self._pair_cache: dict[tuple[int, int], object] = {}

    def gen_for(self, pc: PartialConjugation) -> PCGenerator:
        try:
            return self.index[(pc.vertex, pc.support.mask)]
        except KeyError:
            raise InputError(f"{pc!r} is not an outer-nontrivial conjugation") from None

    def _classes(self, a: int, b: int):
        key = (a, b)
        if key not in self._pair_cache:
            self._pair_cache[key] = classify_pair(self.g, a, b)
        return self._pair_cache[key]

    def _gid(self, vertex: int, mask: int) -> int:
        return self.index[(vertex, mask)].gid

    def conjugate_gen(self, cg: PCGenerator, exp: int, tg: PCGenerator) -> GroupWord:
        """Word equal to cg^exp * tg * cg^-exp."""
        a, b = cg.pc.vertex, tg.pc.vertex
        if a == b or self.g.adj[a] >> b & 1 or not is_noncommuting_pair(
            self.g, cg.pc, tg.pc
        ):
            return ((tg.gid, 1),)
        cls = self._classes(a, b)
        e_mask, f_mask = cg.pc.support.mask, tg.pc.support.mask
        dom_a, dom_b = cls.dominating_a.mask, cls.dominating_b.mask
        shared = [s.mask for s in cls.shared]
        if e_mask == dom_a and f_mask in shared:
            # conjugator support holds the target vertex; target support shared
            return self._sandwich(self._gid(a, f_mask), -exp, tg.gid)
        if e_mask in shared and f_mask == e_mask:
            # one and the same shared component on both sides
            return self._sandwich(self._gid(a, dom_a), -exp, tg.gid)
        if e_mask in shared and f_mask == dom_b:
            # shared conjugator against the component holding the conjugator vertex
            bD = self._gid(b, e_mask)
            aA0 = self._gid(a, dom_a)
            return free_reduce(
                ((tg.gid, 1), (bD, 1), (aA0, -exp), (bD, -1), (aA0, exp))
            )
        if e_mask == dom_a and f_mask == dom_b:
            # expand the conjugator through the per-vertex product relation:
            # P_a^{dom} equals the inverse of the product of a's other tokens
            others = [
                m
                for m in mask_components(
                    self.g, self.g.full_mask & ~star_mask(self.g, a)
                )
                if m != dom_a
            ]
            word: GroupWord = ((tg.gid, 1),)
            if exp == 1:
                for m in others:
                    word = self.conjugate_word(self._gid(a, m), -1, word)
            else:
                for m in reversed(others):
                    word = self.conjugate_word(self._gid(a, m), 1, word)
            return word
        raise UnsupportedCaseError(
            f"no rewriting rule for conjugator {cg.name} over target {tg.name}"
        )

    def _sandwich(self, outer_gid: int, outer_exp: int, inner_gid: int) -> GroupWord:
        return free_reduce(
            ((outer_gid, outer_exp), (inner_gid, 1), (outer_gid, -outer_exp))
        )

    def conjugate_word(self, cg_gid: int, exp: int, word: GroupWord) -> GroupWord:
        cg = self.gens[cg_gid]
        out: list[tuple[int, int]] = []
        for gid, e in word:
            piece = self.conjugate_gen(cg, exp, self.gens[gid])
            out.extend(piece if e == 1 else invert_word(piece))
        return free_reduce(out)


def is_noncommuting_pair(
    g: SimplicialGraph, p: PartialConjugation, q: PartialConjugation
) -> bool:
    return not commutes(g, p, q)


def conjugate_pc(
    conjugator: PartialConjugation,
    target: PartialConjugation,
    d: SilSystemDecomposition,
) -> GroupWord:
    """Word in the standard generators equal to conjugator*target*conjugator^-1.

    Commuting pairs give back the single-letter target. The returned word
    references the canonical generator table of ``d``'s graph.
    """
    g = d.graph
    rw = _Rewriter(g)
    return rw.conjugate_gen(rw.gen_for(conjugator), 1, rw.gen_for(target))


def transvection_conjugate(
    t: TransvectionSpec,
    target: PartialConjugation,
    d: SilSystemDecomposition,
    inverse: bool = False,
) -> GroupWord:
    """Conjugate of a conjugation into an additional component by a transvection.

    Supported cases: the transvection moves the target's own vertex over
    a vertex whose link contains the core (two-letter results, one per
    side/inverse combination), or it moves a different vertex over the
    target's vertex with the moved vertex outside the support (then the
    two commute). Anything else raises ``UnsupportedCaseError``.
    """
    g = d.graph
    if target.support.mask not in [x.mask for x in d.additional_components]:
        raise PreconditionError("target support must be an additional component")
    rw = _Rewriter(g)
    tgt = rw.gen_for(target)
    v, a = t.moved, t.by
    if v == target.vertex:
        if link_mask(g, a) & d.core.mask != d.core.mask:
            raise UnsupportedCaseError(
                f"vertex {g.names[a]} does not dominate the core; no companion conjugation"
            )
        try:
            companion = rw.gen_for(PartialConjugation(a, target.support))
        except InputError:
            raise UnsupportedCaseError(
                f"no companion conjugation of {g.names[a]} into the target support"
            ) from None
        sign = -1 if inverse else 1
        if t.side == "right":
            return free_reduce(((companion.gid, sign), (tgt.gid, 1)))
        if t.side == "left":
            return free_reduce(((tgt.gid, 1), (companion.gid, sign)))
        raise InputError(f"unknown transvection side {t.side!r}")
    if a == target.vertex and not target.support.mask >> v & 1:
        return ((tgt.gid, 1),)
    raise UnsupportedCaseError(
        f"transvection ({g.names[v]},{g.names[a]},{t.side}) over {target!r} "
        "is outside the case table"
    )


# ---------------------------------------------------------------------------
# structural decompositions


def _dominates_core(g: SimplicialGraph, core_mask: int, v: int) -> bool:
    return not core_mask & ~link_mask(g, v)


def shared_vertex_hypotheses(
    g: SimplicialGraph, d: SilSystemDecomposition, strict_supports: bool
) -> tuple[bool, tuple[str, ...]]:
    """Check the vertex condition shared by the tower results.

    Every vertex of a shared component must either have a connected (or
    empty) star complement, or define subordinate conjugations only,
    among supports inside its own component, each support containing
    another subordinate-defining vertex. With ``strict_supports`` each
    such support must contain *all* other subordinate definers of the
    component.
    """
    core = d.core.mask
    reasons: list[str] = []
    local: dict[int, list[int]] = {}
    definers: dict[int, set[int]] = {i: set() for i in range(d.n)}
    for i, comp in enumerate(d.shared_components):
        for v in comp:
            comps = mask_components(g, g.full_mask & ~star_mask(g, v))
            if len(comps) < 2:
                continue
            loc = [m for m in comps if not m & ~comp.mask]
            local[v] = loc
            if _dominates_core(g, core, v) and any(
                any(_dominates_core(g, core, w) for w in VertexSet(g, m)) for m in loc
            ):
                definers[i].add(v)
    for i, comp in enumerate(d.shared_components):
        for v in comp:
            if v not in local:
                continue
            if not _dominates_core(g, core, v):
                reasons.append(
                    f"vertex {g.names[v]} has a disconnected star complement "
                    "but its link misses part of the core"
                )
                continue
            loc = local[v]
            subordinate = [
                m
                for m in loc
                if any(_dominates_core(g, core, w) for w in VertexSet(g, m))
            ]
            if not subordinate:
                reasons.append(f"vertex {g.names[v]} defines no subordinate conjugation")
                continue
            if len(subordinate) != len(loc):
                reasons.append(
                    f"vertex {g.names[v]} has a local support with no core-dominated vertex"
                )
                continue
            others = definers[i] - {v}
            for m in subordinate:
                present = {w for w in others if m >> w & 1}
                if strict_supports and present != others:
                    reasons.append(
                        f"a support of {g.names[v]} misses a subordinate-defining vertex"
                    )
                    break
                if not present:
                    reasons.append(
                        f"a support of {g.names[v]} contains no other "
                        "subordinate-defining vertex"
                    )
                    break
    return (not reasons, tuple(reasons))


def core_vertex_pcs(g: SimplicialGraph, d: SilSystemDecomposition) -> list[PartialConjugation]:
    """Outer-nontrivial conjugations whose base vertex lies in the core."""
    return [p for p in out_nontrivial_pcs(g) if d.core.mask >> p.vertex & 1]


def n1n2_report(g: SimplicialGraph, d: SilSystemDecomposition) -> DecompositionReport:
    """Two-factor direct-product split when no subordinate conjugations exist.

    The first factor collects the dominant conjugations minus one
    redundant generator per defining vertex (into the second component
    from the first, and into the first from everywhere else); the second
    factor is everything that is not dominant.
    """
    if d.m:
        raise PreconditionError("the two-factor split requires no additional components")
    tagged = [(p, classify_pc(g, d, p)) for p in out_nontrivial_pcs(g)]
    if any(t is PCType.SUBORDINATE for _, t in tagged):
        raise PreconditionError(
            "the two-factor split requires no subordinate partial conjugations"
        )
    c1 = d.shared_components[0].mask
    c2 = d.shared_components[1].mask
    n1, n2, excluded = [], [], []
    for p, t in tagged:
        if t is PCType.DOMINANT:
            from_c1_into_c2 = c1 >> p.vertex & 1 and p.support.mask == c2
            into_c1 = p.support.mask == c1
            if from_c1_into_c2 or into_c1:
                excluded.append(p)
            else:
                n1.append(p)
        else:
            n2.append(p)
    notes = []
    if not n1:
        notes.append("first factor has no generators")
    if not n2:
        notes.append("second factor has no generators")
    return DecompositionReport(
        kind="two_factor",
        factors={"N1": tuple(n1), "N2": tuple(n2)},
        excluded=tuple(excluded),
        hypotheses_met=bool(n1) and bool(n2),
        notes=tuple(notes),
    )


def semidirect_report(g: SimplicialGraph, d: SilSystemDecomposition) -> DecompositionReport:
    """Core factor times an iterated semidirect tower of dominant layers.

    Requires at least three shared components, no additional components,
    and the shared-vertex condition; a violation raises
    ``PreconditionError`` naming the offending vertex. Layer k collects
    the dominant conjugations into component k from lower components and
    those from component k into components 2..k-1; the tail factor
    collects all subordinate conjugations.
    """
    if d.m:
        raise PreconditionError("the tower split requires no additional components")
    if d.n < 3:
        raise PreconditionError("the tower split requires at least three shared components")
    ok, reasons = shared_vertex_hypotheses(g, d, strict_supports=False)
    if not ok:
        raise PreconditionError("shared-vertex condition fails: " + "; ".join(reasons))
    tagged = [(p, classify_pc(g, d, p)) for p in out_nontrivial_pcs(g)]
    shared = [x.mask for x in d.shared_components]
    factors: dict = {"G": tuple(core_vertex_pcs(g, d))}
    excluded = []
    for k in range(2, d.n):  # 0-based target component; layer names are 1-based
        layer = []
        for p, t in tagged:
            if t is not PCType.DOMINANT:
                continue
            vi = d.locate(p.vertex)[1]
            si = shared.index(p.support.mask)
            if (si == k and vi < k) or (vi == k and 1 <= si < k):
                layer.append(p)
        factors[f"H{k + 1}"] = tuple(sorted(layer, key=lambda p: p.key()))
    for p, t in tagged:
        if t is PCType.DOMINANT:
            vi = d.locate(p.vertex)[1]
            si = shared.index(p.support.mask)
            if si == 0 or (vi == 0 and si == 1):
                excluded.append(p)
    factors["K"] = tuple(p for p, t in tagged if t is PCType.SUBORDINATE)
    return DecompositionReport(
        kind="semidirect_tower",
        factors=factors,
        excluded=tuple(excluded),
        hypotheses_met=True,
        notes=(),
    )


def hnn_data(g: SimplicialGraph, d: SilSystemDecomposition) -> HnnData:
    """Stable-letter data for the tower with exactly three shared components.

    The stable letter conjugates the first pivot into the third shared
    component; the associated subgroup collects all subordinate
    conjugations plus the remaining first-component conjugations into the
    third component. Each conjugate of an associated generator is
    resolved through the rewriting rules.
    """
    if d.n != 3:
        raise PreconditionError("stable-letter data requires exactly three shared components")
    report = semidirect_report(g, d)
    if report.factors["G"]:
        raise PreconditionError(
            "stable-letter data requires no conjugations defined by core vertices"
        )
    rw = _Rewriter(g)
    shared = [x.mask for x in d.shared_components]
    w1 = d.system.pivots[0]
    t_gen = rw.gen_for(PartialConjugation(w1, VertexSet(g, shared[2])))
    kept = set()
    for pcs in report.factors.values():
        kept.update((p.vertex, p.support.mask) for p in pcs)
    base = tuple(
        x
        for x in rw.gens
        if (x.pc.vertex, x.pc.support.mask) in kept and x.gid != t_gen.gid
    )
    subordinate_keys = {(p.vertex, p.support.mask) for p in report.factors["K"]}
    c1 = shared[0]
    associated = tuple(
        x
        for x in base
        if (x.pc.vertex, x.pc.support.mask) in subordinate_keys
        or (c1 >> x.pc.vertex & 1 and x.pc.support.mask == shared[2])
    )
    t_relations = []
    for x in associated:
        lhs: GroupWord = ((t_gen.gid, 1), (x.gid, 1), (t_gen.gid, -1))
        t_relations.append((lhs, rw.conjugate_gen(t_gen, 1, x)))
    return HnnData(
        stable_letter=t_gen,
        base_generators=base,
        associated_generators=associated,
        t_relations=tuple(t_relations),
    )


# ---------------------------------------------------------------------------
# export formats


def word_str(word: GroupWord, gens) -> str:
    return " ".join(f"{gens[gid].name}^{exp}" for gid, exp in word)


def presentation_text(pres: PsoPresentation) -> str:
    lines = []
    for x in pres.generators:
        members = ",".join(x.pc.support.names)
        vname = x.pc.support.graph.names[x.pc.vertex]
        lines.append(f"gen {x.name} = ({vname}, {{{members}}})")
    for family, word in pres.relations:
        lines.append(f"rel {family}: {word_str(word, pres.generators)}")
    return "\n".join(lines) + "\n"


def presentation_gap(pres: PsoPresentation) -> str:
    names = [x.name for x in pres.generators]
    lines = []
    if names:
        quoted = ", ".join(f'"{n}"' for n in names)
        lines.append(f"F := FreeGroup( {quoted} );")
        for i, n in enumerate(names, start=1):
            lines.append(f"{n} := F.{i};;")
    else:
        lines.append("F := FreeGroup( 0 );")
    rel_strs = [
        "*".join(names[gid] if exp == 1 else f"{names[gid]}^-1" for gid, exp in word)
        for _family, word in pres.relations
    ]
    lines.append("rels := [")
    for i, s in enumerate(rel_strs):
        lines.append(f"  {s}" + ("," if i < len(rel_strs) - 1 else ""))
    lines.append("];")
    return "\n".join(lines) + "\n"


def presentation_json_dict(pres: PsoPresentation) -> dict:
    g = pres.generators[0].pc.support.graph if pres.generators else None
    return {
        "generators": [
            {
                "name": x.name,
                "vertex": g.names[x.pc.vertex],
                "support": list(x.pc.support.names),
            }
            for x in pres.generators
        ],
        "relations": [
            {
                "family": family,
                "word": [[pres.generators[gid].name, exp] for gid, exp in word],
            }
            for family, word in pres.relations
        ],
    }
