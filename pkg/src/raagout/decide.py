"""Rule-chain decision procedure for acylindrical hyperbolicity, with certificates.

``decide`` walks a fixed list of rules in decreasing order of certainty
and stops at the first one that applies, so every decision names exactly
one rule:

  no_sil                          complete classification when no SIL-pair exists
  connected_sil_only              SIL-pairs exist but none is separated: undecided regime
  single_core_vertex              one-vertex core forces a free-abelian obstruction
  additional_component_product    two or more additional components force a product obstruction
  single_additional_component     exactly one additional component: undecided regime
  two_factor_direct_product       no subordinate conjugations: two-factor split
  hnn_subordinate_criterion       positive criterion through the stable-letter construction
  semidirect_core_factor          core factor plus tower: product obstruction
  unclassified                    none of the above

Verdicts are conservative: "unknown" is an answer, never an error, and a
positive verdict is only ever produced by the no-SIL classification (for
the full outer group) or the stable-letter criterion (for the pure
symmetric subgroup). Every decision carries a certificate sufficient to
re-verify the fired rule's hypotheses; ``verify_certificate`` is that
independent pass.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalCheckError, PreconditionError
from .graph import (
    SimplicialGraph,
    VertexSet,
    is_connected,
    link_mask,
    mask_components,
    star_mask,
)
from .order import order_pairs, related_unordered_pairs, leq
from .pconj import PartialConjugation, out_nontrivial_pcs, commutes
from .presentation import (
    core_vertex_pcs,
    n1n2_report,
    semidirect_report,
    shared_vertex_hypotheses,
    hnn_data,
)
from .sil import (
    SilSystem,
    SilSystemDecomposition,
    ker_p_generators,
    maximal_sil_system,
    separated_sil_pairs,
    sil_pairs,
    validate_system,
)

YES = "yes"
NO = "no"
UNKNOWN = "unknown"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    out_status: str
    pso_status: str


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    rule: str
    certificate: dict
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "out_status": self.verdict.out_status,
            "pso_status": self.verdict.pso_status,
            "rule": self.rule,
            "warnings": list(self.warnings),
            "certificate": self.certificate,
        }


# ---------------------------------------------------------------------------
# serialization helpers


def _pc_dict(g: SimplicialGraph, pc: PartialConjugation) -> dict:
    return {"vertex": g.names[pc.vertex], "support": list(pc.support.names)}


def _pc_from_dict(g: SimplicialGraph, data: dict) -> PartialConjugation:
    return PartialConjugation(
        g.index(data["vertex"]), g.vertex_set(data["support"])
    )


def _decomp_dict(g: SimplicialGraph, d: SilSystemDecomposition) -> dict:
    return {
        "pivots": [g.names[w] for w in d.system.pivots],
        "core": list(d.core.names),
        "shared_components": [list(c.names) for c in d.shared_components],
        "additional_components": [list(c.names) for c in d.additional_components],
    }


def _decomp_from_dict(g: SimplicialGraph, data: dict) -> SilSystemDecomposition:
    return SilSystemDecomposition(
        system=SilSystem(
            tuple(g.index(w) for w in data["pivots"]),
            g.vertex_set(data["core"]),
        ),
        shared_components=tuple(g.vertex_set(c) for c in data["shared_components"]),
        additional_components=tuple(
            g.vertex_set(c) for c in data["additional_components"]
        ),
    )


def _pair_names(g: SimplicialGraph, pairs) -> list[list[str]]:
    return [[g.names[i], g.names[j]] for i, j in pairs]


# ---------------------------------------------------------------------------
# individual rules


def _disconnected_star_complements(g: SimplicialGraph) -> list[int]:
    return [
        v
        for v in range(g.n)
        if len(mask_components(g, g.full_mask & ~star_mask(g, v))) >= 2
    ]


def p_is_trivial(g: SimplicialGraph) -> tuple[bool, dict]:
    """Whether the nilpotent kernel of the block-triangular form is trivial.

    Only meaningful without SIL-pairs: the kernel is generated by the
    outer-nontrivial partial conjugations together with the transvections
    along strictly related pairs, so triviality means neither exists.
    """
    if sil_pairs(g):
        raise PreconditionError("the nilpotent-kernel test applies to SIL-free graphs only")
    disconnected = _disconnected_star_complements(g)
    strict = [
        (v, w)
        for v, w in order_pairs(g)
        if not leq(g, w, v)
    ]
    certificate = {
        "disconnected_star_complements": [g.names[v] for v in disconnected],
        "strict_order_pairs": _pair_names(g, strict),
    }
    return (not disconnected and not strict, certificate)


def no_sil_rule(g: SimplicialGraph) -> Decision:
    """Complete classification for SIL-free graphs.

    Positive exactly when every star complement is connected (or empty)
    and the related pairs boil down to a single mutually related pair.
    """
    if sil_pairs(g):
        raise PreconditionError("the SIL-free classification needs a SIL-free graph")
    return _no_sil_decision(g)


def _no_sil_decision(g: SimplicialGraph) -> Decision:
    disconnected = _disconnected_star_complements(g)
    pairs = related_unordered_pairs(g)
    single_equiv = (
        len(pairs) == 1 and leq(g, pairs[0][0], pairs[0][1]) and leq(g, pairs[0][1], pairs[0][0])
    )
    positive = not disconnected and single_equiv
    certificate = {
        "sil_pairs": [],
        "disconnected_star_complements": [g.names[v] for v in disconnected],
        "related_pairs": _pair_names(g, pairs),
        "equivalent_pair": (_pair_names(g, pairs)[0] if single_equiv else None),
    }
    return Decision(
        Verdict(YES if positive else NO, NOT_APPLICABLE),
        "no_sil",
        certificate,
    )


def core_singleton_rule(g: SimplicialGraph, d: SilSystemDecomposition) -> Decision | None:
    """Free-abelian obstruction when the system core is a single vertex.

    Applies to connected graphs; the certificate carries nonempty kernel
    witnesses (leaf transvections or class conjugations).
    """
    if not is_connected(g):
        raise PreconditionError("the single-core rule is proved for connected graphs")
    if len(d.core) != 1:
        return None
    witnesses = ker_p_generators(g)
    if not witnesses:
        raise InternalCheckError("single-core rule fired with no kernel witness")
    wit_dicts = []
    for w in witnesses:
        if w.kind == "leaf_transvection":
            wit_dicts.append(
                {
                    "kind": w.kind,
                    "moved": g.names[w.transvection.moved],
                    "by": g.names[w.transvection.by],
                    "side": w.transvection.side,
                }
            )
        else:
            wit_dicts.append(
                {
                    "kind": w.kind,
                    "vertex": g.names[w.vertex],
                    "component": list(w.component.names),
                }
            )
    certificate = {
        "decomposition": _decomp_dict(g, d),
        "core_vertex": d.core.names[0],
        "kernel_witnesses": wit_dicts,
    }
    return Decision(Verdict(NO, UNKNOWN), "single_core_vertex", certificate)


def _shared_additional_sil_pairs(g: SimplicialGraph, d: SilSystemDecomposition):
    """SIL-pairs joining a shared-component vertex to an additional-component vertex."""
    shared = 0
    for c in d.shared_components:
        shared |= c.mask
    additional = 0
    for c in d.additional_components:
        additional |= c.mask
    out = []
    for v in VertexSet(g, shared):
        for w in VertexSet(g, additional):
            if not g.adj[v] >> w & 1 and is_sil_pair(g, v, w):
                out.append((min(v, w), max(v, w)))
    return sorted(set(out))


def _additional_product_certificate(g: SimplicialGraph, d: SilSystemDecomposition) -> dict:
    lam = [v for v in range(g.n) if not d.core.mask & ~link_mask(g, v)]
    lam_edges = [
        [g.names[u], g.names[v]]
        for u in lam
        for v in lam
        if u < v and g.adj[u] >> v & 1
    ]
    factors = []
    for dj in d.additional_components:
        factors.append(
            [
                _pc_dict(g, PartialConjugation(v, dj))
                for v in lam
            ]
        )
    return {
        "decomposition": _decomp_dict(g, d),
        "lambda_vertices": [g.names[v] for v in lam],
        "lambda_edges": lam_edges,
        "factor_generators": factors,
    }


def decide(g: SimplicialGraph) -> Decision:
    """Apply the rule chain; total and deterministic, never raises for a verdict."""
    pairs = sil_pairs(g)
    if not pairs:
        return _no_sil_decision(g)
    if not separated_sil_pairs(g):
        certificate = {
            "sil_pairs": _pair_names(g, pairs),
            "separated_sil_pairs": [],
        }
        return Decision(
            Verdict(UNKNOWN, UNKNOWN),
            "connected_sil_only",
            certificate,
            warnings=("every SIL-pair stays connected; no system exists",),
        )
    d = maximal_sil_system(g)
    if d is None:
        raise InternalCheckError("separated SIL-pairs exist but no system was built")
    connected = is_connected(g)
    if len(d.core) == 1 and connected:
        decision = core_singleton_rule(g, d)
        if decision is not None:
            return decision
    if d.m >= 2:
        certificate = _additional_product_certificate(g, d)
        cross = _shared_additional_sil_pairs(g, d)
        certificate["shared_additional_sil_pairs"] = _pair_names(g, cross)
        if cross:
            # a connected-type SIL partner inside an additional component
            # breaks the normality argument behind the product obstruction
            return Decision(
                Verdict(UNKNOWN, UNKNOWN),
                "additional_component_product",
                certificate,
                warnings=(
                    "a shared-component vertex forms a SIL-pair with an "
                    "additional-component vertex; the product obstruction is "
                    "not certified",
                ),
            )
        return Decision(Verdict(NO, UNKNOWN), "additional_component_product", certificate)
    if d.m == 1:
        return Decision(
            Verdict(UNKNOWN, UNKNOWN),
            "single_additional_component",
            {"decomposition": _decomp_dict(g, d)},
            warnings=("one additional component; no general rule applies",),
        )
    transvection_free = not order_pairs(g)
    subordinate_exists = any(
        _has_subordinate_support(g, d, v)
        for comp in d.shared_components
        for v in comp
    )
    if not subordinate_exists:
        report = n1n2_report(g, d)
        certificate = {
            "decomposition": _decomp_dict(g, d),
            "n1": [_pc_dict(g, p) for p in report.factors["N1"]],
            "n2": [_pc_dict(g, p) for p in report.factors["N2"]],
            "excluded": [_pc_dict(g, p) for p in report.excluded],
            "transvection_free": transvection_free,
        }
        warnings = list(report.notes)
        if report.hypotheses_met:
            if transvection_free:
                return Decision(
                    Verdict(NO, NO), "two_factor_direct_product", certificate
                )
            warnings.append(
                "transvections exist; the product obstruction stays at the "
                "pure symmetric level"
            )
            return Decision(
                Verdict(UNKNOWN, NO),
                "two_factor_direct_product",
                certificate,
                tuple(warnings),
            )
        warnings.append("a factor is trivial; the product obstruction does not apply")
        return Decision(
            Verdict(UNKNOWN, UNKNOWN),
            "two_factor_direct_product",
            certificate,
            tuple(warnings),
        )
    core_pcs = core_vertex_pcs(g, d)
    if d.n == 3 and not core_pcs:
        ok, reasons = shared_vertex_hypotheses(g, d, strict_supports=True)
        if ok:
            certificate = _positive_certificate(g, d, transvection_free)
            warnings = ()
            if not transvection_free:
                warnings = (
                    "transvections exist; the pure symmetric subgroup has "
                    "infinite index in the outer group",
                )
            return Decision(
                Verdict(UNKNOWN, YES),
                "hnn_subordinate_criterion",
                certificate,
                warnings,
            )
    if d.n >= 3 and core_pcs:
        ok, reasons = shared_vertex_hypotheses(g, d, strict_supports=False)
        if ok:
            report = semidirect_report(g, d)
            certificate = {
                "decomposition": _decomp_dict(g, d),
                "factors": {
                    name: [_pc_dict(g, p) for p in pcs]
                    for name, pcs in report.factors.items()
                },
                "transvection_free": transvection_free,
            }
            if transvection_free:
                certificate["out_level_step"] = (
                    "derived inference: no transvections identify the pure "
                    "symmetric subgroup with a finite-index normal subgroup, "
                    "and an infinite normal subgroup of an acylindrically "
                    "hyperbolic group would itself be acylindrically hyperbolic"
                )
                return Decision(Verdict(NO, NO), "semidirect_core_factor", certificate)
            return Decision(
                Verdict(UNKNOWN, NO),
                "semidirect_core_factor",
                certificate,
                warnings=(
                    "transvections exist; the product obstruction stays at the "
                    "pure symmetric level",
                ),
            )
    return Decision(
        Verdict(UNKNOWN, UNKNOWN),
        "unclassified",
        {"decomposition": _decomp_dict(g, d)},
        warnings=("no rule covers this configuration",),
    )


def _has_subordinate_support(g: SimplicialGraph, d: SilSystemDecomposition, v: int) -> bool:
    if d.core.mask & ~link_mask(g, v):
        return False
    place, idx = d.locate(v)
    if place != "C":
        return False
    own = d.shared_components[idx].mask
    comps = mask_components(g, g.full_mask & ~star_mask(g, v))
    if len(comps) < 2:
        return False
    for m in comps:
        if not m & ~own and any(
            not d.core.mask & ~link_mask(g, w) for w in VertexSet(g, m)
        ):
            return True
    return False


def _positive_certificate(
    g: SimplicialGraph, d: SilSystemDecomposition, transvection_free: bool
) -> dict:
    per_component = []
    for comp in d.shared_components:
        entries = []
        for v in comp:
            comps = mask_components(g, g.full_mask & ~star_mask(g, v))
            if len(comps) < 2:
                entries.append({"vertex": g.names[v], "connected_complement": True})
            else:
                own = [m for m in comps if not m & ~comp.mask]
                entries.append(
                    {
                        "vertex": g.names[v],
                        "connected_complement": False,
                        "subordinate_supports": [
                            list(VertexSet(g, m).names) for m in own
                        ],
                    }
                )
        per_component.append(entries)
    certificate = {
        "decomposition": _decomp_dict(g, d),
        "shared_component_vertices": per_component,
        "core_vertex_conjugations": [],
        "transvection_free": transvection_free,
    }
    if transvection_free:
        certificate["finite_index_remark"] = (
            "no transvections: the pure symmetric subgroup has finite index "
            "in the outer group"
        )
    return certificate


# ---------------------------------------------------------------------------
# certificate verification


def verify_certificate(g: SimplicialGraph, decision: Decision) -> None:
    """Re-validate the fired rule's hypotheses from the certificate alone.

    Raises ``InternalCheckError`` on the first discrepancy.
    """
    cert = decision.certificate
    rule = decision.rule

    def ensure(cond: bool, what: str) -> None:
        if not cond:
            raise InternalCheckError(f"certificate check failed ({rule}): {what}")

    if rule == "no_sil":
        ensure(not sil_pairs(g), "graph has SIL-pairs")
        disconnected = [g.names[v] for v in _disconnected_star_complements(g)]
        ensure(
            disconnected == cert["disconnected_star_complements"],
            "star-complement census differs",
        )
        pairs = _pair_names(g, related_unordered_pairs(g))
        ensure(pairs == cert["related_pairs"], "related-pair census differs")
        positive = decision.verdict.out_status == YES
        recomputed = not disconnected and len(pairs) == 1 and (
            leq(g, pairs[0][0], pairs[0][1]) and leq(g, pairs[0][1], pairs[0][0])
        )
        ensure(positive == recomputed, "verdict disagrees with the stated condition")
        return
    if rule == "connected_sil_only":
        ensure(bool(sil_pairs(g)), "no SIL-pair present")
        ensure(not separated_sil_pairs(g), "a separated SIL-pair exists")
        return
    if rule == "unclassified":
        return

    d = _decomp_from_dict(g, cert["decomposition"])
    validate_system(g, d)

    if rule == "single_core_vertex":
        ensure(len(d.core) == 1, "core is not a single vertex")
        ensure(is_connected(g), "graph is not connected")
        ensure(bool(cert["kernel_witnesses"]), "no kernel witness recorded")
        recomputed = ker_p_generators(g)
        ensure(
            len(recomputed) == len(cert["kernel_witnesses"]),
            "kernel witness census differs",
        )
        return
    if rule == "additional_component_product":
        ensure(d.m >= 2, "fewer than two additional components")
        lam = [v for v in range(g.n) if not d.core.mask & ~link_mask(g, v)]
        ensure(
            [g.names[v] for v in lam] == cert["lambda_vertices"],
            "dominating-vertex census differs",
        )
        factors = [
            [_pc_from_dict(g, entry) for entry in factor]
            for factor in cert["factor_generators"]
        ]
        ensure(len(factors) == d.m, "factor count differs from additional components")
        supports = {f[0].support.mask for f in factors if f}
        ensure(
            supports == {c.mask for c in d.additional_components},
            "factor supports are not the additional components",
        )
        for i, fi in enumerate(factors):
            for fj in factors[i + 1 :]:
                for p in fi:
                    for q in fj:
                        ensure(
                            commutes(g, p, q),
                            "factors fail to commute elementwise",
                        )
        return
    if rule == "single_additional_component":
        ensure(d.m == 1, "not exactly one additional component")
        return
    if rule == "two_factor_direct_product":
        ensure(d.m == 0, "additional components present")
        report = n1n2_report(g, d)  # re-raises if subordinate conjugations exist
        ensure(
            [_pc_dict(g, p) for p in report.factors["N1"]] == cert["n1"],
            "first factor differs",
        )
        ensure(
            [_pc_dict(g, p) for p in report.factors["N2"]] == cert["n2"],
            "second factor differs",
        )
        pso_no = decision.verdict.pso_status == NO
        ensure(pso_no == report.hypotheses_met, "split verdict mismatch")
        if decision.verdict.out_status == NO:
            ensure(not order_pairs(g), "transvections exist; outer verdict unsupported")
        return
    if rule == "hnn_subordinate_criterion":
        ensure(d.n == 3, "not exactly three shared components")
        ensure(d.m == 0, "additional components present")
        ok, reasons = shared_vertex_hypotheses(g, d, strict_supports=True)
        ensure(ok, "strict shared-vertex condition fails: " + "; ".join(reasons))
        ensure(not core_vertex_pcs(g, d), "core vertices define conjugations")
        hnn = hnn_data(g, d)  # must resolve with zero unsupported cases
        ensure(len(hnn.t_relations) == len(hnn.associated_generators), "stable-letter data incomplete")
        return
    if rule == "semidirect_core_factor":
        ensure(d.m == 0, "additional components present")
        if decision.verdict.out_status == NO:
            ensure(not order_pairs(g), "transvections exist; outer verdict unsupported")
        report = semidirect_report(g, d)
        ensure(bool(report.factors["G"]), "core factor is empty")
        recomputed = {
            name: [_pc_dict(g, p) for p in pcs] for name, pcs in report.factors.items()
        }
        ensure(recomputed == cert["factors"], "factor lists differ")
        return
    raise InputError(f"unknown rule {rule!r}")
