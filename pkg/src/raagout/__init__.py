"""Outer-automorphism analysis of right-angled Artin groups.

Given a finite simplicial graph, this package computes the link-star
order, SIL-pair structure, partial-conjugation classification, the
finite presentation of the pure symmetric outer automorphism group, and
a certified decision procedure for acylindrical hyperbolicity of the
outer automorphism group wherever a structural rule settles it.
"""

__version__ = "0.1.0"

from .errors import (
    InputError,
    InternalCheckError,
    ParseError,
    PreconditionError,
    UnsupportedCaseError,
)
from .graph import (
    SimplicialGraph,
    VertexSet,
    connected_components,
    is_connected,
    link,
    link_of_set,
    star,
    star_complement_components,
)
from .order import (
    EquivClass,
    OrderPair,
    TransvectionSpec,
    equivalence_classes,
    has_no_transvection,
    leaf_like,
    leq,
    maximal_vertices,
    order_pairs,
)
from .sil import (
    KerPGenerator,
    PairComponentClassification,
    SilSystem,
    SilSystemDecomposition,
    all_sil_pairs_connected,
    classify_pair,
    is_sil_pair,
    ker_p_generators,
    maximal_sil_system,
    separated_sil_pairs,
    sil_pairs,
    vhat_components,
)
from .pconj import (
    PartialConjugation,
    PCType,
    classify_pc,
    commutes,
    dominant_pcs,
    enumerate_pcs,
    out_nontrivial_pcs,
    subordinate_pcs,
)
from .presentation import (
    DecompositionReport,
    GroupWord,
    HnnData,
    PCGenerator,
    PsoPresentation,
    conjugate_pc,
    hnn_data,
    n1n2_report,
    pso_presentation,
    semidirect_report,
    transvection_conjugate,
)
from .decide import Decision, Verdict, decide, no_sil_rule, p_is_trivial, verify_certificate
from .gen import GnpConfig, gamma_pqr, gnp, lambda_graph, named
from .mc import TrialReport, run_trials, sweep

__all__ = [name for name in dir() if not name.startswith("_")]
