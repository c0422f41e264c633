"""Exact skew Schur function calculus and skew-equivalence classification."""

from .diagrams import (
    Composition,
    EMPTY,
    Partition,
    SkewShape,
    components,
    enumerate_connected,
    make_shape,
    normalize,
    parse_ascii,
    parse_compact,
    ribbon_to_shape,
    shape_to_ribbon,
)
from .diagram_ops import (
    amalgamate,
    amalgamated_compose,
    amalgamated_power,
    check_hypotheses,
    compose_alpha_d,
    compose_d_beta,
    concat,
    dot_omega,
    hat,
    join,
    near_concat,
    oplus,
    protrusion,
)
from .staircases import (
    OutsideDecomposition,
    StaircasePresentation,
    border_decomposition,
    build_from_staircase,
    detect_staircase,
    from_ribbons,
    hash_ribbon,
    m_intersect,
    m_union,
    reverse_nesting,
    staircase,
)
from .symfunc import (
    HPolynomial,
    Picture,
    SchurVector,
    character,
    character_vector,
    circ_map,
    circ_omega_map,
    circ_omega_map_h,
    h_coeff,
    h_from_schur,
    hamel_goulden,
    jacobi_trudi,
    jacobi_trudi_dual,
    kostka_expand,
    omega_involution,
    phi_ell,
    pictures,
    principal_eval,
    schur_expand_lr,
    schur_from_h,
    schur_multiply,
    z_factor,
)
from .invariants import (
    OverlapProfile,
    equivalent,
    fingerprint,
    frobenius_rank,
    overlaps,
    rank_brute_force,
    rank_from_principal,
)
from .classifier import (
    ClassificationReport,
    EquivalenceClass,
    classify,
    explain_by_generators,
    load_sporadic_pair,
    verify_sporadics,
)

__version__ = "0.1.0"
