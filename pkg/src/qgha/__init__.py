"""Exact symbolic kernel for quantum generalized Heisenberg algebras H_q(f, g).

The algebra on generators x, y, h with relations

    h*x = x*f(h),    y*h = f(h)*y,    y*x - q*x*y = g(h)

over Q or a prime field, with normal-form element arithmetic, structural
analysis (domain/Noetherian/center/growth), an isomorphism decider with
explicit witnesses, automorphism-group computation, and down-up
conversions.
"""

from . import errors
from .algebra import (
    DEG_BOTTOM,
    AlgebraParams,
    Element,
    leading_term_product,
    yx_expand,
)
from .classify import (
    AutGroupDescription,
    AutRegime,
    GduaPresentation,
    IsoWitness,
    apply_witness,
    automorphism_group,
    automorphism_preserves_relations,
    downup_candidates,
    from_downup,
    from_gdua,
    is_isomorphic,
    to_gdua,
    transform_type_I,
    transform_type_II,
    transform_type_III,
)
from .exprparse import parse_element_expr
from .fields import FieldSpec, Scalar, field_make, nth_roots, root_of_unity_order
from .poly import NEG_INF, Poly, affine_conjugate, poly_roots, sigma_pow
from .rewrite import FreeWord, element_words, oracle_multiply, reduce_word
from .serial import algebra_from_dict, algebra_to_dict, dump_algebra, load_algebra
from .structure import (
    CenterDescription,
    CenterKind,
    DomainReport,
    GrowthReport,
    NoetherianReason,
    NoetherianReport,
    StrictnessCheck,
    WitnessChain,
    center_describe,
    centralizer_of_h_contains,
    gk_dimension_sequence,
    is_central,
    is_domain,
    is_noetherian,
    noetherian_witness_check,
    solve_sigma_q,
)

__version__ = "0.1.0"
