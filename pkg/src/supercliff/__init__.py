"""Finite-dimensional C* Clifford superalgebra toolkit.

Exact-at-desk-scale arithmetic of C(R^n) with its Z2 grading, the lattice
of subspaces of R^n, conditional expectations onto C(Z-perp), a
supercommutant solver, the faithful left-regular representation carrying
the C* norm, and seeded verification suites for the structural theorems
(twisted duality, conditional-expectation laws, net stabilization, the
intersection theorem).
"""

from .algebra import (
    ALGEBRA_DIM_CAP,
    EPS_EQ,
    BladeIndex,
    DimensionMismatch,
    Multivector,
    add,
    approx_equal,
    blade_product,
    coeff_array,
    coeff_norm,
    embed_vector,
    even_odd_split,
    from_coeff_array,
    gamma,
    max_coeff_diff,
    mul,
    normalized,
    scale,
    star,
    sub,
)
from .expectation import (
    REP_DIM_CAP,
    SubalgebraBasis,
    decompose_along,
    expect_subspace,
    expect_unit,
    generated_subalgebra,
    is_positive,
    left_regular,
    norm,
    span_containment_residual,
    span_contains,
    span_equal,
    span_intersect,
    supercommutant,
    support_space,
    verify_net_stabilization,
)
from .parsing import ParseError, format_multivector, parse_multivector
from .subspaces import (
    EPS_ORTH,
    EPS_RANK,
    Subspace,
    from_spanning,
    intersect,
    orthocomplement,
    project,
    project_subspace,
    projector,
    subspace_contains,
    subspace_equal,
    sum_subspaces,
)

__version__ = "0.1.0"

__all__ = [
    "ALGEBRA_DIM_CAP",
    "EPS_EQ",
    "EPS_ORTH",
    "EPS_RANK",
    "REP_DIM_CAP",
    "BladeIndex",
    "DimensionMismatch",
    "Multivector",
    "ParseError",
    "SubalgebraBasis",
    "Subspace",
    "add",
    "approx_equal",
    "blade_product",
    "coeff_array",
    "coeff_norm",
    "decompose_along",
    "embed_vector",
    "even_odd_split",
    "expect_subspace",
    "expect_unit",
    "format_multivector",
    "from_coeff_array",
    "from_spanning",
    "gamma",
    "generated_subalgebra",
    "intersect",
    "is_positive",
    "left_regular",
    "max_coeff_diff",
    "mul",
    "norm",
    "normalized",
    "orthocomplement",
    "parse_multivector",
    "project",
    "project_subspace",
    "projector",
    "scale",
    "span_containment_residual",
    "span_contains",
    "span_equal",
    "span_intersect",
    "star",
    "sub",
    "subspace_contains",
    "subspace_equal",
    "sum_subspaces",
    "supercommutant",
    "support_space",
    "verify_net_stabilization",
]
