"""Exact arithmetic for monoids and groups of Pythagorean triples."""

from .core import (
    BetaGamma,
    ConicPoint,
    DegeneratePoint,
    DomainError,
    IDENTITY_TRIPLE,
    InvalidFamilyParams,
    Mat3,
    NonIntegralResult,
    NotOnUnitConic,
    NotPositiveNonSquare,
    Triple,
    det,
    mat_mul,
    mat_vec,
    triple_from_point,
    vec_mat,
)
from .forms import (
    FormParams,
    LinearForm,
    NaturalReport,
    StandardForm,
    commutative_form,
    family_a,
    family_b,
    family_c,
    family_matrix,
    is_commutative,
    is_natural,
    satisfies_system,
)
from .ptpm import (
    PreservationReport,
    TIKOO_KINDS,
    closure_witness,
    necessary_conditions,
    pal_matrix,
    preserves_pythagorean,
    ptpm_form,
    ptpm_matrix,
    tikoo_form,
    tikoo_matrix,
)
from .products import (
    AxiomReport,
    BS_PRODUCT,
    LawResult,
    ProductKind,
    TE_PRODUCT,
    bullet,
    bullet_bg,
    power,
    product,
    sample_triples,
    verify_axioms,
)
from .conic import (
    PellSolution,
    conic_inverse,
    conic_level,
    conic_mul,
    conic_through,
    enumerate_unit_points,
    fundamental_unit_point,
    matrix_power_via_conic,
    pell_d,
    pell_minimal,
    points_for_triple,
    triple_inverse,
    triple_inverse_of_triple,
    unit_points_in_box,
)

__version__ = "0.1.0"
