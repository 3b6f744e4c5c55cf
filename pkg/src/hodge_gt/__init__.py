"""Exact Gelfand-Tsetlin bases for Hodge-de Rham and GMT systems in Clifford analysis."""

from .scalar import Scalar
from .clifford import (
    Multivector,
    blade_product,
    clifford_conjugate,
    geometric_product,
    grade_projection,
    hermitian_bar,
    inner_bullet,
    outer_wedge,
    pseudoscalar,
    scalar_part,
)
from .mvpoly import MVPolynomial, embed, restrict_last, split_em, w, z
from .operators import (
    Operator,
    dirac,
    dirac_minus,
    dirac_plus,
    euler,
    fermi_minus,
    fermi_plus,
    laplacian,
    x_bullet,
    x_mult,
    x_power,
    x_wedge,
    y_minus,
    y_plus,
)
from .special import (
    CKMultiplier,
    X_check,
    X_hat,
    X_poly,
    Y_check,
    Y_hat,
    gegenbauer_homog,
    gmt_factor,
    pochhammer,
    y_check_factor,
    y_hat_factor,
)
from .ck import (
    CompatibilityError,
    InitialDatum,
    ck_extend_generic,
    ck_extend_hodge,
    is_in_Iks,
    restrict_to_initial,
)
from .verify import (
    GramReport,
    SizeCapExceeded,
    fischer_inner,
    gram,
    l2_inner,
    nullspace_dim_gmt,
    nullspace_dim_hodge,
    rank,
    span_equal,
)
from .gt_basis import (
    Basis,
    BasisElement,
    GTLabel,
    dual_basis,
    find_by_label,
    gmt_basis,
    gt_basis_hodge,
    harmonic_gt_basis,
    label_of,
    realify,
    riesz_basis,
)
from .fischer import decompose_ker, proj_minus, proj_plus, verify_fischer_full

__version__ = "0.1.0"
