"""Spectral-order toolkit for real symmetric matrices.

Builds step resolutions of symmetric matrices, compares them under the
numerical (PSD) and spectral orders, computes spectral lattice operations
on effects, expands effects into dyadic projection series, and ships a
property-check harness over all of it.
"""

from .core import (
    abs_val,
    carrier,
    commutes,
    in_bicommutant,
    inverse,
    jordan_product,
    neg_part,
    numerical_leq,
    pos_part,
    quadratic_map,
    sqrt_psd,
)
from .dyadic import carrier_via_join, dyadic_expand, dyadic_step
from .generators import GeneratorSpec, draw, substream
from .lattice import (
    family_join,
    family_meet,
    join,
    meet,
    modular_check,
    orthocomplement,
    position_pprime,
    proj_leq,
)
from .matio import load_matrix, matrix_from_dict, matrix_to_dict, save_matrix
from .orders import (
    OrderTag,
    brouwer_complement,
    check_bz,
    check_involution,
    demorgan_carrier_checks,
    kleene_complement,
    leq,
)
from .report import Failure, VerificationReport
from .resolution import (
    StepResolution,
    affine,
    eigenprojection,
    merged_breakpoints,
    negate,
    reconstruct,
    resolution_of,
    step_approximant,
)
from .spectral import (
    family_inf,
    family_sup,
    resolution_leq,
    spectral_join,
    spectral_leq,
    spectral_meet,
)
from .substrate import (
    DEFAULT_POLICY,
    ConvergenceError,
    Effect,
    EigenSystem,
    Projection,
    SymMatrix,
    TolerancePolicy,
    cluster_spectrum,
    eig,
    frobenius,
    from_diag,
    identity,
    is_psd,
    nullspace_projection,
    operator_norm,
    projection_onto_span,
    zeros,
)
from .suites import CHECKS, SUITE_NAMES, replay, run_suite

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "SymMatrix",
    "Effect",
    "Projection",
    "EigenSystem",
    "ConvergenceError",
    "eig",
    "cluster_spectrum",
    "projection_onto_span",
    "nullspace_projection",
    "operator_norm",
    "is_psd",
    "frobenius",
    "identity",
    "zeros",
    "from_diag",
    "jordan_product",
    "quadratic_map",
    "sqrt_psd",
    "abs_val",
    "pos_part",
    "neg_part",
    "carrier",
    "inverse",
    "commutes",
    "in_bicommutant",
    "numerical_leq",
    "StepResolution",
    "resolution_of",
    "eigenprojection",
    "reconstruct",
    "affine",
    "negate",
    "step_approximant",
    "merged_breakpoints",
    "proj_leq",
    "orthocomplement",
    "meet",
    "join",
    "family_meet",
    "family_join",
    "modular_check",
    "position_pprime",
    "resolution_leq",
    "spectral_leq",
    "spectral_join",
    "spectral_meet",
    "family_sup",
    "family_inf",
    "OrderTag",
    "leq",
    "kleene_complement",
    "brouwer_complement",
    "check_involution",
    "check_bz",
    "demorgan_carrier_checks",
    "dyadic_step",
    "dyadic_expand",
    "carrier_via_join",
    "GeneratorSpec",
    "substream",
    "draw",
    "Failure",
    "VerificationReport",
    "SUITE_NAMES",
    "CHECKS",
    "run_suite",
    "replay",
    "matrix_to_dict",
    "matrix_from_dict",
    "save_matrix",
    "load_matrix",
]
