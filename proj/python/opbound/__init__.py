"""Operator-bound verification toolkit.

Complex/fractional matrix powers (spectral and contour-integral), generalized
polar decompositions, Schatten-p norms with trace duality, sectorial angle and
BIP constant estimation, and numerical verifiers for a family of
strip-interpolation operator inequalities.
"""

from opbound._core import (  # noqa: F401
    BipEstimate,
    ContourSpec,
    GeneralizedPolarFactors,
    HermitianSpectrum,
    InequalityReport,
    KOptimum,
    OpboundError,
    PolarDecomposition,
    SectorialAngle,
    SingularDecomposition,
    TraceDualityEstimate,
    adjoint,
    bip_fit,
    block_embed,
    conjugate_exponent,
    conjugated_operator,
    dunford_power,
    exponent_assembler,
    generalized_polar,
    generate,
    heinz_domination_check,
    hermitian_eig,
    imaginary_power,
    imaginary_power_bound_check,
    interpolation_exponent,
    is_normal,
    load_matrix,
    mcintosh_check,
    operator_norm,
    optimize_k,
    polar,
    power_selfadjoint,
    psd_power,
    relative_bound_constants,
    save_matrix_json,
    save_matrix_market,
    scalar_power,
    schatten_norm,
    sectoriality_angle,
    solve,
    spectrum_of,
    suggest_contour,
    svd,
    three_lines_bound,
    three_lines_kernel_bound,
    trace_duality_estimate,
    verify_bounded_similarity,
    verify_gk_interpolation,
    verify_sandwich,
    verify_strip_bound,
)

__version__ = "0.1.0"
