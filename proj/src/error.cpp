#include "opbound/error.hpp"

namespace opbound {

const char* errc_name(errc c) noexcept {
    switch (c) {
    case errc::not_hermitian: return "NotHermitian";
    case errc::no_convergence: return "NoConvergence";
    case errc::singular: return "Singular";
    case errc::zero_base: return "ZeroBase";
    case errc::near_singular: return "NearSingular";
    case errc::bad_alpha: return "BadAlpha";
    case errc::bad_exponent: return "BadExponent";
    case errc::bad_strip_point: return "BadStripPoint";
    case errc::boundary_violation: return "BoundaryViolation";
    case errc::nonpositive_bound: return "NonpositiveBound";
    case errc::kernel_singular: return "KernelSingular";
    case errc::both_zero: return "BothZero";
    case errc::unknown_case: return "UnknownCase";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::spectrum_outside_sector: return "SpectrumOutsideSector";
    case errc::negative_real_spectrum: return "NegativeRealSpectrum";
    case errc::contour_touches_spectrum: return "ContourTouchesSpectrum";
    case errc::branch_cut_crossed: return "BranchCutCrossed";
    case errc::quadrature_not_converged: return "QuadratureNotConverged";
    case errc::not_normal: return "NotNormal";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::parse_error: return "ParseError";
    case errc::dimension_error: return "DimensionError";
    }
    return "UnknownError";
}

} // namespace opbound
