#pragma once

#include "opbound/matrix.hpp"
#include "opbound/report.hpp"

namespace opbound {

/// lambda^z for real lambda != 0.
///
/// For lambda > 0 this is the principal power exp(z ln lambda).  For
/// lambda < 0 the branch is fixed by placing the argument at +pi:
/// lambda^z = exp(z (ln|lambda| + i pi)), so |lambda^z| =
/// |lambda|^{Re z} e^{-pi Im z}.  Throws ZeroBase at lambda = 0.
Complex scalar_power(double lambda, Complex z);

/// T^z of a self-adjoint invertible matrix through its spectrum:
/// V diag(lambda_j^z) V*.  Requires |lambda|_min >= 1e-10 |lambda|_max
/// (NearSingular otherwise).
ComplexMatrix power_selfadjoint(const HermitianSpectrum& spec, Complex z);

/// Verifies ||T^{iy}|| <= max(1, e^{-pi y}) and, for positive definite T,
/// that T^{iy} is unitary.  theorem_id is "2.23" ("2.24" when the unitarity
/// branch applies).
InequalityReport imaginary_power_bound_check(const HermitianSpectrum& spec, double y);

} // namespace opbound
