#pragma once

#include <utility>

#include "opbound/matrix.hpp"
#include "opbound/report.hpp"

namespace opbound {

/// S = isometry * abs with abs = (S*S)^{1/2} and isometry a partial isometry
/// whose initial space is the range of abs.
struct PolarDecomposition {
    ComplexMatrix isometry; ///< U_S
    ComplexMatrix abs;      ///< |S|
};

/// S = left * isometry * right with left = |S*|^alpha, right = |S|^{1-alpha}
/// (|.|^0 read as the identity).
struct GeneralizedPolarFactors {
    double alpha = 0.0;
    ComplexMatrix left;
    ComplexMatrix isometry;
    ComplexMatrix right;
};

/// Fractional power H^p of a Hermitian PSD matrix; eigenvalues are clamped at
/// zero from below so round-off cannot leak into fractional exponents.
/// Negative p requires strictly positive eigenvalues (NearSingular otherwise).
ComplexMatrix psd_power(const ComplexMatrix& h, double p);

PolarDecomposition polar(const ComplexMatrix& s);

GeneralizedPolarFactors generalized_polar(const ComplexMatrix& s, double alpha);

/// Relative-bound constants (a, b) with ||S f||^2 <= a^2 ||T f||^2 + b^2 ||f||^2:
/// a = ||S T^{-1}||, b = 0 (valid since T is invertible here).
std::pair<double, double> relative_bound_constants(const ComplexMatrix& s, const ComplexMatrix& t);

/// Heinz domination: with (a, 0) from relative_bound_constants, checks
///   || |S|^alpha (a^2 T*T)^{-alpha/2} || <= 1   and its adjoint analogue
///   || |S*|^alpha (a~^2 T T*)^{-alpha/2} || <= 1,  a~ = ||S*(T*)^{-1}||.
/// theorem_id "2.48"; lhs is the larger of the two norms, rhs = 1.
InequalityReport heinz_domination_check(const ComplexMatrix& s, const ComplexMatrix& t, double alpha);

} // namespace opbound
