#pragma once

#include <functional>
#include <vector>

#include "opbound/generators.hpp"
#include "opbound/matrix.hpp"
#include "opbound/report.hpp"

namespace opbound {

/// Schatten index p in [1, inf]; p = inf denotes the operator norm.
struct SchattenExponent {
    double p;

    explicit SchattenExponent(double value) : p(value) {
        if (!(value >= 1.0))
            fail(errc::bad_exponent, "Schatten exponent must satisfy p >= 1");
    }

    static SchattenExponent infinity() {
        return SchattenExponent(std::numeric_limits<double>::infinity());
    }
    bool is_infinite() const { return std::isinf(p); }
};

/// l^p norm of the singular values.
double schatten_norm(const ComplexMatrix& a, SchattenExponent p);
double schatten_norm_of_singular_values(const RealVector& sigma, SchattenExponent p);

/// p' with 1/p + 1/p' = 1 (1 <-> inf).
SchattenExponent conjugate_exponent(SchattenExponent p);

/// 1/p_z = (1 - Re z)/p0 + Re z/p1.
SchattenExponent interpolation_exponent(SchattenExponent p0, SchattenExponent p1, Complex z);

struct TraceDualityEstimate {
    double lower_bound = 0.0;     ///< best |tr(B F)| over all witnesses tried
    ComplexMatrix witness;        ///< the duality-optimal witness, ||F||_{p'} = 1
    double best_random = 0.0;     ///< best value among the random probes alone
};

/// Realizes the trace-duality supremum sup |tr(B F)| over ||F||_{p'} = 1:
/// the SVD-built optimal witness attains ||B||_p, and `trials` seeded random
/// witnesses act as falsification probes (none may exceed the norm).
TraceDualityEstimate trace_duality_estimate(const ComplexMatrix& b, SchattenExponent p,
                                            int trials, std::uint64_t seed);

/// An analytic operator family on the closed strip.  Analyticity and the
/// strip growth condition are contracts asserted by the caller; the evaluator
/// must be deterministic and safe to call concurrently.
struct StripFamily {
    std::function<ComplexMatrix(Complex)> evaluator;
};

/// Checks the interpolation bound ||A(z)||_{p_z} <= C0^{1-Re z} C1^{Re z}
/// on every grid point, after re-sampling the boundary bounds (C0 on Re z = 0
/// with p0, C1 on Re z = 1 with p1).  Throws BoundaryViolation when a sampled
/// boundary point already breaks its bound: that indicts the caller's
/// constants, not the theorem.
std::vector<InequalityReport> verify_gk_interpolation(const StripFamily& family,
                                                      SchattenExponent p0, SchattenExponent p1,
                                                      double c0, double c1,
                                                      const std::vector<Complex>& grid);

} // namespace opbound
