#pragma once

#include <optional>
#include <string>

#include "opbound/matrix.hpp"

namespace opbound {

/// A point of the closed interpolation strip {0 <= Re z <= 1}.
struct StripPoint {
    Complex z;

    explicit StripPoint(Complex value) : z(value) {
        if (!(z.real() >= 0.0 && z.real() <= 1.0))
            fail(errc::bad_strip_point, "Re(z) must lie in [0,1]");
    }
};

/// Outcome of checking one displayed inequality on one instance.
/// pass <=> lhs <= rhs * (1 + rel_tol).
struct InequalityReport {
    std::string theorem_id;
    Complex z{0.0, 0.0};
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_factor = 1.0;
    std::optional<double> k_used;
    double rel_tol = 1e-9;
    bool pass = false;
    double slack = 0.0;
};

inline InequalityReport make_report(std::string theorem_id, Complex z, double lhs, double rhs,
                                    double constant_factor = 1.0,
                                    std::optional<double> k_used = std::nullopt,
                                    double rel_tol = 1e-9) {
    InequalityReport r;
    r.theorem_id = std::move(theorem_id);
    r.z = z;
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant_factor = constant_factor;
    r.k_used = k_used;
    r.rel_tol = rel_tol;
    r.pass = lhs <= rhs * (1.0 + rel_tol);
    r.slack = rhs - lhs;
    return r;
}

} // namespace opbound
