#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "opbound/matrix.hpp"

namespace opbound {

/// Deterministic random source.  mt19937_64 output is specified bit-exactly
/// by the standard and the mappings below avoid std::*_distribution, whose
/// streams differ between standard libraries; identical seeds therefore give
/// identical matrices on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// uniform in (0, 1]
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.28318530717958647692 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// complex standard normal (unit total variance)
    Complex cnormal() {
        const double re = normal();
        const double im = normal();
        return Complex(re, im) / std::sqrt(2.0);
    }

    std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

enum class MatrixClass { hermitian, posdef, indefinite, sectorial_normal, random };

MatrixClass matrix_class_from_name(const std::string& name);
std::string matrix_class_name(MatrixClass cls);

/// iid complex standard normal entries
ComplexMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction)
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

ComplexMatrix gen_hermitian(Rng& rng, Eigen::Index n);

/// G G* + 0.1 I
ComplexMatrix gen_posdef(Rng& rng, Eigen::Index n);

/// Hermitian with spectrum straddling 0 and a gap of at least 0.1 around 0
ComplexMatrix gen_indefinite(Rng& rng, Eigen::Index n);

/// U diag(r_j e^{i phi_j}) U*, r_j in [0.5, 2], |phi_j| <= omega
ComplexMatrix gen_sectorial_normal(Rng& rng, Eigen::Index n, double omega);

/// Hermitian positive definite with eigenvalues in [r_min, r_max]
/// (log-uniform), unitarily conjugated.  Bounded spectral range keeps a
/// single circular contour accurate for the resolvent quadratures.
ComplexMatrix gen_posdef_ranged(Rng& rng, Eigen::Index n, double r_min, double r_max);

ComplexMatrix generate(MatrixClass cls, Rng& rng, Eigen::Index n, double omega_config = 1.0471975511965977);

} // namespace opbound
