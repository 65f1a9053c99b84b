#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "opbound/matrix.hpp"
#include "opbound/report.hpp"
#include "opbound/schatten.hpp"

namespace opbound {

/// C0^{1-Re z} C1^{Re z}; log-convex in Re z.  NonpositiveBound on C <= 0.
double three_lines_bound(double c0, double c1, Complex z);

/// The harmonic-measure form of the three-lines estimate on the open strip:
///   |phi(z)| <= exp{ sin(pi x)/2 * int [ ln b0(y) / (cosh(pi(y-t)) - cos(pi x))
///                                      + ln b1(y) / (cosh(pi(y-t)) + cos(pi x)) ] dy }
/// with x = Re z, t = Im z; b0 and b1 are the boundary moduli on Re = 0 and
/// Re = 1.  `truncation` is the half-width of the integration window around t.
/// Throws KernelSingular at Re z in {0, 1}.
double three_lines_kernel_bound(const std::function<double(double)>& boundary0,
                                const std::function<double(double)>& boundary1, Complex z,
                                double truncation);

struct KOptimum {
    double k_star = 0.0;
    double min_value = 0.0;
    bool k_unbounded = false; ///< infimum attained only as k -> infinity
};

/// min over k > 0 of a*k + b/k: k* = sqrt(b/a), value 2 sqrt(ab).
/// BothZero when a = b = 0.
KOptimum optimize_k(double quadratic_coeff, double inverse_coeff);

enum class PowerMode { selfadjoint, sectorial };

/// Which line of the three-case constant menu an instance belongs to.
enum class StripCase { neither_positive, one_positive, both_positive };

const char* strip_case_name(StripCase c);

/// T2^{-z} S T1^{-1+z}.  selfadjoint mode uses the branched spectral powers
/// of Hermitian T_j; sectorial mode uses the principal calculus (exact for
/// normal T_j, resolvent quadrature otherwise).
ComplexMatrix conjugated_operator(const ComplexMatrix& s, const ComplexMatrix& t1,
                                  const ComplexMatrix& t2, Complex z, PowerMode mode);

/// The generalized-polar route to the same operator:
///   T2^{-i Im z} [|S*|^{Re z} T2^{-Re z}]* U_S |S|^{1-Re z} T1^{-1+Re z} T1^{i Im z}
/// (with T2* replacing T2 inside the bracket in sectorial mode).  Kept as an
/// independent cross-check of conjugated_operator.
ComplexMatrix conjugated_operator_factored(const ComplexMatrix& s, const ComplexMatrix& t1,
                                           const ComplexMatrix& t2, Complex z, PowerMode mode);

/// ||S|| <= ||T S T^{-1}||^{1/2} ||T S* T^{-1}||^{1/2} * (1 for positive
/// definite T, e^{2 pi} otherwise); T Hermitian invertible.  For positive
/// definite T the report additionally reflects the product-route cross-check
/// ||S||^2 <= ||T S* T^{-1}|| ||T S T^{-1}||.
InequalityReport verify_bounded_similarity(const ComplexMatrix& s, const ComplexMatrix& t);

/// ||T^{-1/2} S T^{-1/2}||_p <= ||S T^{-1}||_p^{1/2} ||S* T^{-1}||_p^{1/2}
/// for positive definite T, including the adjoint identity
/// (T^{-1/2} S T^{-1/2})* = T^{-1/2} S* T^{-1/2} at 1e-12.
InequalityReport verify_sandwich(const ComplexMatrix& s, const ComplexMatrix& t,
                                 SchattenExponent p = SchattenExponent::infinity());

struct StripBoundOptions {
    std::optional<double> k;           ///< damping parameter; omitted = use the optimized constant
    SchattenExponent p = SchattenExponent::infinity();
    PowerMode mode = PowerMode::selfadjoint;
    std::optional<StripCase> expected_case; ///< selfadjoint mode: must match the instance
    double rel_tol_base = 1e-9;        ///< scaled by sqrt(max(1, cond T1, cond T2))
    double bip_s_max = 3.0;            ///< sectorial mode: BIP fitting window
    int bip_samples = 21;
};

/// The unified strip verifier:
///   ||T2^{-z} S T1^{-1+z}||_p <= C * ||S T1^{-1}||_p^{1-Re z} * ||S* T2^{-1}||_p^{Re z}
/// with C drawn from the displayed constant menu.  selfadjoint mode encodes
/// the three-case menu through theta_j = 0 (positive definite) or pi; in
/// sectorial mode (N_j, theta_j) come from bip_fit and the second endpoint
/// uses (T2*)^{-1}.  On the real axis without a supplied k the optimized
/// constant e^{theta_tot sqrt(x(1-x))} is used.
InequalityReport verify_strip_bound(const ComplexMatrix& s, const ComplexMatrix& t1,
                                    const ComplexMatrix& t2, Complex z,
                                    const StripBoundOptions& options = {});

/// Embeds (S, T1, T2) on H1 (+) H2:  bold S = [[0,0],[S,0]], bold T = diag(T1,T2).
/// ||bold S bold T^{-1}|| = ||S T1^{-1}|| and ||bold S* bold T^{-1}|| = ||S* T2^{-1}||
/// in every Schatten norm.
std::pair<ComplexMatrix, ComplexMatrix> block_embed(const ComplexMatrix& s,
                                                    const ComplexMatrix& t1,
                                                    const ComplexMatrix& t2);

/// Table of displayed constant factors, keyed by inequality family:
///   "1.3:general" | "1.3:one-nonneg" | "1.3:both-nonneg"   (k-form, pi-based)
///   "1.4:general" | "1.4:one-nonneg" | "1.4:both-nonneg"   (optimized, real axis)
///   "1.7" (k-form with theta_total) | "1.8" (optimized with theta_total)
///   "1.9" (= 1.7 for trace ideals)  | "1.10" (= 1.8)
/// Aliases: 1.5/2.44/2.56/3.14/3.26 -> 1.3; 1.6/2.45/2.57/3.14a/3.27 -> 1.4;
/// 4.24/4.32/4.36/4.45 -> 1.7; 4.25/4.33/4.37/4.46 -> 1.8;
/// "2.25:general" = e^{2 pi}, "2.25:nonneg" = 1.  N-prefactors are not
/// included; this is the scalar exponential factor only.
double exponent_assembler(const std::string& case_id, Complex z, std::optional<double> k,
                          double theta_total);

} // namespace opbound
