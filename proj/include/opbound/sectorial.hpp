#pragma once

#include <map>
#include <vector>

#include "opbound/matrix.hpp"
#include "opbound/report.hpp"

namespace opbound {

/// Open sector of half-opening angle omega around the positive real axis;
/// omega = 0 degenerates to (0, inf).
struct Sector {
    double omega;

    explicit Sector(double angle) : omega(angle) {
        if (!(omega >= 0.0 && omega < 3.14159265358979323846))
            fail(errc::bad_strip_point, "sector half-angle must lie in [0, pi)");
    }

    bool contains(Complex zeta) const;         ///< open-sector membership
    bool closure_contains(Complex zeta) const; ///< |arg| <= omega (0 included? no: zeta != 0)
};

struct ResolventSample {
    Complex zeta;
    double norm; ///< ||zeta (T - zeta)^{-1}||
};

struct SectorialProfile {
    ComplexVector spectrum;
    double omega_min_spectral = 0.0; ///< max |arg lambda|
    std::vector<ResolventSample> resolvent_samples;
    std::map<double, double> resolvent_sup_per_angle; ///< probe angle -> sampled sup
    double omega_estimate = 0.0;
    bool spectral_exact = false; ///< true when T is normal and the estimate is max |arg|
};

/// Fitted constants of ||T^{is}|| <= N e^{theta |s|}.
struct BipEstimate {
    double n_constant = 1.0;
    double theta = 0.0;
    std::vector<std::pair<double, double>> sample_points; ///< (s, ||T^{is}||)
    double max_residual = 0.0; ///< max over samples of ||T^{is}|| / (N e^{theta|s|}) - 1
};

/// Circle center + radius*e^{i phi}; must enclose the spectrum and stay away
/// from the branch cut (center - radius > 0).
struct ContourSpec {
    double center;
    double radius;
    int nodes;
};

struct SectorialAngle {
    double omega = 0.0;
    bool spectral_exact = false;
};

ComplexVector spectrum_of(const ComplexMatrix& t);
bool is_normal(const ComplexMatrix& t, double tol = 1e-10);

/// f(T) = Q diag(lambda^z) Q* for normal T via the (unitary) Schur form,
/// principal branch.  Throws NotNormal / NegativeRealSpectrum.
ComplexMatrix normal_power(const ComplexMatrix& t, Complex z);

/// Checks sigma(T) against the closed sector and samples ||zeta (T-zeta)^{-1}||
/// on rays just outside probe angles, radii log-spaced over [1e-3, 1e3]*||T||.
SectorialProfile sector_membership(const ComplexMatrix& t, Sector omega, int sample_count,
                                   std::uint64_t seed);

/// Angle of sectoriality: exact (max |arg lambda|) for normal T, a sampled
/// bisection estimate otherwise (advisory, flagged via spectral_exact=false).
SectorialAngle sectoriality_angle(const ComplexMatrix& t);

/// Circle enclosing the spectrum with ~10% radial margin while keeping
/// center - radius >= half the smallest eigenvalue modulus.
ContourSpec suggest_contour(const ComplexMatrix& t, int nodes = 128);

/// T^{-z} for Re z > 0 by trapezoidal quadrature of the clockwise Dunford
/// contour integral with the principal branch of zeta^{-z}.
ComplexMatrix dunford_power(const ComplexMatrix& t, Complex z, const ContourSpec& contour);

/// T^{is} through the half-line integral
///   sin(pi i s)/(pi i s) * int_0^inf t^{is} (T + t)^{-2} T dt
/// under t = e^u, composite Gauss-Legendre on the truncated log-axis.
/// Node doubling must settle to 1e-7 within a budget of 4096 nodes
/// (QuadratureNotConverged otherwise).  s = 0 returns the identity.
ComplexMatrix imaginary_power(const ComplexMatrix& t, double s, int quadrature_nodes = 400);

/// Samples ||T^{is}|| on a symmetric grid and fits the envelope constants:
/// theta from the steepest same-side pair slope, N = max ||T^{is}|| e^{-theta|s|}
/// floored at 1.  Normal T uses the exact eigen-calculus for the samples,
/// non-normal T the integral quadrature.
BipEstimate bip_fit(const ComplexMatrix& t, double s_max, int sample_count);

/// theta_T = omega_T for normal sectorial T: compares the fitted group type
/// against the spectral angle at tolerance 1e-5 + 1e-3 * omega.
InequalityReport mcintosh_check(const ComplexMatrix& t);

/// T^w for Re(w) <= 0 on sectorial T: exact calculus for normal T, otherwise
/// Dunford quadrature (Re w < 0) or the half-line integral (Re w = 0).
ComplexMatrix sectorial_power(const ComplexMatrix& t, Complex w);

} // namespace opbound
