#pragma once

#include <stdexcept>
#include <string>

namespace opbound {

/// Failure categories used across the library. Each maps 1:1 to a documented
/// error condition of some operation.
enum class errc {
    not_hermitian,
    no_convergence,
    singular,
    zero_base,
    near_singular,
    bad_alpha,
    bad_exponent,
    bad_strip_point,
    boundary_violation,
    nonpositive_bound,
    kernel_singular,
    both_zero,
    unknown_case,
    dimension_mismatch,
    mode_mismatch,
    spectrum_outside_sector,
    negative_real_spectrum,
    contour_touches_spectrum,
    branch_cut_crossed,
    quadrature_not_converged,
    not_normal,
    not_positive_definite,
    parse_error,
    dimension_error,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace opbound
