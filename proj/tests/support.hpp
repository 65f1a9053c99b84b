#pragma once

#include <cmath>

#include "opbound/generators.hpp"
#include "opbound/matrix.hpp"

namespace opbound::test {

inline double rel_err(const ComplexMatrix& got, const ComplexMatrix& want) {
    const double scale = std::max(frobenius_norm(want), 1e-300);
    return frobenius_norm(ComplexMatrix(got - want)) / scale;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexMatrix diag(std::initializer_list<Complex> entries) {
    ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
    Eigen::Index i = 0;
    for (Complex e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

constexpr double kPi = 3.14159265358979323846;

} // namespace opbound::test
