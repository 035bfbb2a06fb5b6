#ifndef SYMNORM_TESTS_ORACLES_HPP
#define SYMNORM_TESTS_ORACLES_HPP

// Closed-form spectral oracles for the fixture values.  These never call the
// library's decomposition path: 2x2 goes through the quadratic formula, 3x3
// through the trigonometric solution of the characteristic cubic, singular
// values through the Gram matrix.  Eigenvalues come back descending.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "symnorm/matrix.hpp"

namespace oracles {

using symnorm::Complex;
using symnorm::ComplexMatrix;

// Hermitian [[a, b], [conj(b), d]] with a, d real
inline std::array<double, 2> eig2_hermitian(double a, Complex b, double d) {
    const double mean = (a + d) / 2.0;
    const double disc = std::sqrt((a - d) * (a - d) / 4.0 + std::norm(b));
    return {mean + disc, mean - disc};
}

// Hermitian 3x3 via the trigonometric form of the characteristic cubic
inline std::array<double, 3> eig3_hermitian(const ComplexMatrix& h) {
    const double q = h.trace().real() / 3.0;
    const double p1 = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
    const double p2 = (h(0, 0).real() - q) * (h(0, 0).real() - q) +
                      (h(1, 1).real() - q) * (h(1, 1).real() - q) +
                      (h(2, 2).real() - q) * (h(2, 2).real() - q) + 2.0 * p1;
    if (p2 <= 0.0) return {q, q, q};
    const double p = std::sqrt(p2 / 6.0);
    Eigen::Matrix3cd b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = (h(i, j) - (i == j ? Complex(q) : Complex(0))) / p;
    double r = b.determinant().real() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> out{e1, e2, e3};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// singular values of a 2x2 complex matrix through the Gram matrix A*A
inline std::array<double, 2> sv2(const ComplexMatrix& a) {
    const Eigen::Matrix2cd g = a.raw().adjoint() * a.raw();
    const auto eig = eig2_hermitian(g(0, 0).real(), g(0, 1), g(1, 1).real());
    return {std::sqrt(std::max(0.0, eig[0])), std::sqrt(std::max(0.0, eig[1]))};
}

inline std::array<double, 3> sv3(const ComplexMatrix& a) {
    const Eigen::Matrix3cd g = a.raw().adjoint() * a.raw();
    ComplexMatrix gram{Eigen::MatrixXcd(g)};
    auto eig = eig3_hermitian(gram);
    return {std::sqrt(std::max(0.0, eig[0])), std::sqrt(std::max(0.0, eig[1])),
            std::sqrt(std::max(0.0, eig[2]))};
}

// Ky Fan k from any descending value list
template <typename Seq>
double ky_fan_list(const Seq& values, int k) {
    double sum = 0.0;
    int count = 0;
    for (double v : values) {
        if (count++ == k) break;
        sum += v;
    }
    return sum;
}

// the pair behind the eq2 fixture
inline ComplexMatrix eq2_a() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}); }
inline ComplexMatrix eq2_b() { return ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}); }

} // namespace oracles

#endif
