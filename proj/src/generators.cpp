#include "symnorm/generators.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace symnorm {

namespace {

Eigen::MatrixXcd ginibre(SeedStream& rng, int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.cgaussian();
    return g;
}

// QR of a Ginibre matrix; multiplying Q by the phases of diag(R) makes the
// distribution Haar rather than merely unitary
Eigen::MatrixXcd haar_unitary(SeedStream& rng, int n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(rng, n, n));
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double mod = std::abs(d);
        q.col(j) *= (mod > 0.0) ? d / mod : Complex(1.0, 0.0);
    }
    return q;
}

} // namespace

ComplexMatrix gen_unitary(SeedStream& rng, int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "gen_unitary: n must be >= 1");
    return ComplexMatrix(haar_unitary(rng, n));
}

ComplexMatrix gen_normal(SeedStream& rng, int n, double spectrum_scale, bool real_spectrum) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "gen_normal: n must be >= 1");
    const Eigen::MatrixXcd u = haar_unitary(rng, n);
    Eigen::VectorXcd lambda(n);
    for (int j = 0; j < n; ++j) {
        if (real_spectrum) {
            lambda(j) = rng.uniform(-spectrum_scale, spectrum_scale);
        } else {
            const double radius = spectrum_scale * std::sqrt(rng.uniform());
            const double angle = 2.0 * std::numbers::pi * rng.uniform();
            lambda(j) = Complex(radius * std::cos(angle), radius * std::sin(angle));
        }
    }
    Eigen::MatrixXcd a = u * lambda.asDiagonal() * u.adjoint();
    if (real_spectrum) a = ((a + a.adjoint()) / 2.0).eval();
    return ComplexMatrix(std::move(a));
}

ComplexMatrix gen_psd(SeedStream& rng, int n, double scale) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "gen_psd: n must be >= 1");
    const Eigen::MatrixXcd u = haar_unitary(rng, n);
    Eigen::VectorXd lambda(n);
    for (int j = 0; j < n; ++j) lambda(j) = scale * rng.uniform();
    if (rng.chance(0.25)) lambda(n - 1) = 0.0; // exercise rank deficiency
    Eigen::MatrixXcd a = u * lambda.asDiagonal() * u.adjoint();
    return ComplexMatrix(((a + a.adjoint()) / 2.0).eval());
}

ComplexMatrix gen_hermitian(SeedStream& rng, int n, double scale) {
    return gen_normal(rng, n, scale, true);
}

ComplexMatrix gen_expansive(SeedStream& rng, int n, double scale) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "gen_expansive: n must be >= 1");
    const Eigen::MatrixXcd u = haar_unitary(rng, n);
    const Eigen::MatrixXcd v = haar_unitary(rng, n);
    Eigen::VectorXd sigma(n);
    for (int j = 0; j < n; ++j) sigma(j) = 1.0 + scale * std::abs(rng.gaussian());
    if (rng.chance(0.25)) sigma(n - 1) = 1.0; // boundary case Z*Z touching I
    return ComplexMatrix((u * sigma.asDiagonal() * v.adjoint()).eval());
}

std::vector<ComplexMatrix> gen_contractive_family(SeedStream& rng, int m, int n, double scale) {
    if (m < 1 || n < 1) fail(ErrorCode::InvalidArgument, "gen_contractive_family: m, n must be >= 1");
    if (!(scale > 0.0) || scale > 1.0)
        fail(ErrorCode::InvalidArgument, "gen_contractive_family: scale must be in (0, 1]");
    const Eigen::MatrixXcd w = haar_unitary(rng, m * n);
    const double s = rng.chance(0.25) ? 1.0 : scale * rng.uniform(0.5, 1.0);
    std::vector<ComplexMatrix> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i)
        out.emplace_back(Eigen::MatrixXcd(s * w.block(i * n, 0, n, n)));
    return out;
}

} // namespace symnorm
