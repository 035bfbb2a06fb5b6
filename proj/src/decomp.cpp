#include "symnorm/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "symnorm/rng.hpp"

namespace symnorm {

namespace {

// Eigen returns ascending eigenvalues; all public orderings here are descending
HermitianEigen eig_descending(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::Internal, "Hermitian eigendecomposition did not converge");
    const int n = static_cast<int>(h.rows());
    HermitianEigen out{ComplexMatrix(Eigen::MatrixXcd(n, n)), std::vector<double>(n)};
    Eigen::MatrixXcd u(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = solver.eigenvalues()(n - 1 - j);
        u.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    out.unitary = ComplexMatrix(std::move(u));
    return out;
}

// Singular values at rounding level are snapped to exact zero.  Functions like
// sqrt or small powers are not Lipschitz at 0 and would otherwise turn 1e-16
// noise on an exactly singular operand into 1e-8 disagreements between
// algebraically equal routes.
void clamp_sigma(std::vector<double>& sigma) {
    if (sigma.empty()) return;
    const double cutoff = 1e-13 * sigma.front();
    for (double& s : sigma)
        if (s < cutoff) s = 0.0;
}

} // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& h, double tol) {
    require_finite(h, "eig_hermitian");
    if (!is_hermitian(h, tol))
        fail(ErrorCode::Precondition,
             "eig_hermitian: matrix is not Hermitian (defect " + std::to_string(hermitian_defect(h)) +
                 ")");
    return eig_descending(h.raw());
}

Svd svd(const ComplexMatrix& a) {
    require_finite(a, "svd");
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(a.raw(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const int n = a.dim();
    Svd out{ComplexMatrix(Eigen::MatrixXcd(solver.matrixU())),
            ComplexMatrix(Eigen::MatrixXcd(solver.matrixV())), std::vector<double>(n)};
    for (int j = 0; j < n; ++j) out.sigma[j] = std::max(0.0, solver.singularValues()(j));
    clamp_sigma(out.sigma);
    return out;
}

SingularValueList singular_values(const ComplexMatrix& a) {
    require_finite(a, "singular_values");
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(a.raw());
    SingularValueList out(a.dim());
    for (int j = 0; j < a.dim(); ++j) out[j] = std::max(0.0, solver.singularValues()(j));
    clamp_sigma(out);
    return out;
}

SpectralDecomposition spectral_decompose(const ComplexMatrix& a, double tol) {
    require_finite(a, "spectral_decompose");
    if (!is_normal(a, tol))
        fail(ErrorCode::Precondition,
             "spectral_decompose: matrix is not normal (defect " +
                 std::to_string(normality_defect(a)) + ")");

    const int n = a.dim();
    const Eigen::MatrixXcd h = (a.raw() + a.raw().adjoint()) / 2.0;
    const Eigen::MatrixXcd k = (a.raw() - a.raw().adjoint()) / Complex(0.0, 2.0);
    const double scale = std::max(1.0, a.frobenius());

    // H and K are commuting Hermitian matrices; a generic real combination
    // cos(t) H + sin(t) K separates all joint eigenspaces, and its eigenbasis
    // then diagonalizes both.  A handful of fixed angles plus angles hashed
    // from the entries covers the degenerate combinations deterministically.
    std::vector<double> angles = {0.6132471};
    {
        const double more[] = {1.0932703, 0.2419935, 1.3399864, 0.8812113, 0.4046677, 1.4808615};
        angles.insert(angles.end(), std::begin(more), std::end(more));
        std::uint64_t hash = 0x243F6A8885A308D3ULL;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                hash = SeedStream::mix(hash ^ std::bit_cast<std::uint64_t>(a(i, j).real()));
                hash = SeedStream::mix(hash ^ std::bit_cast<std::uint64_t>(a(i, j).imag()));
            }
        SeedStream extra(hash);
        for (int i = 0; i < 4; ++i) angles.push_back(extra.uniform(0.05, 1.5));
    }

    Eigen::MatrixXcd best_u;
    std::vector<Complex> best_vals;
    double best_err = std::numeric_limits<double>::infinity();
    for (double theta : angles) {
        const Eigen::MatrixXcd m = std::cos(theta) * h + std::sin(theta) * k;
        HermitianEigen eh = eig_descending(m);
        const Eigen::MatrixXcd& u = eh.unitary.raw();
        const Eigen::MatrixXcd dh = u.adjoint() * h * u;
        const Eigen::MatrixXcd dk = u.adjoint() * k * u;
        std::vector<Complex> vals(n);
        Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(n, n);
        for (int j = 0; j < n; ++j) vals[j] = Complex(dh(j, j).real(), dk(j, j).real());
        Eigen::VectorXcd diag(n);
        for (int j = 0; j < n; ++j) diag(j) = vals[j];
        recon = u * diag.asDiagonal() * u.adjoint();
        const double err = (recon - a.raw()).norm();
        if (err < best_err) {
            best_err = err;
            best_u = u;
            best_vals = std::move(vals);
        }
        if (best_err <= 1e-12 * scale) break;
    }
    if (best_err > kReconTol * scale)
        fail(ErrorCode::Internal,
             "spectral_decompose: no separating combination found (residual " +
                 std::to_string(best_err) + ")");

    // descending modulus, ties by descending real part then imaginary part
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const Complex& lx = best_vals[x];
        const Complex& ly = best_vals[y];
        const double mx = std::abs(lx), my = std::abs(ly);
        if (mx != my) return mx > my;
        if (lx.real() != ly.real()) return lx.real() > ly.real();
        return lx.imag() > ly.imag();
    });
    Eigen::MatrixXcd u_sorted(n, n);
    std::vector<Complex> vals_sorted(n);
    for (int j = 0; j < n; ++j) {
        u_sorted.col(j) = best_u.col(order[j]);
        vals_sorted[j] = best_vals[order[j]];
    }
    return SpectralDecomposition{ComplexMatrix(std::move(u_sorted)), std::move(vals_sorted)};
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
    Svd s = svd(a);
    Eigen::VectorXd d(a.dim());
    for (int j = 0; j < a.dim(); ++j) d(j) = s.sigma[j];
    return ComplexMatrix(
        Eigen::MatrixXcd(s.v.raw() * d.asDiagonal() * s.v.raw().adjoint()));
}

ComplexMatrix apply_fn_abs(const RealFn& f, const ComplexMatrix& a) {
    Svd s = svd(a);
    Eigen::VectorXd d(a.dim());
    for (int j = 0; j < a.dim(); ++j) {
        const double v = f(s.sigma[j]);
        if (!std::isfinite(v))
            fail(ErrorCode::Domain, "apply_fn_abs: function not finite at singular value " +
                                        std::to_string(s.sigma[j]));
        d(j) = v;
    }
    return ComplexMatrix(
        Eigen::MatrixXcd(s.v.raw() * d.asDiagonal() * s.v.raw().adjoint()));
}

std::pair<ComplexMatrix, ComplexMatrix> pos_neg_parts(const ComplexMatrix& h, double tol) {
    if (!is_hermitian(h, tol))
        fail(ErrorCode::Precondition, "pos_neg_parts: matrix is not Hermitian (defect " +
                                          std::to_string(hermitian_defect(h)) + ")");
    HermitianEigen eh = eig_descending(((h.raw() + h.raw().adjoint()) / 2.0).eval());
    const int n = h.dim();
    Eigen::VectorXd pos(n), neg(n);
    for (int j = 0; j < n; ++j) {
        pos(j) = std::max(0.0, eh.eigenvalues[j]);
        neg(j) = std::max(0.0, -eh.eigenvalues[j]);
    }
    const Eigen::MatrixXcd& u = eh.unitary.raw();
    return {ComplexMatrix(Eigen::MatrixXcd(u * pos.asDiagonal() * u.adjoint())),
            ComplexMatrix(Eigen::MatrixXcd(u * neg.asDiagonal() * u.adjoint()))};
}

ComplexMatrix hermitian_dilation(const ComplexMatrix& a) {
    const int n = a.dim();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    d.block(0, n, n, n) = a.raw().adjoint();
    d.block(n, 0, n, n) = a.raw();
    return ComplexMatrix(std::move(d));
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim(), m = b.dim();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n + m, n + m);
    d.topLeftCorner(n, n) = a.raw();
    d.bottomRightCorner(m, m) = b.raw();
    return ComplexMatrix(std::move(d));
}

std::pair<ComplexMatrix, ComplexMatrix> polar_factors(const ComplexMatrix& a, PolarSide side) {
    Svd s = svd(a);
    const int n = a.dim();
    Eigen::VectorXd d(n);
    for (int j = 0; j < n; ++j) d(j) = s.sigma[j];
    const Eigen::MatrixXcd w = s.u.raw() * s.v.raw().adjoint(); // unitary factor
    if (side == PolarSide::Left) {
        // |A*| = U sigma U*
        Eigen::MatrixXcd abs_star = s.u.raw() * d.asDiagonal() * s.u.raw().adjoint();
        return {ComplexMatrix(std::move(abs_star)), ComplexMatrix(Eigen::MatrixXcd(w))};
    }
    Eigen::MatrixXcd abs_a = s.v.raw() * d.asDiagonal() * s.v.raw().adjoint();
    return {ComplexMatrix(Eigen::MatrixXcd(w)), ComplexMatrix(std::move(abs_a))};
}

// ---- predicates that need a spectrum ---------------------------------------

bool is_psd(const ComplexMatrix& a, double tol) {
    require_finite(a, "is_psd");
    if (!is_hermitian(a, tol)) return false;
    HermitianEigen eh = eig_descending(((a.raw() + a.raw().adjoint()) / 2.0).eval());
    const double top = std::max(std::abs(eh.eigenvalues.front()), std::abs(eh.eigenvalues.back()));
    return eh.eigenvalues.back() >= -tol * std::max(1.0, top);
}

bool is_expansive(const ComplexMatrix& z, double tol) {
    require_finite(z, "is_expansive");
    const Eigen::MatrixXcd g =
        z.raw().adjoint() * z.raw() - Eigen::MatrixXcd::Identity(z.dim(), z.dim());
    HermitianEigen eh = eig_descending(((g + g.adjoint()) / 2.0).eval());
    return eh.eigenvalues.back() >= -tol;
}

bool is_contractive_family(std::span<const ComplexMatrix> zs, double tol) {
    if (zs.empty()) fail(ErrorCode::InvalidArgument, "is_contractive_family: empty family");
    const int n = zs.front().dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& z : zs) {
        require_finite(z, "is_contractive_family");
        if (z.dim() != n)
            fail(ErrorCode::InvalidArgument, "is_contractive_family: dimension mismatch");
        sum += z.raw().adjoint() * z.raw();
    }
    HermitianEigen eh = eig_descending(((sum + sum.adjoint()) / 2.0).eval());
    return eh.eigenvalues.front() <= 1.0 + tol;
}

} // namespace symnorm
