#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "symnorm/decomp.hpp"
#include "symnorm/generators.hpp"

using namespace symnorm;
using std::numbers::sqrt2;

namespace {

double recon_error(const SpectralDecomposition& d, const ComplexMatrix& a) {
    Eigen::VectorXcd lambda(a.dim());
    for (int j = 0; j < a.dim(); ++j) lambda(j) = d.eigenvalues[j];
    return (d.unitary.raw() * lambda.asDiagonal() * d.unitary.raw().adjoint() - a.raw()).norm();
}

double unitary_defect(const ComplexMatrix& u) {
    return (u.raw().adjoint() * u.raw() - Eigen::MatrixXcd::Identity(u.dim(), u.dim())).norm();
}

ComplexMatrix shift3() {
    return ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
}

} // namespace

TEST_CASE("spectral_decompose on fixtures") {
    SUBCASE("real diagonal reorders descending") {
        const auto d = spectral_decompose(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
        CHECK(d.eigenvalues[0] == Complex(3.0, 0.0));
        CHECK(d.eigenvalues[1] == Complex(2.0, 0.0));
        CHECK(d.eigenvalues[2] == Complex(1.0, 0.0));
    }
    SUBCASE("rotation generator has spectrum +-i, +i first") {
        const auto d = spectral_decompose(ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}}));
        CHECK(std::abs(d.eigenvalues[0] - Complex(0.0, 1.0)) < 1e-12);
        CHECK(std::abs(d.eigenvalues[1] - Complex(0.0, -1.0)) < 1e-12);
    }
    SUBCASE("eq2 difference: characteristic polynomial t^2 - 1/2") {
        const ComplexMatrix diff = oracles::eq2_a() - oracles::eq2_b();
        const auto oracle = oracles::eig2_hermitian(0.5, Complex(-0.5), -0.5);
        CHECK(oracle[0] == doctest::Approx(sqrt2 / 2.0).epsilon(1e-14));
        const auto d = spectral_decompose(diff);
        CHECK(d.eigenvalues[0].real() == doctest::Approx(oracle[0]).epsilon(1e-12));
        CHECK(d.eigenvalues[1].real() == doctest::Approx(oracle[1]).epsilon(1e-12));
    }
    SUBCASE("non-normal input is a precondition error carrying the defect") {
        try {
            spectral_decompose(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
            FAIL("expected a precondition error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Precondition);
            CHECK(std::string(e.what()).find("defect") != std::string::npos);
        }
    }
}

TEST_CASE("spectral_decompose invariants on random normal matrices") {
    SeedStream rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(8));
        const ComplexMatrix a = gen_normal(rng, n, 2.0);
        const auto d = spectral_decompose(a);
        CHECK(unitary_defect(d.unitary) <= kUnitaryTol * n);
        CHECK(recon_error(d, a) <= kReconTol * std::max(1.0, a.frobenius()));
        for (int j = 0; j + 1 < n; ++j)
            CHECK(std::abs(d.eigenvalues[j]) >= std::abs(d.eigenvalues[j + 1]) - 1e-12);
    }
    // repeated eigenvalues: scalar matrices and clustered spectra
    const auto scalar = spectral_decompose(ComplexMatrix::identity(5) * Complex(1.0, 2.0));
    for (const auto& v : scalar.eigenvalues) CHECK(std::abs(v - Complex(1.0, 2.0)) < 1e-12);
}

TEST_CASE("singular_values") {
    SUBCASE("3x3 shift: Z*Z = diag(0,1,1)") {
        const auto sv = singular_values(shift3());
        CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sv[2] == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("eq2 |A|+|B|: trace 2, det 1/2 quadratic oracle") {
        const ComplexMatrix sum = matrix_abs(oracles::eq2_a()) + matrix_abs(oracles::eq2_b());
        const auto oracle = oracles::eig2_hermitian(1.5, Complex(0.5), 0.5);
        CHECK(oracle[0] == doctest::Approx(1.0 + sqrt2 / 2.0).epsilon(1e-14));
        CHECK(oracle[1] == doctest::Approx(1.0 - sqrt2 / 2.0).epsilon(1e-14));
        const auto sv = singular_values(sum);
        CHECK(sv[0] == doctest::Approx(oracle[0]).epsilon(1e-12));
        CHECK(sv[1] == doctest::Approx(oracle[1]).epsilon(1e-12));
    }
    SUBCASE("zero matrix") {
        for (double s : singular_values(ComplexMatrix(4))) CHECK(s == 0.0);
    }
}

TEST_CASE("matrix_abs") {
    const ComplexMatrix h = ComplexMatrix::diagonal({2.0, -3.0});
    const ComplexMatrix abs_h = matrix_abs(h);
    CHECK(abs_h(0, 0).real() == doctest::Approx(2.0));
    CHECK(abs_h(1, 1).real() == doctest::Approx(3.0));

    SeedStream rng(7);
    const ComplexMatrix p = gen_psd(rng, 4, 2.0);
    CHECK((matrix_abs(p).raw() - p.raw()).norm() <= kReconTol * std::max(1.0, p.frobenius()));

    const ComplexMatrix abs_shift = matrix_abs(shift3());
    CHECK(abs_shift(0, 0).real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(abs_shift(1, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(abs_shift(2, 2).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("apply_fn_abs") {
    SUBCASE("identity function gives |A|") {
        SeedStream rng(9);
        const ComplexMatrix a = gen_normal(rng, 3, 1.5);
        const ComplexMatrix via_fn = apply_fn_abs([](double t) { return t; }, a);
        CHECK((via_fn.raw() - matrix_abs(a).raw()).norm() < 1e-12);
    }
    SUBCASE("mincap caps both singular values of the eq2 difference") {
        const ComplexMatrix diff = oracles::eq2_a() - oracles::eq2_b();
        const ComplexMatrix capped =
            apply_fn_abs([](double t) { return std::min(t, sqrt2 / 2.0); }, diff);
        CHECK(capped.trace().real() == doctest::Approx(sqrt2).epsilon(1e-12));
        const auto sv = singular_values(capped);
        CHECK(sv[0] == doctest::Approx(sqrt2 / 2.0).epsilon(1e-12));
        CHECK(sv[1] == doctest::Approx(sqrt2 / 2.0).epsilon(1e-12));
    }
    SUBCASE("square root of diag(4, 9)") {
        const ComplexMatrix r =
            apply_fn_abs([](double t) { return std::sqrt(t); }, ComplexMatrix::diagonal({4.0, 9.0}));
        CHECK(r(0, 0).real() == doctest::Approx(2.0));
        CHECK(r(1, 1).real() == doctest::Approx(3.0));
    }
    SUBCASE("non-finite function value is a domain error") {
        CHECK_THROWS_AS(
            apply_fn_abs([](double) { return std::nan(""); }, ComplexMatrix::identity(2)), Error);
    }
}

TEST_CASE("pos_neg_parts") {
    SUBCASE("diagonal split") {
        const auto [pos, neg] = pos_neg_parts(ComplexMatrix::diagonal({2.0, -3.0}));
        CHECK(pos(0, 0).real() == doctest::Approx(2.0));
        CHECK(pos(1, 1).real() == doctest::Approx(0.0));
        CHECK(neg(0, 0).real() == doctest::Approx(0.0));
        CHECK(neg(1, 1).real() == doctest::Approx(3.0));
    }
    SUBCASE("PSD input keeps everything in the positive part") {
        SeedStream rng(11);
        const ComplexMatrix p = gen_psd(rng, 3);
        const auto [pos, neg] = pos_neg_parts(p);
        CHECK((pos.raw() - p.raw()).norm() < 1e-10);
        CHECK(neg.frobenius() < 1e-10);
    }
    SUBCASE("path-graph spectrum sqrt(2), 0, -sqrt(2)") {
        const ComplexMatrix z = shift3();
        const ComplexMatrix h = z + z.adjoint();
        const auto oracle = oracles::eig3_hermitian(h);
        CHECK(oracle[0] == doctest::Approx(sqrt2).epsilon(1e-12));
        CHECK(oracle[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(oracle[2] == doctest::Approx(-sqrt2).epsilon(1e-12));
        const auto [pos, neg] = pos_neg_parts(h);
        const auto sv_pos = singular_values(pos);
        const auto sv_neg = singular_values(neg);
        CHECK(sv_pos[0] == doctest::Approx(sqrt2).epsilon(1e-12));
        CHECK(sv_pos[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(sv_neg[0] == doctest::Approx(sqrt2).epsilon(1e-12));
        CHECK(sv_neg[1] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("non-Hermitian input is rejected") {
        CHECK_THROWS_AS(pos_neg_parts(shift3()), Error);
    }
    SUBCASE("random Hermitian: reconstruction and orthogonality") {
        SeedStream rng(13);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng.index(6));
            const ComplexMatrix h = gen_hermitian(rng, n, 2.0);
            const auto [pos, neg] = pos_neg_parts(h);
            CHECK((h.raw() - (pos.raw() - neg.raw())).norm() < 1e-10 * std::max(1.0, h.frobenius()));
            CHECK((pos.raw() * neg.raw()).norm() < 1e-9 * std::max(1.0, h.frobenius()));
            CHECK(is_psd(pos, 1e-9));
            CHECK(is_psd(neg, 1e-9));
        }
    }
}

TEST_CASE("hermitian_dilation") {
    const ComplexMatrix one = ComplexMatrix::from_rows({{1.0}});
    const ComplexMatrix d = hermitian_dilation(one);
    CHECK(d(0, 1) == Complex(1.0, 0.0));
    CHECK(d(1, 0) == Complex(1.0, 0.0));
    const auto sv = singular_values(d);
    CHECK(sv[0] == doctest::Approx(1.0));
    CHECK(sv[1] == doctest::Approx(1.0));

    CHECK(hermitian_dilation(ComplexMatrix(2)).frobenius() == 0.0);

    const auto sv4 = singular_values(hermitian_dilation(ComplexMatrix::diagonal({2.0, 1.0})));
    CHECK(sv4[0] == doctest::Approx(2.0));
    CHECK(sv4[1] == doctest::Approx(2.0));
    CHECK(sv4[2] == doctest::Approx(1.0));
    CHECK(sv4[3] == doctest::Approx(1.0));

    // doubling property on random input
    SeedStream rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(5));
        Eigen::MatrixXcd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
        const ComplexMatrix a{std::move(g)};
        CHECK(is_hermitian(hermitian_dilation(a)));
        const auto small = singular_values(a);
        const auto big = singular_values(hermitian_dilation(a));
        for (int j = 0; j < n; ++j) {
            CHECK(big[2 * j] == doctest::Approx(small[j]).epsilon(1e-10));
            CHECK(big[2 * j + 1] == doctest::Approx(small[j]).epsilon(1e-10));
        }
    }
}

TEST_CASE("direct_sum merges singular values") {
    const ComplexMatrix d = direct_sum(ComplexMatrix::diagonal({1.0}), ComplexMatrix::diagonal({2.0}));
    CHECK(d.dim() == 2);
    CHECK(d(0, 0).real() == doctest::Approx(1.0));
    CHECK(d(1, 1).real() == doctest::Approx(2.0));

    SeedStream rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(4));
        const int m = 1 + static_cast<int>(rng.index(4));
        const ComplexMatrix a = gen_normal(rng, n, 2.0);
        const ComplexMatrix b = gen_normal(rng, m, 2.0);
        auto merged = singular_values(a);
        const auto sb = singular_values(b);
        merged.insert(merged.end(), sb.begin(), sb.end());
        std::sort(merged.begin(), merged.end(), std::greater<>());
        const auto sv = singular_values(direct_sum(a, b));
        for (std::size_t j = 0; j < merged.size(); ++j)
            CHECK(sv[j] == doctest::Approx(merged[j]).epsilon(1e-10));
    }
}

TEST_CASE("polar_factors") {
    SUBCASE("unitary input: left factor is the identity") {
        SeedStream rng(23);
        const ComplexMatrix u = gen_unitary(rng, 3);
        const auto [abs_star, w] = polar_factors(u, PolarSide::Left);
        CHECK((abs_star.raw() - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-10);
        CHECK((w.raw() - u.raw()).norm() < 1e-10);
    }
    SUBCASE("PSD input: left factor is the matrix itself") {
        SeedStream rng(29);
        const ComplexMatrix p = gen_psd(rng, 3);
        const auto [abs_star, w] = polar_factors(p, PolarSide::Left);
        CHECK((abs_star.raw() - p.raw()).norm() < 1e-9);
    }
    SUBCASE("singular matrix completes the unitary factor") {
        const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}});
        const auto [w, abs_a] = polar_factors(a, PolarSide::Right);
        CHECK(abs_a(0, 0).real() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(abs_a(1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));
        CHECK((w.raw().adjoint() * w.raw() - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);
        CHECK((w.raw() * abs_a.raw() - a.raw()).norm() < 1e-12);
    }
    SUBCASE("reconstruction on random input, both sides") {
        SeedStream rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng.index(6));
            Eigen::MatrixXcd g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
            if (rng.chance(0.3)) g.col(0).setZero(); // singular case
            const ComplexMatrix a{std::move(g)};
            const double tol = kReconTol * std::max(1.0, a.frobenius());
            const auto [abs_star, w_left] = polar_factors(a, PolarSide::Left);
            CHECK((abs_star.raw() * w_left.raw() - a.raw()).norm() <= tol);
            CHECK(is_psd(abs_star, 1e-9));
            const auto [w_right, abs_a] = polar_factors(a, PolarSide::Right);
            CHECK((w_right.raw() * abs_a.raw() - a.raw()).norm() <= tol);
            CHECK(is_psd(abs_a, 1e-9));
        }
    }
}

TEST_CASE("abs preserves singular values; calculus commutes for normal operands") {
    SeedStream rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(6));
        const ComplexMatrix a = gen_normal(rng, n, 2.0);
        const auto sv_a = singular_values(a);
        const auto sv_abs = singular_values(matrix_abs(a));
        for (int j = 0; j < n; ++j)
            CHECK(sv_abs[j] == doctest::Approx(sv_a[j]).epsilon(1e-10));

        const ComplexMatrix f_a = apply_fn_abs([](double t) { return std::sqrt(t); }, a);
        const Eigen::MatrixXcd gram = a.raw() * a.raw().adjoint();
        const double scale = std::max(1.0, a.frobenius());
        CHECK((f_a.raw() * gram - gram * f_a.raw()).norm() <= 1e-9 * scale * scale);
    }
}

TEST_CASE("positive-negative split identity f(|H|) = f(H+) + f(H-) for f(0) = 0") {
    SeedStream rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.index(6));
        const ComplexMatrix h = gen_hermitian(rng, n, 2.0);
        const auto [pos, neg] = pos_neg_parts(h);
        const RealFn f = [](double t) { return std::sqrt(t); };
        const ComplexMatrix lhs = apply_fn_abs(f, h);
        const ComplexMatrix rhs = apply_fn_abs(f, pos) + apply_fn_abs(f, neg);
        CHECK((lhs.raw() - rhs.raw()).norm() <= 1e-10 * std::max(1.0, h.frobenius()));
    }
}
