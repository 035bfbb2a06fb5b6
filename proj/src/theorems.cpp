#include "symnorm/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

namespace symnorm {

using ordered_json = nlohmann::ordered_json;

std::string CheckResult::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["dim"] = dim;
    ordered_json rows = ordered_json::array();
    for (const auto& r : per_k) {
        ordered_json row;
        row["k"] = r.k;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["margin"] = r.margin;
        rows.push_back(std::move(row));
    }
    j["per_k"] = std::move(rows);
    j["holds"] = holds;
    if (strict_violation_at)
        j["strict_violation_at"] = *strict_violation_at;
    else
        j["strict_violation_at"] = nullptr;
    j["skipped"] = skipped;
    j["metadata"] = ordered_json::parse(metadata_json);
    return j.dump();
}

const PerK* CheckResult::row(int k) const {
    for (const auto& r : per_k)
        if (r.k == k) return &r;
    return nullptr;
}

double CheckResult::worst_margin() const {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : per_k) worst = std::min(worst, r.margin);
    return worst;
}

namespace {

CheckResult finish(CheckResult r, double tol) {
    r.holds = true;
    double worst_rel = 0.0;
    for (const auto& row : r.per_k) {
        const double rel = row.margin / std::max(1.0, std::abs(row.rhs));
        if (row.margin < -tol * std::max(1.0, std::abs(row.rhs))) {
            r.holds = false;
            if (rel < worst_rel) {
                worst_rel = rel;
                r.strict_violation_at = row.k;
            }
        }
    }
    if (r.holds) r.strict_violation_at.reset();
    return r;
}

void require_non_negative_concave(const ConcaveFn& f, const char* who) {
    if (!f.non_negative())
        fail(ErrorCode::InvalidArgument,
             std::string(who) + ": function must be non-negative on [0, inf)");
}

ComplexMatrix fn_abs(const ConcaveFn& f, const ComplexMatrix& a) {
    return apply_fn_abs(f.as_fn(), a);
}

std::string meta(std::initializer_list<std::pair<std::string, ordered_json>> fields) {
    ordered_json j = ordered_json::object();
    for (auto& [k, v] : fields) j[k] = v;
    return j.dump();
}

} // namespace

CheckResult compare_ky_fan(std::string name, int dim, const SingularValueList& lhs,
                           const SingularValueList& rhs, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.dim = dim;
    const int kmax = static_cast<int>(std::max(lhs.size(), rhs.size()));
    double acc_l = 0.0, acc_r = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        if (k <= static_cast<int>(lhs.size())) acc_l += lhs[k - 1];
        if (k <= static_cast<int>(rhs.size())) acc_r += rhs[k - 1];
        r.per_k.push_back({k, acc_l, acc_r, acc_r - acc_l});
    }
    return finish(std::move(r), tol);
}

CheckResult compare_trace(std::string name, int dim, double lhs, double rhs, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.dim = dim;
    r.per_k.push_back({dim, lhs, rhs, rhs - lhs});
    return finish(std::move(r), tol);
}

CheckResult compare_eigen_dominance(std::string name, int dim, std::span<const double> dominated,
                                    std::span<const double> dominating, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.dim = dim;
    const int n = static_cast<int>(std::min(dominated.size(), dominating.size()));
    for (int j = 0; j < n; ++j)
        r.per_k.push_back({j + 1, dominated[j], dominating[j], dominating[j] - dominated[j]});
    return finish(std::move(r), tol);
}

// ---- subadditivity family ---------------------------------------------------

CheckResult check_subadditivity(const ConcaveFn& f, std::span<const ComplexMatrix> as, double tol) {
    if (as.empty()) fail(ErrorCode::InvalidArgument, "check_subadditivity: need at least one operand");
    require_non_negative_concave(f, "check_subadditivity");
    const int n = as.front().dim();
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].dim() != n)
            fail(ErrorCode::InvalidArgument, "check_subadditivity: dimension mismatch at operand " +
                                                 std::to_string(i));
        if (!is_normal(as[i]))
            fail(ErrorCode::Precondition,
                 "check_subadditivity: operand " + std::to_string(i) + " is not normal (defect " +
                     std::to_string(normality_defect(as[i])) + ")");
    }
    ComplexMatrix sum = as[0];
    for (std::size_t i = 1; i < as.size(); ++i) sum = sum + as[i];
    ComplexMatrix rhs = fn_abs(f, as[0]);
    for (std::size_t i = 1; i < as.size(); ++i) rhs = rhs + fn_abs(f, as[i]);
    auto r = compare_ky_fan("subadditivity", n, singular_values(fn_abs(f, sum)),
                            singular_values(rhs), tol);
    r.metadata_json = meta({{"fn", f.spec()}, {"operands", as.size()}});
    return r;
}

CheckResult check_cartesian(const ConcaveFn& f, const ComplexMatrix& z, double tol) {
    require_non_negative_concave(f, "check_cartesian");
    require_finite(z, "check_cartesian");
    const ComplexMatrix a((z.raw() + z.raw().adjoint()).eval() / 2.0);
    const ComplexMatrix b((z.raw() - z.raw().adjoint()).eval() / Complex(0.0, 2.0));
    auto r = compare_ky_fan("cartesian_split", z.dim(), singular_values(fn_abs(f, z)),
                            singular_values(fn_abs(f, a) + fn_abs(f, b)), tol);
    r.metadata_json = meta({{"fn", f.spec()}});
    return r;
}

CheckResult check_hermitian_part(const ConcaveFn& f, const ComplexMatrix& z, double tol) {
    require_non_negative_concave(f, "check_hermitian_part");
    require_finite(z, "check_hermitian_part");
    const ComplexMatrix sum = z + z.adjoint();
    auto r = compare_ky_fan("hermitian_part", z.dim(), singular_values(fn_abs(f, sum)),
                            singular_values(fn_abs(f, z) + fn_abs(f, z.adjoint())), tol);
    r.metadata_json = meta({{"fn", f.spec()}});
    return r;
}

CheckResult check_block_subadditivity(const ConcaveFn& f,
                                      const std::vector<std::vector<ComplexMatrix>>& blocks,
                                      BlockMode mode, double tol) {
    require_non_negative_concave(f, "check_block_subadditivity");
    const std::size_t m = blocks.size();
    if (m == 0) fail(ErrorCode::InvalidArgument, "check_block_subadditivity: empty grid");
    const int n = blocks[0][0].dim();
    for (std::size_t i = 0; i < m; ++i) {
        if (blocks[i].size() != m)
            fail(ErrorCode::InvalidArgument, "check_block_subadditivity: grid must be m x m");
        for (std::size_t j = 0; j < m; ++j)
            if (blocks[i][j].dim() != n)
                fail(ErrorCode::InvalidArgument,
                     "check_block_subadditivity: block (" + std::to_string(i) + "," +
                         std::to_string(j) + ") has mismatched dimension");
    }

    const int big = static_cast<int>(m) * n;
    Eigen::MatrixXcd assembled(big, big);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            assembled.block(static_cast<int>(i) * n, static_cast<int>(j) * n, n, n) =
                blocks[i][j].raw();
    const ComplexMatrix whole(std::move(assembled));

    std::string name;
    ComplexMatrix rhs(n);
    switch (mode) {
        case BlockMode::NormalBlocks: {
            name = "block_normal";
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!is_normal(blocks[i][j]))
                        fail(ErrorCode::Precondition,
                             "check_block_subadditivity: block (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not normal (defect " +
                                 std::to_string(normality_defect(blocks[i][j])) + ")");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) rhs = rhs + fn_abs(f, blocks[i][j]);
            break;
        }
        case BlockMode::HermitianFull: {
            name = "block_hermitian";
            if (!is_hermitian(whole))
                fail(ErrorCode::Precondition,
                     "check_block_subadditivity: assembled matrix is not Hermitian (defect " +
                         std::to_string(hermitian_defect(whole)) + ")");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) rhs = rhs + fn_abs(f, blocks[i][j]);
            break;
        }
        case BlockMode::TriangularN: {
            name = "block_triangular";
            if (m != 2)
                fail(ErrorCode::Precondition, "check_block_subadditivity: triangular mode needs m = 2");
            if (blocks[1][0].frobenius() > tol * std::max(1.0, whole.frobenius()))
                fail(ErrorCode::Precondition,
                     "check_block_subadditivity: block (1,0) must be zero in triangular mode");
            if (!is_normal(blocks[0][1]))
                fail(ErrorCode::Precondition,
                     "check_block_subadditivity: block (0,1) is not normal (defect " +
                         std::to_string(normality_defect(blocks[0][1])) + ")");
            rhs = fn_abs(f, blocks[0][0].adjoint()) + fn_abs(f, blocks[0][1]) +
                  fn_abs(f, blocks[1][1]);
            break;
        }
    }

    auto r = compare_ky_fan(name, n, singular_values(fn_abs(f, whole)), singular_values(rhs), tol);
    r.metadata_json = meta({{"fn", f.spec()}, {"blocks", m}});
    return r;
}

// ---- expansive / contractive congruences ------------------------------------

namespace {

void require_congruence_operands(std::span<const ComplexMatrix> as,
                                 std::span<const ComplexMatrix> zs, const char* who) {
    if (as.empty() || as.size() != zs.size())
        fail(ErrorCode::InvalidArgument,
             std::string(who) + ": need equally many operands and congruences, at least one");
    const int n = as.front().dim();
    for (std::size_t i = 0; i < as.size(); ++i)
        if (as[i].dim() != n || zs[i].dim() != n)
            fail(ErrorCode::InvalidArgument, std::string(who) + ": dimension mismatch at index " +
                                                 std::to_string(i));
}

void require_expansive(std::span<const ComplexMatrix> zs, const char* who) {
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (!is_expansive(zs[i])) {
            const Eigen::MatrixXcd g = zs[i].raw().adjoint() * zs[i].raw() -
                                       Eigen::MatrixXcd::Identity(zs[i].dim(), zs[i].dim());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
            fail(ErrorCode::Precondition,
                 std::string(who) + ": congruence " + std::to_string(i) +
                     " is not expansive (lambda_min(Z*Z - I) = " +
                     std::to_string(es.eigenvalues()(0)) + ")");
        }
    }
}

} // namespace

CheckResult check_expansive_congruence(const ConcaveFn& f, std::span<const ComplexMatrix> as,
                                       std::span<const ComplexMatrix> zs, NormScope scope,
                                       std::optional<double> affine_part, double tol) {
    require_congruence_operands(as, zs, "check_expansive_congruence");
    require_non_negative_concave(f, "check_expansive_congruence");
    if (affine_part && scope != NormScope::TraceOnly)
        fail(ErrorCode::InvalidArgument,
             "check_expansive_congruence: an affine part is only meaningful for the trace scope");
    const int n = as.front().dim();
    for (std::size_t i = 0; i < as.size(); ++i)
        if (!is_normal(as[i]))
            fail(ErrorCode::Precondition,
                 "check_expansive_congruence: operand " + std::to_string(i) +
                     " is not normal (defect " + std::to_string(normality_defect(as[i])) + ")");
    require_expansive(zs, "check_expansive_congruence");

    Eigen::MatrixXcd congr = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < as.size(); ++i)
        congr += zs[i].raw().adjoint() * as[i].raw() * zs[i].raw();
    const ComplexMatrix lhs_operand(congr.eval());

    if (scope == NormScope::AllNorms) {
        ComplexMatrix rhs(n);
        for (std::size_t i = 0; i < as.size(); ++i) {
            const ComplexMatrix fa = fn_abs(f, as[i]);
            rhs = rhs + ComplexMatrix((zs[i].raw().adjoint() * fa.raw() * zs[i].raw()).eval());
        }
        auto r = compare_ky_fan("expansive_congruence", n, singular_values(fn_abs(f, lhs_operand)),
                                singular_values(rhs), tol);
        r.metadata_json = meta({{"fn", f.spec()}, {"operands", as.size()}});
        return r;
    }

    // trace scope; the function is f(t) + a t, which may take negative values
    const double a = affine_part.value_or(0.0);
    const RealFn g = f.as_fn();
    const RealFn full = [g, a](double t) { return g(t) + a * t; };
    double lhs = apply_fn_abs(full, lhs_operand).trace().real();
    double rhs = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const ComplexMatrix fa = apply_fn_abs(full, as[i]);
        rhs += (zs[i].raw().adjoint() * fa.raw() * zs[i].raw()).trace().real();
    }
    auto r = compare_trace("expansive_congruence_trace", n, lhs, rhs, tol);
    r.metadata_json = meta({{"fn", f.spec()}, {"affine_part", a}, {"operands", as.size()}});
    return r;
}

CheckResult check_convex_reverse(std::span<const ComplexMatrix> as,
                                 std::span<const ComplexMatrix> zs, double p, double tol) {
    require_congruence_operands(as, zs, "check_convex_reverse");
    if (!(p > 1.0)) fail(ErrorCode::InvalidArgument, "check_convex_reverse: p must be > 1");
    const int n = as.front().dim();
    for (std::size_t i = 0; i < as.size(); ++i)
        if (!is_psd(as[i]))
            fail(ErrorCode::Precondition,
                 "check_convex_reverse: operand " + std::to_string(i) + " is not PSD");
    require_expansive(zs, "check_convex_reverse");

    const RealFn power = [p](double t) { return std::pow(t, p); };
    Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd congr = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < as.size(); ++i) {
        lhs += zs[i].raw().adjoint() * apply_fn_abs(power, as[i]).raw() * zs[i].raw();
        congr += zs[i].raw().adjoint() * as[i].raw() * zs[i].raw();
    }
    const ComplexMatrix rhs = apply_fn_abs(power, ComplexMatrix(congr.eval()));
    // direction is reversed relative to the concave checks
    auto r = compare_ky_fan("convex_reverse", n, singular_values(ComplexMatrix(lhs.eval())),
                            singular_values(rhs), tol);
    r.metadata_json = meta({{"p", p}, {"operands", as.size()}});
    return r;
}

CheckResult check_contractive_jensen(const ConcaveFn& f, std::span<const ComplexMatrix> as,
                                     std::span<const ComplexMatrix> zs, double tol) {
    require_non_negative_concave(f, "check_contractive_jensen");
    if (as.empty() || as.size() != zs.size())
        fail(ErrorCode::InvalidArgument, "check_contractive_jensen: operand/congruence count mismatch");
    const int n = as.front().dim();
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].dim() != n || zs[i].dim() != n)
            fail(ErrorCode::InvalidArgument, "check_contractive_jensen: dimension mismatch");
        if (!is_psd(as[i]))
            fail(ErrorCode::Precondition,
                 "check_contractive_jensen: operand " + std::to_string(i) + " is not PSD");
    }
    if (!is_contractive_family(zs))
        fail(ErrorCode::Precondition, "check_contractive_jensen: family is not contractive");

    Eigen::MatrixXcd congr = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < as.size(); ++i) {
        congr += zs[i].raw().adjoint() * as[i].raw() * zs[i].raw();
        rhs += zs[i].raw().adjoint() * fn_abs(f, as[i]).raw() * zs[i].raw();
    }
    const ComplexMatrix f_of_congr = fn_abs(f, ComplexMatrix(congr.eval()));
    const auto dominating = eig_hermitian(f_of_congr, 1e-8).eigenvalues;
    const auto dominated =
        eig_hermitian(ComplexMatrix(((rhs + rhs.adjoint()) / 2.0).eval())).eigenvalues;
    auto r = compare_eigen_dominance("contractive_jensen", n, dominated, dominating, tol);
    r.metadata_json = meta({{"fn", f.spec()}, {"operands", as.size()}});
    return r;
}

// ---- majorization lemmas ------------------------------------------------------

CheckResult check_lemma1(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                         const ComplexMatrix& y, double tol) {
    for (const auto* m : {&a, &b, &x, &y})
        if (!is_psd(*m, 1e-8))
            fail(ErrorCode::Precondition, "check_lemma1: operands must be PSD");
    const auto first = weakly_majorized(a, x, tol);
    const auto second = weakly_majorized(b, y, tol);
    if (!first.holds || !second.holds) {
        CheckResult r;
        r.name = "direct_sum_monotone";
        r.dim = a.dim();
        r.skipped = true;
        r.holds = false;
        r.metadata_json = meta({{"skipped_reason", "hypothesis A <w X or B <w Y does not hold"}});
        return r;
    }
    auto r = compare_ky_fan("direct_sum_monotone", a.dim(), singular_values(direct_sum(a, b)),
                            singular_values(direct_sum(x, y)), tol);
    return r;
}

CheckResult check_lemma2(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (!is_psd(a, 1e-8) || !is_psd(b, 1e-8))
        fail(ErrorCode::Precondition, "check_lemma2: operands must be PSD");
    if (!a.same_dim(b)) fail(ErrorCode::InvalidArgument, "check_lemma2: dimension mismatch");
    const int n = a.dim();
    const ComplexMatrix zero(n);
    const ComplexMatrix packed = direct_sum(a + b, zero);
    auto r = compare_ky_fan("direct_sum_compression", n, singular_values(direct_sum(a, b)),
                            singular_values(packed), tol);

    // congruence identity from the proof: [[A, A^(1/2) B^(1/2)], [B^(1/2) A^(1/2), B]]
    // has the singular values of (A+B)(+)0
    const RealFn sqrt_fn = [](double t) { return std::sqrt(t); };
    const ComplexMatrix ra = apply_fn_abs(sqrt_fn, a);
    const ComplexMatrix rb = apply_fn_abs(sqrt_fn, b);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a.raw();
    m.topRightCorner(n, n) = ra.raw() * rb.raw();
    m.bottomLeftCorner(n, n) = rb.raw() * ra.raw();
    m.bottomRightCorner(n, n) = b.raw();
    const auto sv_congr = singular_values(ComplexMatrix(std::move(m)));
    const auto sv_packed = singular_values(packed);
    double dev = 0.0;
    for (std::size_t j = 0; j < sv_congr.size(); ++j)
        dev = std::max(dev, std::abs(sv_congr[j] - sv_packed[j]));
    const double dev_tol = tol * std::max(1.0, sv_packed.front());
    if (dev > dev_tol) {
        r.holds = false;
        if (!r.strict_violation_at) r.strict_violation_at = 1;
    }
    r.metadata_json = meta({{"congruence_max_dev", dev}, {"congruence_tol", dev_tol}});
    return r;
}

CheckResult check_abs_diff_dominance(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
    if (!is_psd(x, 1e-8) || !is_psd(y, 1e-8))
        fail(ErrorCode::Precondition, "check_abs_diff_dominance: operands must be PSD");
    if (!x.same_dim(y)) fail(ErrorCode::InvalidArgument, "check_abs_diff_dominance: dimension mismatch");
    const auto diff = singular_values(x - y);          // eigenvalues of |X - Y|
    const auto stacked = singular_values(direct_sum(x, y));
    return compare_eigen_dominance("abs_diff_dominance", x.dim(), diff,
                                   std::span<const double>(stacked.data(), diff.size()), tol);
}

// ---- converse / fixtures -------------------------------------------------------

std::pair<double, double> concavity_converse_witness(const RealFn& f, double s, double t) {
    if (!(s > 0.0) || !(t > 0.0))
        fail(ErrorCode::InvalidArgument, "concavity_converse_witness: s and t must be > 0");
    if (std::abs(f(0.0)) > 1e-12)
        fail(ErrorCode::InvalidArgument, "concavity_converse_witness: requires f(0) = 0");
    const double root = std::sqrt(s * t);
    const ComplexMatrix a = ComplexMatrix::from_rows({{s / 2, root / 2}, {root / 2, t / 2}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{s / 2, -root / 2}, {-root / 2, t / 2}});
    const double lhs = apply_fn_abs(f, a + b).trace().real();
    const double rhs = apply_fn_abs(f, a).trace().real() + apply_fn_abs(f, b).trace().real();
    return {lhs, rhs};
}

ReproCase parse_repro_case(const std::string& name) {
    if (name == "eq2") return ReproCase::Eq2;
    if (name == "shift3") return ReproCase::Shift3;
    if (name == "interlace") return ReproCase::Interlace;
    fail(ErrorCode::UnknownId, "unknown repro case '" + name + "' (eq2 | shift3 | interlace)");
}

std::string repro_case_name(ReproCase c) {
    switch (c) {
        case ReproCase::Eq2: return "eq2";
        case ReproCase::Shift3: return "shift3";
        case ReproCase::Interlace: return "interlace";
    }
    return "eq2";
}

namespace {

ComplexMatrix eq2_a() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}); }
ComplexMatrix eq2_b() { return ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}); }

ComplexMatrix shift3_z() {
    return ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
}

} // namespace

CheckResult repro_counterexample(ReproCase c) {
    switch (c) {
        case ReproCase::Eq2: {
            // f = min(t, sqrt(2)/2) on |A - B| against |A| + |B|
            const ConcaveFn f{ConcaveFn::MinCap{std::numbers::sqrt2 / 2.0}};
            const ComplexMatrix a = eq2_a(), b = eq2_b();
            const ComplexMatrix diff = a - b;
            const ComplexMatrix abs_sum = matrix_abs(a) + matrix_abs(b);
            auto r = compare_ky_fan("eq2", 2, singular_values(fn_abs(f, diff)),
                                    singular_values(fn_abs(f, abs_sum)), kVerdictTol);
            r.metadata_json = meta({{"fn", f.spec()}});
            return r;
        }
        case ReproCase::Shift3: {
            // f = min(t, sqrt(2)) on |Z + Z*| against |Z| + |Z*|
            const ConcaveFn f{ConcaveFn::MinCap{std::numbers::sqrt2}};
            const ComplexMatrix z = shift3_z();
            const ComplexMatrix sum = z + z.adjoint();
            const ComplexMatrix abs_sum = matrix_abs(z) + matrix_abs(z.adjoint());
            auto r = compare_ky_fan("shift3", 3, singular_values(fn_abs(f, sum)),
                                    singular_values(fn_abs(f, abs_sum)), kVerdictTol);
            r.metadata_json = meta({{"fn", f.spec()}});
            return r;
        }
        case ReproCase::Interlace: {
            // strict chain lambda_2(|A|+|B|) < lambda_2(|Z|) < lambda_1(|Z|) < lambda_1(|A|+|B|)
            const ComplexMatrix a = eq2_a(), b = eq2_b();
            const ComplexMatrix z(
                (a.raw() + Complex(0.0, 1.0) * b.raw()).eval());
            const auto sv_z = singular_values(z);
            const auto sv_sum = singular_values(matrix_abs(a) + matrix_abs(b));
            CheckResult r;
            r.name = "interlace";
            r.dim = 2;
            const double chain[4] = {sv_sum[1], sv_z[1], sv_z[0], sv_sum[0]};
            for (int j = 0; j < 3; ++j)
                r.per_k.push_back({j + 1, chain[j], chain[j + 1], chain[j + 1] - chain[j]});
            r.holds = true;
            for (const auto& row : r.per_k)
                if (row.margin <= kStrictMargin) {
                    r.holds = false;
                    r.strict_violation_at = row.k;
                    break;
                }
            r.metadata_json = meta({{"lambda2_abs_sum", chain[0]},
                                    {"lambda2_z", chain[1]},
                                    {"lambda1_z", chain[2]},
                                    {"lambda1_abs_sum", chain[3]}});
            return r;
        }
    }
    fail(ErrorCode::Internal, "repro_counterexample: unreachable");
}

bool repro_as_expected(const CheckResult& r, ReproCase c) {
    switch (c) {
        case ReproCase::Eq2: {
            // strict violation at k = 2, none at k = 1
            const PerK* k1 = r.row(1);
            const PerK* k2 = r.row(2);
            return k1 && k2 && k1->margin >= -kVerdictTol && k2->margin < -kStrictMargin &&
                   r.strict_violation_at == 2;
        }
        case ReproCase::Shift3: {
            const PerK* k2 = r.row(2);
            return k2 && k2->margin < -kStrictMargin && r.strict_violation_at == 2;
        }
        case ReproCase::Interlace:
            return r.holds;
    }
    return false;
}

} // namespace symnorm
