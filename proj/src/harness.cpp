#include "symnorm/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "symnorm/generators.hpp"

namespace symnorm {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string key_to_hex(std::uint64_t key) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(key));
    return buf;
}

// random complex matrix with no structure at all (Ginibre entries)
ComplexMatrix gen_general(SeedStream& rng, int n, double scale = 1.0) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = scale * rng.cgaussian();
    return ComplexMatrix(std::move(g));
}

// scaled rank-one projector c * u u* for a Haar-random unit vector u
ComplexMatrix gen_scaled_projector(SeedStream& rng, int n, double lo, double hi) {
    Eigen::VectorXcd u(n);
    for (int i = 0; i < n; ++i) u(i) = rng.cgaussian();
    u.normalize();
    const double c = rng.uniform(lo, hi);
    Eigen::MatrixXcd p = c * (u * u.adjoint());
    return ComplexMatrix(((p + p.adjoint()) / 2.0).eval());
}

enum class FnPool { General, EConvex };

ConcaveFn draw_fn(SeedStream& rng, const std::string& spec, FnPool pool, double scale = 1.0) {
    if (spec != "random") {
        ConcaveFn f = ConcaveFn::parse(spec);
        if (!f.non_negative())
            fail(ErrorCode::InvalidArgument,
                 "function literal '" + spec + "' is not non-negative on [0, inf)");
        return f;
    }
    if (pool == FnPool::EConvex) {
        switch (rng.index(3)) {
            case 0: return ConcaveFn(ConcaveFn::Power{rng.uniform(0.15, 1.0)});
            case 1: return ConcaveFn(ConcaveFn::Sqrt{});
            default: return ConcaveFn(ConcaveFn::Affine{rng.uniform(0.0, 2.0), rng.uniform(0.0, 1.0)});
        }
    }
    switch (rng.index(5)) {
        case 0: return ConcaveFn(ConcaveFn::Power{rng.uniform(0.15, 1.0)});
        case 1: return ConcaveFn(ConcaveFn::MinCap{rng.uniform(0.2, 1.5 * scale)});
        case 2: return ConcaveFn(ConcaveFn::Sqrt{});
        case 3: return ConcaveFn(ConcaveFn::Affine{rng.uniform(0.0, 2.0), rng.uniform(0.0, 1.0)});
        default: return random_concave(rng, 4, scale);
    }
}

using TrialFn =
    std::function<CheckResult(SeedStream&, int dim, const std::string& fn_spec, double tol)>;

struct CheckDef {
    std::string id;
    std::string summary;
    NormScope scope;
    TrialFn trial;
};

std::vector<ComplexMatrix> two(ComplexMatrix a, ComplexMatrix b) {
    std::vector<ComplexMatrix> v;
    v.push_back(std::move(a));
    v.push_back(std::move(b));
    return v;
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> r;

        r.push_back({"thm1.1",
                     "||f(A+B)|| <= ||f(A)+f(B)|| for PSD A, B and non-negative concave f",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const auto as = two(gen_psd(rng, n), gen_psd(rng, n));
                         return check_subadditivity(f, as, tol);
                     }});

        r.push_back({"thm1.2",
                     "||f(|A+B|)|| <= ||f(|A|+|B|)|| for normal A, B and e-convex non-negative "
                     "concave f",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::EConvex);
                         const ComplexMatrix a = gen_normal(rng, n);
                         const ComplexMatrix b = gen_normal(rng, n);
                         auto res = compare_ky_fan(
                             "intermediate_abs_sum", n,
                             singular_values(apply_fn_abs(f.as_fn(), a + b)),
                             singular_values(apply_fn_abs(f.as_fn(), matrix_abs(a) + matrix_abs(b))),
                             tol);
                         ordered_json m;
                         m["fn"] = f.spec();
                         m["e_convex"] = is_e_convex_default_grid(f.as_fn());
                         res.metadata_json = m.dump();
                         return res;
                     }});

        r.push_back({"thm1.3",
                     "||f(Z*AZ)|| <= ||Z*f(A)Z|| for PSD A, expansive Z and non-negative concave f",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const std::vector<ComplexMatrix> as{gen_psd(rng, n)};
                         const std::vector<ComplexMatrix> zs{gen_expansive(rng, n)};
                         return check_expansive_congruence(f, as, zs, NormScope::AllNorms,
                                                           std::nullopt, tol);
                     }});

        r.push_back({"thm2.1",
                     "||f(|A+B|)|| <= ||f(|A|)+f(|B|)|| for normal A, B and non-negative concave f",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const auto as = two(gen_normal(rng, n), gen_normal(rng, n));
                         return check_subadditivity(f, as, tol);
                     }});

        r.push_back({"thm2.1-m3",
                     "||f(|A1+A2+A3|)|| <= ||f(|A1|)+f(|A2|)+f(|A3|)|| for normal A_i",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         std::vector<ComplexMatrix> as;
                         for (int i = 0; i < 3; ++i) as.push_back(gen_normal(rng, n));
                         return check_subadditivity(f, as, tol);
                     }});

        r.push_back({"cor2.2",
                     "Z = A+iB in Hermitian parts: ||f(|Z|)|| <= ||f(|A|)+f(|B|)||",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         return check_cartesian(f, gen_general(rng, n), tol);
                     }});

        r.push_back({"cor2.3",
                     "||f(|Z+Z*|)|| <= ||f(|Z|)+f(|Z*|)|| for arbitrary Z",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         return check_hermitian_part(f, gen_general(rng, n), tol);
                     }});

        r.push_back({"cor2.4",
                     "||f(|[A_ij]|)|| <= ||sum f(|A_ij|)|| for a 2x2 grid of normal blocks",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         std::vector<std::vector<ComplexMatrix>> blocks;
                         for (int i = 0; i < 2; ++i) {
                             std::vector<ComplexMatrix> row;
                             for (int j = 0; j < 2; ++j) row.push_back(gen_normal(rng, n));
                             blocks.push_back(std::move(row));
                         }
                         return check_block_subadditivity(f, blocks, BlockMode::NormalBlocks, tol);
                     }});

        r.push_back({"cor2.5",
                     "||f(|[[A,N],[0,B]]|)|| <= ||f(|A*|)+f(|N|)+f(|B|)|| with N normal",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         std::vector<std::vector<ComplexMatrix>> blocks;
                         blocks.push_back(two(gen_general(rng, n), gen_normal(rng, n)));
                         blocks.push_back(two(ComplexMatrix(n), gen_general(rng, n)));
                         return check_block_subadditivity(f, blocks, BlockMode::TriangularN, tol);
                     }});

        r.push_back({"cor2.6",
                     "||f(|H|)|| <= ||sum f(|H_ij|)|| for Hermitian H split in four equal blocks",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const ComplexMatrix h = gen_hermitian(rng, 2 * n);
                         std::vector<std::vector<ComplexMatrix>> blocks(2);
                         for (int i = 0; i < 2; ++i)
                             for (int j = 0; j < 2; ++j)
                                 blocks[i].push_back(
                                     ComplexMatrix(Eigen::MatrixXcd(h.raw().block(i * n, j * n, n, n))));
                         return check_block_subadditivity(f, blocks, BlockMode::HermitianFull, tol);
                     }});

        r.push_back({"ineq5",
                     "||f(|[[A,B],[B*,C]]|)|| <= ||f(|A|)+f(|B|)+f(|B*|)+f(|C|)|| for Hermitian A, C",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const ComplexMatrix a = gen_hermitian(rng, n);
                         const ComplexMatrix c = gen_hermitian(rng, n);
                         const ComplexMatrix b = gen_general(rng, n);
                         std::vector<std::vector<ComplexMatrix>> blocks;
                         blocks.push_back(two(a, b));
                         blocks.push_back(two(b.adjoint(), c));
                         return check_block_subadditivity(f, blocks, BlockMode::HermitianFull, tol);
                     }});

        r.push_back({"lemma1",
                     "A <w X and B <w Y imply A(+)B <w X(+)Y for PSD operands",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string&, double tol) {
                         const ComplexMatrix a = gen_psd(rng, n);
                         const ComplexMatrix b = gen_psd(rng, n);
                         const ComplexMatrix x = a + gen_psd(rng, n, 0.5);
                         const ComplexMatrix y = b + gen_psd(rng, n, 0.5);
                         return check_lemma1(a, b, x, y, tol);
                     }});

        r.push_back({"lemma2",
                     "A(+)B <w (A+B)(+)0 plus the square-root congruence identity, PSD A, B",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string&, double tol) {
                         return check_lemma2(gen_psd(rng, n), gen_psd(rng, n), tol);
                     }});

        r.push_back({"eq4",
                     "lambda_j(|X-Y|) <= lambda_j(X(+)Y) pointwise for PSD X, Y",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string&, double tol) {
                         if (rng.chance(0.5)) {
                             // the instantiation used by the subadditivity proof
                             const auto [ap, an] = pos_neg_parts(gen_hermitian(rng, n));
                             const auto [bp, bn] = pos_neg_parts(gen_hermitian(rng, n));
                             return check_abs_diff_dominance(ap + bp, an + bn, tol);
                         }
                         return check_abs_diff_dominance(gen_psd(rng, n), gen_psd(rng, n), tol);
                     }});

        r.push_back({"thm3.1",
                     "||f(|Z*AZ|)|| <= ||Z*f(|A|)Z|| for normal A and expansive Z",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const std::vector<ComplexMatrix> as{gen_normal(rng, n)};
                         const std::vector<ComplexMatrix> zs{gen_expansive(rng, n)};
                         return check_expansive_congruence(f, as, zs, NormScope::AllNorms,
                                                           std::nullopt, tol);
                     }});

        r.push_back({"cor3.2",
                     "Tr f(|Z*AZ|) <= Tr Z*f(|A|)Z for PSD A, expansive Z and concave f = g + a t "
                     "with f(0) >= 0",
                     NormScope::TraceOnly,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn g = draw_fn(rng, spec, FnPool::General);
                         const double a = spec == "random" ? rng.uniform(-1.0, 1.0) : 0.0;
                         const std::vector<ComplexMatrix> as{gen_psd(rng, n)};
                         const std::vector<ComplexMatrix> zs{gen_expansive(rng, n)};
                         return check_expansive_congruence(g, as, zs, NormScope::TraceOnly, a, tol);
                     }});

        r.push_back({"thm3.3",
                     "||f(|sum Z_i*A_iZ_i|)|| <= ||sum Z_i*f(|A_i|)Z_i|| for normal A_i, expansive "
                     "Z_i (m = 2)",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const auto as = two(gen_normal(rng, n), gen_normal(rng, n));
                         const auto zs = two(gen_expansive(rng, n), gen_expansive(rng, n));
                         return check_expansive_congruence(f, as, zs, NormScope::AllNorms,
                                                           std::nullopt, tol);
                     }});

        r.push_back({"thm3.4",
                     "||sum Z_i*A_i^pZ_i|| <= ||(sum Z_i*A_iZ_i)^p|| for PSD A_i, expansive Z_i, "
                     "p > 1",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const double p =
                             spec == "random" ? std::array{1.5, 2.0, 3.0}[rng.index(3)]
                                              : parse_convex_power(spec).p;
                         const auto as = two(gen_psd(rng, n), gen_psd(rng, n));
                         const auto zs = two(gen_expansive(rng, n, 0.5), gen_expansive(rng, n, 0.5));
                         return check_convex_reverse(as, zs, p, tol);
                     }});

        r.push_back({"jensen",
                     "lambda_j(f(sum Z_i*A_iZ_i)) >= lambda_j(sum Z_i*f(A_i)Z_i) for PSD A_i and "
                     "sum Z_i*Z_i <= I",
                     NormScope::AllNorms,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn f = draw_fn(rng, spec, FnPool::General);
                         const auto as = two(gen_psd(rng, n), gen_psd(rng, n));
                         const auto zs = gen_contractive_family(rng, 2, n);
                         return check_contractive_jensen(f, as, zs, tol);
                     }});

        r.push_back({"rotfeld",
                     "Tr f(A+B) <= Tr f(A) + Tr f(B) for PSD A, B and concave f = g + a t with "
                     "f(0) >= 0",
                     NormScope::TraceOnly,
                     [](SeedStream& rng, int n, const std::string& spec, double tol) {
                         const ConcaveFn g = draw_fn(rng, spec, FnPool::General);
                         const double a = spec == "random" ? rng.uniform(-1.0, 1.0) : 0.0;
                         const auto as = two(gen_psd(rng, n), gen_psd(rng, n));
                         const auto zs = two(ComplexMatrix::identity(n), ComplexMatrix::identity(n));
                         auto res =
                             check_expansive_congruence(g, as, zs, NormScope::TraceOnly, a, tol);
                         res.name = "rotfeld_trace";
                         return res;
                     }});

        return r;
    }();
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.id == id) return def;
    std::string ids;
    for (const auto& def : registry()) {
        if (!ids.empty()) ids += ", ";
        ids += def.id;
    }
    fail(ErrorCode::UnknownId, "unknown theorem id '" + id + "'; registered: " + ids);
}

std::string scope_name(NormScope s) { return s == NormScope::AllNorms ? "all" : "trace"; }

// ---- searches --------------------------------------------------------------

using SearchFn = std::function<std::optional<CheckResult>(SeedStream&, int dim, double tol)>;

struct SearchDef {
    std::string id;
    std::string summary;
    bool expect_witness;
    SearchFn trial;
};

ordered_json matrix_json(const ComplexMatrix& m) { return ordered_json::parse(m.to_json()); }

std::optional<CheckResult> violation_or_none(CheckResult r) {
    if (r.worst_margin() < -kStrictMargin) return r;
    return std::nullopt;
}

const std::vector<SearchDef>& search_registry() {
    static const std::vector<SearchDef> defs = [] {
        std::vector<SearchDef> r;

        r.push_back(
            {"drop_concavity",
             "convex f(t) = t^2 breaks the trace comparison Tr f(A+B) <= Tr f(A) + Tr f(B)",
             true, [](SeedStream& rng, int, double tol) -> std::optional<CheckResult> {
                 const double s = rng.uniform(0.1, 3.0);
                 const double t = rng.uniform(0.1, 3.0);
                 const auto [lhs, rhs] =
                     concavity_converse_witness([](double x) { return x * x; }, s, t);
                 auto res = compare_trace("drop_concavity", 2, lhs, rhs, tol);
                 ordered_json m;
                 m["fn"] = "t^2";
                 m["s"] = s;
                 m["t"] = t;
                 res.metadata_json = m.dump();
                 return violation_or_none(std::move(res));
             }});

        r.push_back(
            {"drop_normality_thm3.4",
             "normal (sign-indefinite) operands break ||sum Z_i*|A_i|^pZ_i|| <= "
             "|||sum Z_i*A_iZ_i|^p||",
             true, [](SeedStream& rng, int n, double tol) -> std::optional<CheckResult> {
                 const double p = std::array{1.5, 2.0, 3.0}[rng.index(3)];
                 const auto as = two(gen_hermitian(rng, n), gen_hermitian(rng, n));
                 const auto zs = rng.chance(0.5)
                                     ? two(ComplexMatrix::identity(n), ComplexMatrix::identity(n))
                                     : two(gen_expansive(rng, n, 0.5), gen_expansive(rng, n, 0.5));
                 const RealFn power = [p](double x) { return std::pow(x, p); };
                 Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(n, n);
                 Eigen::MatrixXcd congr = Eigen::MatrixXcd::Zero(n, n);
                 for (int i = 0; i < 2; ++i) {
                     lhs += zs[i].raw().adjoint() * apply_fn_abs(power, as[i]).raw() * zs[i].raw();
                     congr += zs[i].raw().adjoint() * as[i].raw() * zs[i].raw();
                 }
                 auto res = compare_ky_fan(
                     "drop_normality_thm3.4", n, singular_values(ComplexMatrix(lhs.eval())),
                     singular_values(apply_fn_abs(power, ComplexMatrix(congr.eval()))), tol);
                 ordered_json m;
                 m["p"] = p;
                 m["As"] = ordered_json::array({matrix_json(as[0]), matrix_json(as[1])});
                 m["Zs"] = ordered_json::array({matrix_json(zs[0]), matrix_json(zs[1])});
                 res.metadata_json = m.dump();
                 return violation_or_none(std::move(res));
             }});

        auto intermediate_trial = [](SeedStream& rng, int n, double tol, bool force_non_e_convex)
            -> std::optional<CheckResult> {
            // operands are normal (Hermitian) by construction; the weakened claim
            // is the intermediate comparison f(|A+B|) against f(|A|+|B|)
            ComplexMatrix a(n), b(n);
            const auto draw = rng.index(3);
            if (draw == 0) {
                a = gen_scaled_projector(rng, n, 0.5, 1.5);
                b = ComplexMatrix((gen_scaled_projector(rng, n, 0.5, 1.5).raw() * -1.0).eval());
            } else {
                a = gen_hermitian(rng, n);
                b = gen_hermitian(rng, n);
            }
            const ComplexMatrix sum = a + b;
            const ComplexMatrix abs_sum = matrix_abs(a) + matrix_abs(b);
            std::optional<ConcaveFn> f;
            if (draw == 2 && !force_non_e_convex) {
                f = random_concave(rng, 4, 1.0);
            } else {
                const auto sv = singular_values(sum);
                if (n < 2 || sv[1] < 1e-3) return std::nullopt;
                f = ConcaveFn(ConcaveFn::MinCap{sv[1]});
            }
            if (force_non_e_convex && is_e_convex_default_grid(f->as_fn())) return std::nullopt;
            auto res = compare_ky_fan("intermediate_abs_sum", n,
                                      singular_values(apply_fn_abs(f->as_fn(), sum)),
                                      singular_values(apply_fn_abs(f->as_fn(), abs_sum)), tol);
            ordered_json m;
            m["fn"] = f->spec();
            m["e_convex"] = is_e_convex_default_grid(f->as_fn());
            m["A"] = matrix_json(a);
            m["B"] = matrix_json(b);
            res.metadata_json = m.dump();
            return violation_or_none(std::move(res));
        };

        r.push_back({"intermediate_abs_sum",
                     "normal A, B and concave f with ||f(|A+B|)|| > ||f(|A|+|B|)|| at some Ky Fan "
                     "norm",
                     true,
                     [intermediate_trial](SeedStream& rng, int n, double tol) {
                         return intermediate_trial(rng, n, tol, false);
                     }});

        r.push_back({"drop_e_convexity_intermediate",
                     "without e-convexity the intermediate comparison ||f(|A+B|)|| <= "
                     "||f(|A|+|B|)|| fails",
                     true,
                     [intermediate_trial](SeedStream& rng, int n, double tol) {
                         return intermediate_trial(rng, n, tol, true);
                     }});

        r.push_back({"control",
                     "no hypothesis dropped: the normal-operand subadditivity claim, expected to "
                     "hold on every draw",
                     false, [](SeedStream& rng, int n, double tol) -> std::optional<CheckResult> {
                         const ConcaveFn f = draw_fn(rng, "random", FnPool::General);
                         const auto as = two(gen_normal(rng, n), gen_normal(rng, n));
                         return violation_or_none(check_subadditivity(f, as, tol));
                     }});

        return r;
    }();
    return defs;
}

const SearchDef& find_search(const std::string& id) {
    for (const auto& def : search_registry())
        if (def.id == id) return def;
    std::string ids;
    for (const auto& def : search_registry()) {
        if (!ids.empty()) ids += ", ";
        ids += def.id;
    }
    fail(ErrorCode::UnknownId, "unknown search target '" + id + "'; registered: " + ids);
}

ordered_json config_json(const TrialConfig& c, NormScope scope) {
    ordered_json j;
    j["theorem"] = c.theorem_id;
    j["dims"] = c.dims;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["tol"] = c.tol;
    j["fn"] = c.function_spec;
    j["norm_scope"] = scope_name(scope);
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

void TrialConfig::validate() const {
    if (theorem_id.empty()) fail(ErrorCode::InvalidArgument, "config: theorem id is required");
    if (trials < 1) fail(ErrorCode::InvalidArgument, "config: trials must be >= 1");
    if (dims.empty()) fail(ErrorCode::InvalidArgument, "config: at least one dimension");
    for (int d : dims)
        if (d < 1 || d > kMaxDim)
            fail(ErrorCode::InvalidArgument,
                 "config: dims must be in 1.." + std::to_string(kMaxDim));
    if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "config: tol must be > 0");
}

void SearchConfig::validate() const {
    if (target.empty()) fail(ErrorCode::InvalidArgument, "config: search target is required");
    if (budget < 1) fail(ErrorCode::InvalidArgument, "config: budget must be >= 1");
    if (dims.empty()) fail(ErrorCode::InvalidArgument, "config: at least one dimension");
    for (int d : dims)
        if (d < 1 || d > kMaxDim)
            fail(ErrorCode::InvalidArgument,
                 "config: dims must be in 1.." + std::to_string(kMaxDim));
    if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "config: tol must be > 0");
}

std::vector<CheckInfo> list_checks() {
    std::vector<CheckInfo> out;
    for (const auto& def : registry()) out.push_back({def.id, def.summary, def.scope});
    return out;
}

std::vector<SearchInfo> list_search_targets() {
    std::vector<SearchInfo> out;
    for (const auto& def : search_registry())
        out.push_back({def.id, def.summary, def.expect_witness});
    return out;
}

std::string list_json() {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& def : registry()) {
        ordered_json c;
        c["id"] = def.id;
        c["summary"] = def.summary;
        c["scope"] = scope_name(def.scope);
        checks.push_back(std::move(c));
    }
    ordered_json targets = ordered_json::array();
    for (const auto& def : search_registry()) {
        ordered_json t;
        t["id"] = def.id;
        t["summary"] = def.summary;
        t["expect_witness"] = def.expect_witness;
        targets.push_back(std::move(t));
    }
    j["checks"] = std::move(checks);
    j["search_targets"] = std::move(targets);
    return j.dump();
}

std::uint64_t trial_key(std::uint64_t master_seed, int dim, long index) {
    const std::uint64_t base = SeedStream::mix(master_seed ^ static_cast<std::uint64_t>(index));
    return SeedStream::mix(base ^ 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(dim));
}

CheckResult run_trial(const std::string& theorem_id, int dim, std::uint64_t key,
                      const std::string& function_spec, double tol) {
    const CheckDef& def = find_check(theorem_id);
    if (dim < 1 || dim > kMaxDim)
        fail(ErrorCode::InvalidArgument, "run_trial: dim must be in 1.." + std::to_string(kMaxDim));
    SeedStream stream(key);
    return def.trial(stream, dim, function_spec, tol);
}

CheckReport run_suite(const TrialConfig& config) {
    config.validate();
    const CheckDef& def = find_check(config.theorem_id);
    if (!config.norm_scope.empty() && config.norm_scope != scope_name(def.scope))
        fail(ErrorCode::InvalidArgument, "config: check '" + config.theorem_id +
                                             "' runs with norm scope '" + scope_name(def.scope) +
                                             "'");
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.config = config;
    for (int dim : config.dims) {
        DimTotals totals;
        totals.dim = dim;
        for (long i = 0; i < config.trials; ++i) {
            const std::uint64_t key = trial_key(config.seed, dim, i);
            CheckResult result = run_trial(config.theorem_id, dim, key, config.function_spec,
                                           config.tol);
            if (result.skipped) {
                ++totals.skipped;
                continue;
            }
            if (result.holds) {
                ++totals.passed;
                continue;
            }
            ++totals.failed;
            if (static_cast<long>(report.failures.size()) < kMaxStoredFailures) {
                ordered_json m = ordered_json::parse(result.metadata_json);
                m["theorem"] = config.theorem_id;
                m["trial"] = i;
                m["seed"] = key_to_hex(key);
                m["config_fn"] = config.function_spec;
                result.metadata_json = m.dump();
                report.failures.push_back(std::move(result));
            }
        }
        report.passed += totals.passed;
        report.failed += totals.failed;
        report.skipped += totals.skipped;
        report.per_dim.push_back(totals);
    }
    report.wall_time = seconds_since(start);
    return report;
}

std::string CheckReport::to_json() const {
    const CheckDef& def = find_check(config.theorem_id);
    ordered_json j;
    j["kind"] = "check";
    j["config"] = config_json(config, def.scope);
    ordered_json dims = ordered_json::array();
    for (const auto& d : per_dim) {
        ordered_json row;
        row["dim"] = d.dim;
        row["passed"] = d.passed;
        row["failed"] = d.failed;
        row["skipped"] = d.skipped;
        dims.push_back(std::move(row));
    }
    j["per_dim"] = std::move(dims);
    j["totals"] = ordered_json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    ordered_json fails = ordered_json::array();
    for (const auto& f : failures) fails.push_back(ordered_json::parse(f.to_json()));
    j["failures"] = std::move(fails);
    j["wall_time"] = wall_time;
    return j.dump();
}

SearchReport search_violation(const SearchConfig& config) {
    config.validate();
    const SearchDef& def = find_search(config.target);
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.config = config;
    report.expect_witness = def.expect_witness;
    for (long i = 0; i < config.budget; ++i) {
        const int dim = config.dims[static_cast<std::size_t>(i) % config.dims.size()];
        const std::uint64_t key = trial_key(config.seed, dim, i);
        SeedStream stream(key);
        auto witness = def.trial(stream, dim, config.tol);
        ++report.trials_run;
        if (witness) {
            ordered_json m = ordered_json::parse(witness->metadata_json);
            m["target"] = config.target;
            m["trial"] = i;
            m["seed"] = key_to_hex(key);
            witness->metadata_json = m.dump();
            report.witness_found = true;
            report.witness = std::move(*witness);
            break;
        }
    }
    report.wall_time = seconds_since(start);
    return report;
}

std::string SearchReport::to_json() const {
    ordered_json j;
    j["kind"] = "search";
    ordered_json c;
    c["target"] = config.target;
    c["budget"] = config.budget;
    c["seed"] = config.seed;
    c["dims"] = config.dims;
    c["tol"] = config.tol;
    j["config"] = std::move(c);
    j["expect_witness"] = expect_witness;
    j["witness_found"] = witness_found;
    j["trials_run"] = trials_run;
    j["witness"] = witness ? ordered_json::parse(witness->to_json()) : ordered_json(nullptr);
    j["as_expected"] = as_expected();
    j["wall_time"] = wall_time;
    return j.dump();
}

ReproReport run_repro(const std::string& case_name) {
    const ReproCase c = parse_repro_case(case_name);
    const auto start = std::chrono::steady_clock::now();
    ReproReport report;
    report.case_name = case_name;
    report.result = repro_counterexample(c);
    report.as_expected = repro_as_expected(report.result, c);
    report.wall_time = seconds_since(start);
    return report;
}

std::string ReproReport::to_json() const {
    ordered_json j;
    j["kind"] = "repro";
    j["case"] = case_name;
    j["result"] = ordered_json::parse(result.to_json());
    j["as_expected"] = as_expected;
    j["wall_time"] = wall_time;
    return j.dump();
}

} // namespace symnorm
