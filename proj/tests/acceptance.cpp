// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "symnorm/generators.hpp"
#include "symnorm/harness.hpp"

using namespace symnorm;
using ordered_json = nlohmann::ordered_json;
using std::numbers::sqrt2;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

char buf[512];

void criterion1() {
    // warm up once, then time the fixture itself
    (void)repro_counterexample(ReproCase::Eq2);
    const double t0 = now_seconds();
    const CheckResult r = repro_counterexample(ReproCase::Eq2);
    const double elapsed_ms = (now_seconds() - t0) * 1e3;
    const PerK* k1 = r.row(1);
    const PerK* k2 = r.row(2);
    const bool values_ok = k2 && std::abs(k2->lhs - sqrt2) <= 1e-9 &&
                           std::abs(k2->rhs - 1.0) <= 1e-9 &&
                           std::abs(k2->margin - (1.0 - sqrt2)) <= 1e-9;
    const bool k1_ok = k1 && k1->margin >= -1e-9;
    const bool pass = values_ok && k1_ok && repro_as_expected(r, ReproCase::Eq2) &&
                      elapsed_ms < 1.0;
    std::snprintf(buf, sizeof buf,
                  "eq2 reproduces (KF2 %.12g vs %.12g, k=1 margin %.2e, %.3f ms)",
                  k2 ? k2->lhs : 0.0, k2 ? k2->rhs : 0.0, k1 ? k1->margin : -1.0, elapsed_ms);
    report(1, pass, buf);
}

void criterion2() {
    const CheckResult r = repro_counterexample(ReproCase::Shift3);
    const PerK* k2 = r.row(2);
    const bool values_ok = k2 && std::abs(k2->lhs - 2.0 * sqrt2) <= 1e-9 &&
                           std::abs(k2->rhs - (1.0 + sqrt2)) <= 1e-9;
    const bool gap_ok = k2 && (k2->lhs - k2->rhs) > 0.41;
    const bool pass = values_ok && gap_ok && repro_as_expected(r, ReproCase::Shift3);
    std::snprintf(buf, sizeof buf, "shift3 reproduces (KF2 %.12g vs %.12g, gap %.12g)",
                  k2 ? k2->lhs : 0.0, k2 ? k2->rhs : 0.0, k2 ? k2->lhs - k2->rhs : 0.0);
    report(2, pass, buf);
}

void criterion3() {
    const CheckResult r = repro_counterexample(ReproCase::Interlace);
    double min_gap = 1e300;
    for (const auto& row : r.per_k) min_gap = std::min(min_gap, row.margin);
    const bool pass = r.holds && min_gap > 1e-6;
    std::snprintf(buf, sizeof buf, "interlace chain strict (min gap %.6g)", min_gap);
    report(3, pass, buf);
}

void criterion4() {
    const std::vector<std::string> suites = {
        "thm1.1", "thm2.1", "thm2.1-m3", "cor2.2", "cor2.3", "cor2.4", "cor2.5", "cor2.6",
        "ineq5",  "lemma1", "lemma2",    "eq4",    "thm3.1", "cor3.2", "thm3.3", "thm3.4",
        "jensen"};
    const double t0 = now_seconds();
    long total_failed = 0, total_passed = 0, total_skipped = 0;
    std::string first_failure;
    for (const auto& id : suites) {
        TrialConfig config;
        config.theorem_id = id;
        config.dims = {2, 3, 4, 5, 6, 7, 8};
        config.trials = 500;
        config.seed = 42;
        config.tol = 1e-8;
        const CheckReport rep = run_suite(config);
        total_failed += rep.failed;
        total_passed += rep.passed;
        total_skipped += rep.skipped;
        if (rep.failed > 0 && first_failure.empty()) first_failure = id;
        std::printf("    %-10s passed %5ld  failed %3ld  skipped %3ld  (%.1fs)\n", id.c_str(),
                    rep.passed, rep.failed, rep.skipped, rep.wall_time);
        std::fflush(stdout);
    }
    const double elapsed = now_seconds() - t0;
    const bool pass = total_failed == 0 && elapsed < 300.0;
    std::snprintf(buf, sizeof buf,
                  "17 property suites, 500 trials x dims 2..8 at tol 1e-8: %ld passed, %ld failed, "
                  "%ld skipped in %.1fs%s%s",
                  total_passed, total_failed, total_skipped, elapsed,
                  first_failure.empty() ? "" : ", first failure in ", first_failure.c_str());
    report(4, pass, buf);
}

void criterion5() {
    const auto [lhs, rhs] = concavity_converse_witness([](double t) { return t * t; }, 1.0, 3.0);
    const bool pass = std::abs(lhs - 10.0) <= 1e-12 && std::abs(rhs - 8.0) <= 1e-12;
    std::snprintf(buf, sizeof buf, "converse witness for t^2 at (1,3) = (%.15g, %.15g)", lhs, rhs);
    report(5, pass, buf);
}

void criterion6() {
    TrialConfig config;
    config.theorem_id = "rotfeld";
    config.dims = {2, 3, 4, 5, 6, 7, 8};
    config.trials = 500;
    config.seed = 42;
    config.tol = 1e-8;
    const CheckReport rep = run_suite(config);
    const bool pass = rep.failed == 0;
    std::snprintf(buf, sizeof buf,
                  "Rotfeld trace specialization (g + a t class): %ld passed, %ld failed",
                  rep.passed, rep.failed);
    report(6, pass, buf);
}

void criterion7() {
    bool pass = true;
    std::string detail;
    for (const char* target : {"drop_normality_thm3.4", "intermediate_abs_sum"}) {
        SearchConfig config;
        config.target = target;
        config.budget = 10000;
        config.seed = 7;
        config.dims = {2, 3, 4};
        const SearchReport rep = search_violation(config);
        pass = pass && rep.witness_found;
        detail += std::string(target) + (rep.witness_found ? " found in " : " MISSING after ") +
                  std::to_string(rep.trials_run) + " trials; ";
    }
    SearchConfig control;
    control.target = "control";
    control.budget = 10000;
    control.seed = 7;
    control.dims = {2, 3, 4};
    const SearchReport rep = search_violation(control);
    pass = pass && !rep.witness_found;
    detail += std::string("control ") +
              (rep.witness_found ? "FOUND A VIOLATION" : "clean over 10000 trials");
    report(7, pass, detail);
}

void criterion8() {
    TrialConfig config;
    config.theorem_id = "cor2.2";
    config.dims = {2, 3, 4};
    config.trials = 50;
    config.seed = 31337;
    config.tol = 1e-8;
    auto strip = [](const std::string& text) {
        ordered_json j = ordered_json::parse(text);
        j.erase("wall_time");
        return j.dump();
    };
    const std::string a = strip(run_suite(config).to_json());
    const std::string b = strip(run_suite(config).to_json());
    const bool pass = a == b;
    std::snprintf(buf, sizeof buf, "identical configs give byte-identical reports modulo wall_time "
                                   "(%zu bytes)",
                  a.size());
    report(8, pass, buf);
}

void criterion9() {
    SeedStream rng(2718281828);
    double worst_eq3 = 0.0, worst_shift = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(rng.index(7));
        const ComplexMatrix h = gen_hermitian(rng, n, 2.0);
        const ConcaveFn f = random_concave(rng, 4, 1.0);
        const ConcaveFn g = f.shift_to_zero();

        // split identity: g(|H|) = g(H+) + g(H-)
        const auto [pos, neg] = pos_neg_parts(h);
        const ComplexMatrix lhs = apply_fn_abs(g.as_fn(), h);
        const ComplexMatrix rhs = apply_fn_abs(g.as_fn(), pos) + apply_fn_abs(g.as_fn(), neg);
        worst_eq3 = std::max(worst_eq3, (lhs.raw() - rhs.raw()).norm());

        // Ky Fan shift identity: ||f(|H|)||_(k) = k f(0) + ||g(|H|)||_(k)
        const auto sv_f = singular_values(apply_fn_abs(f.as_fn(), h));
        const auto sv_g = singular_values(lhs);
        double acc_f = 0.0, acc_g = 0.0;
        for (int k = 1; k <= n; ++k) {
            acc_f += sv_f[k - 1];
            acc_g += sv_g[k - 1];
            worst_shift = std::max(worst_shift, std::abs(acc_f - (k * f.eval(0.0) + acc_g)));
        }
    }
    const bool pass = worst_eq3 <= 1e-10 && worst_shift <= 1e-10;
    std::snprintf(buf, sizeof buf,
                  "split identity and f(0) shift on 1000 Hermitian draws (max dev %.3g / %.3g)",
                  worst_eq3, worst_shift);
    report(9, pass, buf);
}

} // namespace

int main() {
    std::printf("symnorm acceptance suite\n");
    const double t0 = now_seconds();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria passed in %.1fs\n", 9 - g_failures, now_seconds() - t0);
    return g_failures == 0 ? 0 : 1;
}
