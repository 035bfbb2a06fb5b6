// symnorm CLI: check / repro / search / list on top of the shared C API.
//
// Exit codes: 0 when every trial passed or the witness behaved as expected,
// 1 on an unexpected violation or a missing expected witness, 2 on usage
// errors (bad flags, unknown ids, malformed input).

#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symnorm/symnorm.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { symnorm_string_free(ptr); }
};

int fail_usage(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kExitUsage;
}

bool write_report(const std::string& path, const char* report) {
    if (path.empty()) return true;
    std::ofstream out(path, std::ios::binary);
    out << report;
    if (!out) {
        std::fprintf(stderr, "error: cannot write report to %s\n", path.c_str());
        return false;
    }
    return true;
}

void print_per_k(const ordered_json& result) {
    std::printf("  %4s  %18s  %18s  %14s\n", "k", "lhs", "rhs", "margin");
    for (const auto& row : result["per_k"]) {
        std::printf("  %4d  %18.12g  %18.12g  %14.6g\n", row["k"].get<int>(),
                    row["lhs"].get<double>(), row["rhs"].get<double>(),
                    row["margin"].get<double>());
    }
}

int run_check(const std::string& theorem, const std::string& dims, long trials,
              unsigned long long seed, double tol, const std::string& fn,
              const std::string& report_path) {
    ordered_json config;
    config["theorem"] = theorem;
    config["dims"] = dims;
    config["trials"] = trials;
    config["seed"] = seed;
    config["tol"] = tol;
    config["fn"] = fn;
    StringHandle report;
    const symnorm_status status = symnorm_run_check(config.dump().c_str(), &report.ptr);
    if (status != SYMNORM_OK) return fail_usage(symnorm_last_error());
    if (!write_report(report_path, report.ptr)) return kExitUsage;

    const ordered_json r = ordered_json::parse(report.ptr);
    std::printf("check %s  dims %s  trials %ld  seed %llu  tol %g  fn %s\n", theorem.c_str(),
                dims.c_str(), trials, seed, tol, fn.c_str());
    for (const auto& row : r["per_dim"])
        std::printf("  dim %2d: passed %ld  failed %ld  skipped %ld\n", row["dim"].get<int>(),
                    row["passed"].get<long>(), row["failed"].get<long>(),
                    row["skipped"].get<long>());
    const long failed = r["totals"]["failed"].get<long>();
    std::printf("totals: passed %ld  failed %ld  skipped %ld  (%.2fs)\n",
                r["totals"]["passed"].get<long>(), failed, r["totals"]["skipped"].get<long>(),
                r["wall_time"].get<double>());
    for (const auto& failure : r["failures"]) {
        std::printf("failure (replay seed %s):\n",
                    failure["metadata"]["seed"].get<std::string>().c_str());
        print_per_k(failure);
    }
    return failed == 0 ? kExitOk : kExitViolation;
}

int run_repro(const std::string& case_name, const std::string& report_path) {
    StringHandle report;
    const symnorm_status status = symnorm_run_repro(case_name.c_str(), &report.ptr);
    if (status != SYMNORM_OK) return fail_usage(symnorm_last_error());
    if (!write_report(report_path, report.ptr)) return kExitUsage;

    const ordered_json r = ordered_json::parse(report.ptr);
    const ordered_json& result = r["result"];
    std::printf("repro %s\n", case_name.c_str());
    print_per_k(result);
    if (!result["strict_violation_at"].is_null())
        std::printf("strict violation at k = %d\n", result["strict_violation_at"].get<int>());
    const bool as_expected = r["as_expected"].get<bool>();
    std::printf("%s\n", as_expected ? "reproduced as expected" : "DID NOT reproduce");
    return as_expected ? kExitOk : kExitViolation;
}

int run_search(const std::string& target, long budget, unsigned long long seed,
               const std::string& dims, double tol, const std::string& report_path) {
    ordered_json config;
    config["target"] = target;
    config["budget"] = budget;
    config["seed"] = seed;
    config["dims"] = dims;
    config["tol"] = tol;
    StringHandle report;
    const symnorm_status status = symnorm_run_search(config.dump().c_str(), &report.ptr);
    if (status != SYMNORM_OK) return fail_usage(symnorm_last_error());
    if (!write_report(report_path, report.ptr)) return kExitUsage;

    const ordered_json r = ordered_json::parse(report.ptr);
    const bool found = r["witness_found"].get<bool>();
    const bool expected = r["expect_witness"].get<bool>();
    std::printf("search %s  budget %ld  seed %llu\n", target.c_str(), budget, seed);
    std::printf("%s after %ld trials (expected: %s)\n",
                found ? "witness found" : "no witness", r["trials_run"].get<long>(),
                expected ? "witness" : "none");
    if (found) {
        const ordered_json& w = r["witness"];
        std::printf("witness (replay seed %s):\n",
                    w["metadata"]["seed"].get<std::string>().c_str());
        print_per_k(w);
    }
    return found == expected ? kExitOk : kExitViolation;
}

int run_list() {
    StringHandle listing;
    const symnorm_status status = symnorm_list_checks(&listing.ptr);
    if (status != SYMNORM_OK) return fail_usage(symnorm_last_error());
    const ordered_json j = ordered_json::parse(listing.ptr);
    std::printf("checks:\n");
    for (const auto& c : j["checks"])
        std::printf("  %-10s [%s]  %s\n", c["id"].get<std::string>().c_str(),
                    c["scope"].get<std::string>().c_str(), c["summary"].get<std::string>().c_str());
    std::printf("search targets:\n");
    for (const auto& t : j["search_targets"])
        std::printf("  %-28s [%s]  %s\n", t["id"].get<std::string>().c_str(),
                    t["expect_witness"].get<bool>() ? "expect witness" : "expect none",
                    t["summary"].get<std::string>().c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-norm inequality checker"};
    app.require_subcommand(1);

    std::string theorem, fn = "random", dims = "2..8", report_path;
    long trials = 500;
    unsigned long long seed = 42;
    double tol = 1e-9;

    CLI::App* check = app.add_subcommand("check", "run a property suite for one registered check");
    check->add_option("--theorem", theorem, "registered check id (see `list`)")->required();
    check->add_option("--dims", dims, "dimensions, e.g. 2..8 or 2,4,6");
    check->add_option("--trials", trials, "trials per dimension");
    check->add_option("--seed", seed, "master seed");
    check->add_option("--tol", tol, "margin tolerance");
    check->add_option("--fn", fn, "function literal or 'random'");
    check->add_option("--report", report_path, "write the JSON report here");

    std::string case_name;
    CLI::App* repro = app.add_subcommand("repro", "reproduce a fixed counterexample");
    repro->add_option("--case", case_name, "eq2 | shift3 | interlace")->required();
    repro->add_option("--report", report_path, "write the JSON report here");

    std::string target, search_dims = "2..4";
    long budget = 10000;
    unsigned long long search_seed = 7;
    CLI::App* search = app.add_subcommand("search", "randomized search for a strict violation");
    search->add_option("--target", target, "hypothesis-weakened variant (see `list`)")->required();
    search->add_option("--budget", budget, "trial budget");
    search->add_option("--seed", search_seed, "master seed");
    search->add_option("--dims", search_dims, "dimensions, e.g. 2..4");
    search->add_option("--tol", tol, "margin tolerance");
    search->add_option("--report", report_path, "write the JSON report here");

    CLI::App* list = app.add_subcommand("list", "registered checks and search targets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (check->parsed()) return run_check(theorem, dims, trials, seed, tol, fn, report_path);
    if (repro->parsed()) return run_repro(case_name, report_path);
    if (search->parsed())
        return run_search(target, budget, search_seed, search_dims, tol, report_path);
    if (list->parsed()) return run_list();
    return kExitUsage;
}
