#ifndef SYMNORM_HARNESS_HPP
#define SYMNORM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symnorm/theorems.hpp"

namespace symnorm {

struct TrialConfig {
    std::string theorem_id;
    std::vector<int> dims = {2, 3, 4};
    long trials = 100;
    std::uint64_t seed = 0;
    double tol = kVerdictTol;
    std::string function_spec = "random";
    std::string norm_scope; // empty -> the check's registered scope

    void validate() const; // trials >= 1, dims in 1..kMaxDim, tol > 0
};

struct DimTotals {
    int dim = 0;
    long passed = 0, failed = 0, skipped = 0;
};

struct CheckReport {
    TrialConfig config;
    std::vector<DimTotals> per_dim;
    long passed = 0, failed = 0, skipped = 0;
    std::vector<CheckResult> failures; // capped at kMaxStoredFailures, with replay seeds
    double wall_time = 0.0;

    std::string to_json() const;
};

inline constexpr long kMaxStoredFailures = 100;

struct CheckInfo {
    std::string id;
    std::string summary;
    NormScope scope = NormScope::AllNorms;
};

struct SearchInfo {
    std::string id;
    std::string summary;
    bool expect_witness = true;
};

std::vector<CheckInfo> list_checks();
std::vector<SearchInfo> list_search_targets();
std::string list_json(); // both groups, for the C API / CLI

// per-trial key: master seed xor trial index, mixed with the dimension through
// the counter-based generator, so any execution order yields the same stream
std::uint64_t trial_key(std::uint64_t master_seed, int dim, long index);

// one standalone trial; this is the replay path for recorded failures
CheckResult run_trial(const std::string& theorem_id, int dim, std::uint64_t key,
                      const std::string& function_spec, double tol);

CheckReport run_suite(const TrialConfig& config);

struct SearchConfig {
    std::string target;
    long budget = 10000;
    std::uint64_t seed = 0;
    std::vector<int> dims = {2, 3, 4};
    double tol = kVerdictTol;

    void validate() const;
};

struct SearchReport {
    SearchConfig config;
    bool expect_witness = true;
    bool witness_found = false;
    long trials_run = 0;
    std::optional<CheckResult> witness;
    double wall_time = 0.0;

    bool as_expected() const { return witness_found == expect_witness; }
    std::string to_json() const;
};

// randomized search for a strict violation (margin < -1e-6) of a
// hypothesis-weakened claim; "control" drops nothing and expects none
SearchReport search_violation(const SearchConfig& config);

struct ReproReport {
    std::string case_name;
    CheckResult result;
    bool as_expected = false;
    double wall_time = 0.0;

    std::string to_json() const;
};

ReproReport run_repro(const std::string& case_name);

} // namespace symnorm

#endif
