#include <doctest.h>

#include <json.hpp>

#include "symnorm/harness.hpp"

using namespace symnorm;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string strip_wall_time(const std::string& report) {
    ordered_json j = ordered_json::parse(report);
    j.erase("wall_time");
    return j.dump();
}

} // namespace

TEST_CASE("every registered check passes a small smoke suite") {
    for (const auto& info : list_checks()) {
        TrialConfig config;
        config.theorem_id = info.id;
        config.dims = {1, 2, 3};
        config.trials = 15;
        config.seed = 20240521;
        config.tol = 1e-8;
        const auto report = run_suite(config);
        INFO("check ", info.id);
        CHECK(report.failed == 0);
        for (const auto& d : report.per_dim)
            CHECK(d.passed + d.failed + d.skipped == config.trials);
    }
}

TEST_CASE("identical configs produce identical reports modulo wall time") {
    TrialConfig config;
    config.theorem_id = "thm2.1";
    config.dims = {2, 4};
    config.trials = 20;
    config.seed = 99;
    const std::string a = strip_wall_time(run_suite(config).to_json());
    const std::string b = strip_wall_time(run_suite(config).to_json());
    CHECK(a == b);
}

TEST_CASE("trial keys are independent of batch layout") {
    // running trial 7 inside a suite equals replaying it standalone
    TrialConfig config;
    config.theorem_id = "lemma2";
    config.dims = {3};
    config.trials = 8;
    config.seed = 1234;
    const auto report = run_suite(config);
    CHECK(report.passed == 8);
    const auto direct = run_trial("lemma2", 3, trial_key(1234, 3, 7), "random", config.tol);
    CHECK(direct.holds);
    // a second replay is bit-identical
    const auto again = run_trial("lemma2", 3, trial_key(1234, 3, 7), "random", config.tol);
    CHECK(direct.to_json() == again.to_json());
}

TEST_CASE("unknown ids list what is registered") {
    TrialConfig config;
    config.theorem_id = "thm9.9";
    try {
        run_suite(config);
        FAIL("expected an unknown-id error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownId);
        CHECK(std::string(e.what()).find("thm2.1") != std::string::npos);
    }
    SearchConfig sc;
    sc.target = "nothing";
    CHECK_THROWS_AS(search_violation(sc), Error);
}

TEST_CASE("config validation") {
    TrialConfig config;
    config.theorem_id = "thm2.1";
    config.trials = 0;
    CHECK_THROWS_AS(run_suite(config), Error);
    config.trials = 1;
    config.dims = {65};
    CHECK_THROWS_AS(run_suite(config), Error);
    config.dims = {2};
    config.tol = 0.0;
    CHECK_THROWS_AS(run_suite(config), Error);
    // pinned fn literal works
    config.tol = 1e-8;
    config.function_spec = "power:0.5";
    CHECK(run_suite(config).failed == 0);
    // scope override must match the registered scope
    config.norm_scope = "trace";
    CHECK_THROWS_AS(run_suite(config), Error);
}

TEST_CASE("searches find the expected witnesses quickly") {
    SUBCASE("drop_concavity") {
        SearchConfig config;
        config.target = "drop_concavity";
        config.budget = 2000;
        config.seed = 7;
        const auto report = search_violation(config);
        CHECK(report.witness_found);
        CHECK(report.as_expected());
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->worst_margin() < -1e-6);
    }
    SUBCASE("intermediate_abs_sum") {
        SearchConfig config;
        config.target = "intermediate_abs_sum";
        config.budget = 4000;
        config.seed = 7;
        const auto report = search_violation(config);
        CHECK(report.witness_found);
        REQUIRE(report.witness.has_value());
        // the witness carries its operands for standalone checking
        const ordered_json meta = ordered_json::parse(report.witness->metadata_json);
        CHECK(meta.contains("A"));
        CHECK(meta.contains("fn"));
    }
    SUBCASE("drop_e_convexity_intermediate certifies a non-e-convex witness") {
        SearchConfig config;
        config.target = "drop_e_convexity_intermediate";
        config.budget = 4000;
        config.seed = 7;
        const auto report = search_violation(config);
        CHECK(report.witness_found);
        REQUIRE(report.witness.has_value());
        const ordered_json meta = ordered_json::parse(report.witness->metadata_json);
        CHECK(meta["e_convex"] == false);
    }
    SUBCASE("control finds nothing in a modest budget") {
        SearchConfig config;
        config.target = "control";
        config.budget = 300;
        config.seed = 7;
        const auto report = search_violation(config);
        CHECK_FALSE(report.witness_found);
        CHECK(report.as_expected());
        CHECK(report.trials_run == 300);
    }
}

TEST_CASE("search witnesses replay from their recorded seed") {
    SearchConfig config;
    config.target = "drop_normality_thm3.4";
    config.budget = 4000;
    config.seed = 11;
    const auto report = search_violation(config);
    REQUIRE(report.witness_found);
    const ordered_json meta = ordered_json::parse(report.witness->metadata_json);
    const std::string seed_hex = meta["seed"].get<std::string>();
    const std::uint64_t key = std::stoull(seed_hex, nullptr, 16);
    CHECK(key == trial_key(config.seed, report.witness->dim,
                           meta["trial"].get<long>()));
}

TEST_CASE("repro runner wires expectations") {
    for (const char* name : {"eq2", "shift3", "interlace"}) {
        const auto report = run_repro(name);
        INFO("case ", name);
        CHECK(report.as_expected);
    }
    CHECK_THROWS_AS(run_repro("bogus"), Error);
}

TEST_CASE("list output carries both registries") {
    const ordered_json j = ordered_json::parse(list_json());
    CHECK(j["checks"].size() >= 17);
    CHECK(j["search_targets"].size() == 5);
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["id"] == "thm3.4") found = true;
    CHECK(found);
}
