#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/heuristic.hpp"

namespace hedonic {

// One graph family of a campaign. Text forms: "gnp:<p>", "uniform_tree",
// "watts_strogatz:<k_nbrs>:<p_rewire>", "fixture:<name>".
struct FamilySpec {
    enum class Kind { gnp, uniform_tree, watts_strogatz, fixture };

    Kind kind = Kind::gnp;
    double p = 0.5;            // gnp edge probability
    int neighbors = 5;         // watts_strogatz ring degree parameter
    double rewire = 0.5;       // watts_strogatz rewiring probability
    std::string fixture;       // fixture name

    std::string label() const;
    static FamilySpec parse(const std::string& text);
};

struct CampaignConfig {
    std::uint64_t master_seed = 0;
    int n = 30;
    int k = 5;
    int instances_per_family = 0;
    int restart_threshold = 100;
    int max_restarts = 50;
    bool verify_successes = true;
    int workers = 0;  // 0 = HEDONIC_WORKERS env var, else hardware concurrency
    std::vector<FamilySpec> families;
};

// Key = value lines; '#' starts a comment. Recognized keys: seed, n, k,
// instances, families, restart_threshold, max_restarts, verify, workers.
CampaignConfig parse_campaign_config(const std::string& text);

struct InstanceOutcome {
    int index = 0;             // per-family instance index
    std::uint64_t seed = 0;    // derived sub-seed (reproduces the instance)
    bool success = false;
    bool verified = false;     // success re-checked by the membership oracle
    int applied_blocks = 0;
    int restarts = 0;
};

struct FamilyReport {
    FamilySpec family;
    int instances = 0;
    int successes = 0;
    int failures = 0;
    long long restarts_total = 0;
    double mean_applied_blocks = 0.0;
    std::vector<InstanceOutcome> failure_detail;  // failed instances with seeds
};

struct CampaignReport {
    std::uint64_t master_seed = 0;
    int n = 0;
    int k = 0;
    std::string seed_derivation;  // how instance seeds derive from the master
    std::vector<FamilyReport> families;
};

// Deterministic given the config (worker count does not affect the report).
// Instance i of family f uses sub-seed derive_subseed(master, f * instances + i);
// failures are reported, never thrown.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace hedonic
