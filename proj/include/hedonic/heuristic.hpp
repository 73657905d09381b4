#pragma once

#include <optional>

#include "hedonic/graph.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/rng.hpp"

namespace hedonic {

struct HeuristicStats {
    int applied_blocks = 0;   // blocking coalitions applied across all restarts
    int restarts = 0;
    long long sampled = 0;    // random coalition draws
    int full_passes = 0;      // exhaustive certification / fallback scans
};

struct HeuristicResult {
    bool success = false;
    std::optional<Partition> partition;  // certified core member when success
    HeuristicStats stats;
};

// The random-restart core heuristic: start from singletons, repeatedly apply a
// randomly found strongly blocking coalition. Success is declared only after a
// full scan certifies that no strongly blocking coalition of size 2..k exists.
// An applied update whose resulting partition was already seen bumps a
// staleness counter (reset by any novel partition); reaching restart_threshold
// resets to singletons without clearing the seen set. Exceeding max_restarts
// is an explicit failure, not an error.
HeuristicResult core_heuristic(const GameInstance& game, RngStream& rng,
                               int restart_threshold = 100, int max_restarts = 50);

}  // namespace hedonic
