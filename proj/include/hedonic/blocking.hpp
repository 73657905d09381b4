#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

// W(v,S): total weight from v to its neighbors inside the coalition S.
// Requires v in S; S need not be a block of any partition.
Weight coalition_weight(const Graph& g, Agent v, const std::vector<Agent>& coalition);

// u(v,P) = W(v, block_of(v)).
Weight utility(const GameInstance& game, Agent v, const Partition& p);

// u(P) = sum of all utilities = 2 * (total weight of intra-block edges).
Weight social_welfare(const GameInstance& game, const Partition& p);

// Blocking predicate family. strong: every member strictly gains. weak: every
// member weakly gains, at least one strictly. eps_a / eps_m: the additive and
// multiplicative core relaxations (W > u + eps, W > eps * u), compared exactly.
struct BlockingMode {
    enum class Kind { strong, weak, eps_a, eps_m };

    Kind kind = Kind::strong;
    Rational eps{0, 1};

    static BlockingMode strong() { return {Kind::strong, Rational{0, 1}}; }
    static BlockingMode weak() { return {Kind::weak, Rational{0, 1}}; }
    static BlockingMode eps_a(Rational eps) { return {Kind::eps_a, eps}; }
    static BlockingMode eps_m(Rational eps) { return {Kind::eps_m, eps}; }

    std::string name() const;
};

struct WitnessEntry {
    Agent agent;
    Weight coalition_value;   // W(v,S)
    Weight current_utility;   // u(v,P)
};

// Certificate that a coalition blocks a partition under some mode. The
// recorded pairs are re-checkable against the graph and partition.
struct BlockingWitness {
    std::vector<Agent> coalition;
    BlockingMode mode;
    std::vector<WitnessEntry> per_agent;
};

// Returns a witness iff the coalition blocks p under the given mode.
// Throws std::domain_error when |s| exceeds the game's k or s is empty.
std::optional<BlockingWitness> blocks(const GameInstance& game,
                                      const std::vector<Agent>& coalition,
                                      const Partition& p,
                                      const BlockingMode& mode);

// Re-checks that a recorded witness is internally consistent and still
// certifies blocking of p.
bool witness_valid(const GameInstance& game, const Partition& p, const BlockingWitness& w);

}  // namespace hedonic
