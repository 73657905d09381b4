#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hedonic/blocking.hpp"
#include "hedonic/graph.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/rng.hpp"

namespace hedonic {

// Run record shared by the constructive solvers. outer_iterations counts
// applied improving steps (blocking coalitions, moves, or merges);
// welfare_trajectory holds u(P) after each of them.
struct SolverStats {
    int outer_iterations = 0;
    std::vector<Weight> welfare_trajectory;
    int removed_agents = 0;  // agents frozen out of the active set V'
};

// Subset scan order for find_blocking_coalition: deterministic lexicographic
// (size-ascending, then lexicographic over sorted agent ids) or a seeded
// shuffle of the same candidate set.
struct ScanPolicy {
    bool shuffled = false;
    std::uint64_t seed = 0;

    static ScanPolicy lexicographic() { return {false, 0}; }
    static ScanPolicy seeded(std::uint64_t seed) { return {true, seed}; }
};

// First coalition of size 2..k drawn from the active set (all agents when
// empty) that blocks p under the mode; nullopt certifies stability over that
// active set.
std::optional<BlockingWitness> find_blocking_coalition(
    const GameInstance& game, const Partition& p, const BlockingMode& mode,
    const ScanPolicy& scan = ScanPolicy::lexicographic(),
    const std::vector<Agent>& active = {});

// Finding a 3-bounded partition in the core (unweighted, k = 3): repeatedly
// applies strongly blocking coalitions of size 2..3, freezing completed
// triangles. Terminates within |E| + |V|/3 applied steps.
std::pair<Partition, SolverStats> find_core_k3(const GameInstance& game);

// The eps_a-core solver (unweighted, k > 3): applies coalitions whose members
// all gain more than eps_a, freezing coalitions where every member reaches
// W(v,S) >= k-1-eps_a. Guaranteed to terminate for eps_a >= floor(k/2)-1;
// smaller eps_a runs under the iteration budget.
std::pair<Partition, SolverStats> find_eps_a_core(const GameInstance& game, const Rational& eps_a);

// The multiplicative variant: applies coalitions with W(v,S) > eps_m * u(v,P)
// for every member, freezing on W(v,S) >= (k-1)/eps_m. For eps_m = 2 welfare
// strictly increases with every applied coalition.
std::pair<Partition, SolverStats> find_eps_m_core(const GameInstance& game, const Rational& eps_m);

// Contractual strict core by greedy pair merging from singletons: merges any
// two blocks that fit within k and strictly raise welfare. At most n-1 merges.
std::pair<Partition, SolverStats> find_csc(const GameInstance& game);

// Nash stability: repeatedly moves a single agent to a coalition (of size at
// most k-1) where it strictly gains. At most |E| moves on unweighted inputs;
// weighted inputs are accepted since every move still raises welfare.
std::pair<Partition, SolverStats> find_nash_stable(const GameInstance& game);

// Arbitrary-but-maximal partitions: processes the preferred merge list (pairs
// of agents; "merge the block containing a with the block containing b"),
// applying each merge that is legal and strictly improving, then keeps merging
// by deterministic scan until no pair of blocks can improve welfare within k.
Partition arbmax(const GameInstance& game,
                 const std::vector<std::pair<Agent, Agent>>& preferred_merges);

// Same contract with a seeded-random merge order.
Partition arbmax_random(const GameInstance& game, RngStream& rng);

}  // namespace hedonic
