#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hedonic/blocking.hpp"
#include "hedonic/graph.hpp"
#include "hedonic/matching.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

// Desk-scale guards. Full partition enumeration refuses n above 14; subset
// based membership checks refuse instances whose size-2..k subset count
// exceeds a few million (n = 30, k = 5 fits comfortably). Both overridable.
inline constexpr int kEnumerationGuardN = 14;
inline constexpr int kMembershipGuardN = 30;

// Streams every partition of {1..n} into blocks of size <= k, exactly once,
// in a fixed restricted-growth order.
class PartitionEnumerator {
public:
    PartitionEnumerator(int n, int k, bool override_guard = false);

    // Advances to the next partition; false when exhausted.
    bool advance();
    // Valid after a successful advance().
    Partition current() const;
    // Raw restricted-growth state (0-based block id per 0-based agent).
    const std::vector<int>& assignment() const { return assign_; }
    int block_count() const { return blocks_; }

    int n() const { return n_; }
    int k() const { return k_; }

private:
    bool place_from(int agent, int min_block);

    int n_;
    int k_;
    std::vector<int> assign_;
    std::vector<int> block_size_;
    int blocks_ = 0;
    bool fresh_ = true;
    bool done_ = false;
};

PartitionEnumerator enumerate_partitions(int n, int k, bool override_guard = false);

// Welfare-maximal k-bounded partition by exhaustive enumeration; ties broken
// by enumeration order (first optimum wins).
std::pair<Partition, Weight> opt_max_util(const GameInstance& game, bool override_guard = false);

struct EmptinessCertificate {
    bool empty = false;
    // Nonempty case: a stable partition.
    std::optional<Partition> witness;
    // Empty case: a few (partition, blocking witness) samples; every sampled
    // witness re-checks under the blocking predicates.
    std::vector<std::pair<Partition, BlockingWitness>> blocked_samples;
};

// Decides core / strict-core emptiness exhaustively. Internally a canonical
// DFS over partition prefixes with sound pruning (a prefix is cut only when
// some coalition of already-placed agents provably blocks every completion);
// verdicts coincide with plain enumeration.
EmptinessCertificate core_emptiness(const GameInstance& game, bool override_guard = false);
EmptinessCertificate sc_emptiness(const GameInstance& game, bool override_guard = false);

enum class StabilityConcept { core, strict_core, csc, eps_a_core, eps_m_core, nash };

struct ConceptQuery {
    StabilityConcept kind = StabilityConcept::core;
    Rational eps{0, 1};

    static ConceptQuery core() { return {StabilityConcept::core, Rational{0, 1}}; }
    static ConceptQuery strict_core() { return {StabilityConcept::strict_core, Rational{0, 1}}; }
    static ConceptQuery csc() { return {StabilityConcept::csc, Rational{0, 1}}; }
    static ConceptQuery eps_a(Rational eps) { return {StabilityConcept::eps_a_core, eps}; }
    static ConceptQuery eps_m(Rational eps) { return {StabilityConcept::eps_m_core, eps}; }
    static ConceptQuery nash() { return {StabilityConcept::nash, Rational{0, 1}}; }
};

// An improving unilateral move (Nash violation).
struct NashMove {
    Agent agent;
    std::vector<Agent> target_block;  // empty = move to a singleton
    Weight current_utility;
    Weight target_utility;
};

struct MembershipResult {
    bool member = false;
    std::optional<BlockingWitness> blocking;  // core/sc/eps/csc violations
    std::optional<NashMove> move;             // nash violations
};

// Brute-force membership check for the given stability concept; enumerates
// all size-2..k coalitions (or all unilateral moves for nash).
MembershipResult verify_membership(const GameInstance& game, const Partition& p,
                                   const ConceptQuery& query, bool override_guard = false);

// Partitions the edge set of K_n into exactly n pairwise disjoint matchings
// (the regular-polygon parallel-class construction): class c holds all pairs
// {i,j} with i+j = c (mod n). Odd n gives n matchings of size (n-1)/2; even n
// gives n/2 of size n/2 and n/2 of size (n-2)/2. Requires n >= 3.
std::vector<Matching> kn_matching_partition(int n);

}  // namespace hedonic
