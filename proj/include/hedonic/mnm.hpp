#pragma once

#include <tuple>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/matching.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

// The contracted graph G_l maintained across Match-and-Merge rounds. Each node
// is the set of original agents merged into it; a node is identified by its
// representative, the smallest member. Edges only ever connect nodes whose
// combined size fits the cap, so every matching of the merged graph merges
// legally.
//
// Edge semantics, round by round: merging a matched pair (A,B) creates a node
// N = A∪B that inherits an edge to a carried node C exactly when A or B was
// adjacent to C; two nodes merged in the same round never become adjacent, and
// edges between two carried nodes persist unchanged. An inherited edge's
// weight is the total original weight between the two member sets, which makes
// the final welfare exactly twice the sum of all merged matching weights.
struct MergedGraph {
    int round = 1;  // l, 1-based
    std::vector<std::vector<Agent>> nodes;           // member sets, sorted by min member
    std::vector<std::tuple<int, int, Weight>> edges;  // node-index pairs i<j, sorted

    int node_index_of(Agent representative) const;   // -1 when absent
    Agent representative(int index) const { return nodes[static_cast<std::size_t>(index)].front(); }
    Weight edge_weight(int i, int j) const;           // 0 when absent
    bool respects_cap(int k) const;
};

MergedGraph initial_merged_graph(const Graph& g);

// One merging phase: contracts every matched pair of mg (pairs given as
// representative agents). Throws std::domain_error if m is not a matching of
// mg. Edges whose endpoints' combined member count would exceed k are dropped.
MergedGraph merge_round(const Graph& original, const MergedGraph& mg, const Matching& m, int k);

// Audit record of one MnM round.
struct MnMRound {
    int round = 0;
    int node_count = 0;
    int edge_count = 0;
    Matching matching;        // representative pairs matched in G_l
    Weight matched_weight = 0;  // total merged-edge weight of the round
};

struct MnMTrace {
    std::vector<MnMRound> rounds;  // exactly k-1 entries

    Weight total_matched_weight() const;
};

// Algorithm: k-1 rounds of maximum (weight) matching and contraction.
// Unweighted instances use maximum-cardinality matchings, weighted instances
// maximum-weight matchings. The result is always a valid k-bounded partition
// with u(P) = 2 * trace.total_matched_weight().
std::pair<Partition, MnMTrace> match_and_merge(const GameInstance& game);

}  // namespace hedonic
