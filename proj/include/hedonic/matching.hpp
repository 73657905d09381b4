#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic {

// A matching of the host graph: pairwise vertex-disjoint edges.
struct Matching {
    std::vector<std::pair<Agent, Agent>> edges;  // normalized u < v, sorted

    std::size_t size() const { return edges.size(); }
    Weight total_weight(const Graph& g) const;
    bool valid_for(const Graph& g) const;
};

// Maximum-cardinality matching (Edmonds blossom). Deterministic: greedy
// ascending initialization plus ascending-order search, so identical inputs
// give identical matchings. Among equal-size matchings the result is
// deterministic but not guaranteed to be the lexicographically smallest edge
// list.
Matching max_cardinality_matching(const Graph& g);

// Maximum-weight matching (primal-dual blossom, O(n^3)), exact on integer
// weights; duals are kept integral by doubling weights internally. Not
// necessarily of maximum cardinality. Deterministic ascending scan order.
Matching max_weight_matching(const Graph& g);

namespace detail {

// Index-based engines on vertices 0..n-1 (used by the merged-graph rounds).
// Return mate[] with -1 for unmatched.
std::vector<int> max_cardinality_mate(int n, const std::vector<std::pair<int, int>>& edges);
std::vector<int> max_weight_mate(int n, const std::vector<std::tuple<int, int, Weight>>& edges);

}  // namespace detail

}  // namespace hedonic
