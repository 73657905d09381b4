#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hedonic {

using Agent = int;           // agents are 1-indexed
using Weight = std::int64_t; // exact scaled integer weight

struct Edge {
    Agent u;
    Agent v;
    Weight w;
};

// Undirected weighted social graph on agents 1..n. Weights are strictly
// positive integers: an absent friendship is an absent edge, never a 0-weight
// one, so each game has a single representation.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    static Graph unweighted(int n, const std::vector<std::pair<Agent, Agent>>& pairs);

    int agent_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<Agent, Weight>>& neighbors(Agent v) const;

    // 0 when the edge is absent.
    Weight weight(Agent u, Agent v) const;
    bool has_edge(Agent u, Agent v) const { return weight(u, v) != 0; }

    bool is_unweighted() const { return unweighted_; }
    Weight total_weight() const { return total_weight_; }
    int degree(Agent v) const { return static_cast<int>(neighbors(v).size()); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;  // normalized u < v, sorted by (u, v)
    std::vector<std::vector<std::pair<Agent, Weight>>> adj_;  // sorted by neighbor
    bool unweighted_;
    Weight total_weight_;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
}

// A hedonic game with bounded coalition size: the social graph plus the cap k.
// weight_scale records the power of ten applied to decimal file weights, so
// reported welfare can be rendered back as an exact rational.
struct GameInstance {
    Graph graph;
    int k;
    std::int64_t weight_scale;

    GameInstance(Graph g, int cap, std::int64_t scale = 1);

    int n() const { return graph.agent_count(); }
    bool unweighted() const { return graph.is_unweighted() && weight_scale == 1; }
};

}  // namespace hedonic
