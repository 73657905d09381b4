#include "hedonic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hedonic {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: agent count must be >= 1");
    for (Edge& e : edges_) {
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loops are not allowed");
        if (e.w <= 0)
            throw std::invalid_argument("Graph: edge weights must be positive (0 means no edge)");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(edges_[i].u) +
                                        "," + std::to_string(edges_[i].v) + ")");
    }

    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    total_weight_ = 0;
    unweighted_ = true;
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
        total_weight_ += e.w;
        if (e.w != 1) unweighted_ = false;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

Graph Graph::unweighted(int n, const std::vector<std::pair<Agent, Agent>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    return Graph(n, std::move(edges));
}

const std::vector<std::pair<Agent, Weight>>& Graph::neighbors(Agent v) const {
    if (v < 1 || v > n_) throw std::domain_error("Graph::neighbors: agent out of range");
    return adj_[static_cast<std::size_t>(v)];
}

Weight Graph::weight(Agent u, Agent v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::domain_error("Graph::weight: agent out of range");
    const auto& row = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, Weight{0}));
    if (it != row.end() && it->first == v) return it->second;
    return 0;
}

GameInstance::GameInstance(Graph g, int cap, std::int64_t scale)
    : graph(std::move(g)), k(cap), weight_scale(scale) {
    if (k < 2) throw std::invalid_argument("GameInstance: k must be >= 2");
    if (weight_scale < 1) throw std::invalid_argument("GameInstance: weight_scale must be >= 1");
}

}  // namespace hedonic
