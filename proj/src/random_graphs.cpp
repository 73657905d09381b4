#include "hedonic/random_graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

Graph gen_gnp(int n, double p, RngStream& rng) {
    std::vector<std::pair<Agent, Agent>> pairs;
    for (Agent u = 1; u <= n; ++u)
        for (Agent v = u + 1; v <= n; ++v)
            if (rng.bernoulli(p)) pairs.emplace_back(u, v);
    return Graph::unweighted(n, pairs);
}

Graph gen_uniform_tree(int n, RngStream& rng) {
    if (n < 1) throw std::domain_error("gen_uniform_tree: n must be >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph::unweighted(2, {{1, 2}});

    std::vector<Agent> prufer(static_cast<std::size_t>(n - 2));
    for (auto& x : prufer) x = static_cast<Agent>(rng.uniform_int(1, n));

    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (Agent x : prufer) ++degree[static_cast<std::size_t>(x)];

    std::vector<std::pair<Agent, Agent>> pairs;
    std::set<Agent> leaves;
    for (Agent v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (Agent x : prufer) {
        const Agent leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        pairs.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const Agent a = *leaves.begin();
    const Agent b = *std::next(leaves.begin());
    pairs.emplace_back(a, b);
    return Graph::unweighted(n, pairs);
}

bool graph_connected(const Graph& g) {
    const int n = g.agent_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Agent> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Agent v = stack.back();
        stack.pop_back();
        for (const auto& [u, w] : g.neighbors(v)) {
            (void)w;
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

Graph gen_watts_strogatz(int n, int k_nbrs, double p_rewire, RngStream& rng, int max_retries) {
    const int per_side = k_nbrs / 2;
    if (n < 3 || per_side < 1 || 2 * per_side >= n)
        throw std::domain_error("gen_watts_strogatz: need 3 <= k_nbrs < n with k_nbrs >= 2");

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // adjacency set on normalized pairs
        std::set<std::pair<Agent, Agent>> edges;
        auto norm = [](Agent a, Agent b) {
            return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        for (Agent u = 1; u <= n; ++u)
            for (int j = 1; j <= per_side; ++j) edges.insert(norm(u, (u + j - 1) % n + 1));

        // rewire lane by lane, node by node
        for (int j = 1; j <= per_side; ++j) {
            for (Agent u = 1; u <= n; ++u) {
                const Agent v = (u + j - 1) % n + 1;
                if (!edges.count(norm(u, v))) continue;  // already rewired away
                if (!rng.bernoulli(p_rewire)) continue;
                // uniform replacement endpoint avoiding self-loops and duplicates
                Agent w = 0;
                bool found = false;
                for (int tries = 0; tries < 4 * n; ++tries) {
                    w = static_cast<Agent>(rng.uniform_int(1, n));
                    if (w != u && !edges.count(norm(u, w))) {
                        found = true;
                        break;
                    }
                }
                if (!found) continue;  // u is saturated, keep the lattice edge
                edges.erase(norm(u, v));
                edges.insert(norm(u, w));
            }
        }

        std::vector<std::pair<Agent, Agent>> pairs(edges.begin(), edges.end());
        Graph g = Graph::unweighted(n, pairs);
        if (graph_connected(g)) return g;
    }
    throw ConvergenceError("gen_watts_strogatz: no connected sample within the retry budget");
}

}  // namespace hedonic
