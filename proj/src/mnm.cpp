#include "hedonic/mnm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hedonic {

int MergedGraph::node_index_of(Agent representative) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].front() == representative) return static_cast<int>(i);
    return -1;
}

Weight MergedGraph::edge_weight(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& [a, b, w] : edges)
        if (a == i && b == j) return w;
    return 0;
}

bool MergedGraph::respects_cap(int k) const {
    for (const auto& [a, b, w] : edges) {
        (void)w;
        if (nodes[static_cast<std::size_t>(a)].size() + nodes[static_cast<std::size_t>(b)].size() >
            static_cast<std::size_t>(k))
            return false;
    }
    return true;
}

MergedGraph initial_merged_graph(const Graph& g) {
    MergedGraph mg;
    mg.round = 1;
    mg.nodes.reserve(static_cast<std::size_t>(g.agent_count()));
    for (Agent v = 1; v <= g.agent_count(); ++v) mg.nodes.push_back({v});
    for (const Edge& e : g.edges()) mg.edges.emplace_back(e.u - 1, e.v - 1, e.w);
    return mg;
}

namespace {

Weight cross_weight(const Graph& original, const std::vector<Agent>& a,
                    const std::vector<Agent>& b) {
    Weight total = 0;
    for (Agent x : a)
        for (const auto& [nbr, w] : original.neighbors(x))
            if (std::binary_search(b.begin(), b.end(), nbr)) total += w;
    return total;
}

}  // namespace

MergedGraph merge_round(const Graph& original, const MergedGraph& mg, const Matching& m, int k) {
    const int count = static_cast<int>(mg.nodes.size());
    std::vector<int> partner(static_cast<std::size_t>(count), -1);
    for (auto [ra, rb] : m.edges) {
        const int i = mg.node_index_of(ra);
        const int j = mg.node_index_of(rb);
        if (i < 0 || j < 0 || i == j)
            throw std::domain_error("merge_round: matched pair is not a node pair of the graph");
        if (mg.edge_weight(i, j) == 0)
            throw std::domain_error("merge_round: matched pair is not an edge of the graph");
        if (partner[static_cast<std::size_t>(i)] != -1 || partner[static_cast<std::size_t>(j)] != -1)
            throw std::domain_error("merge_round: matching reuses a node");
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }

    MergedGraph next;
    next.round = mg.round + 1;
    // old node index -> new node index; merged pairs map to one shared node
    std::vector<int> renumber(static_cast<std::size_t>(count), -1);
    for (int i = 0; i < count; ++i) {
        const int j = partner[static_cast<std::size_t>(i)];
        if (j != -1 && j < i) {
            renumber[static_cast<std::size_t>(i)] = renumber[static_cast<std::size_t>(j)];
            continue;
        }
        std::vector<Agent> members = mg.nodes[static_cast<std::size_t>(i)];
        if (j != -1) {
            const auto& other = mg.nodes[static_cast<std::size_t>(j)];
            members.insert(members.end(), other.begin(), other.end());
            std::sort(members.begin(), members.end());
        }
        renumber[static_cast<std::size_t>(i)] = static_cast<int>(next.nodes.size());
        next.nodes.push_back(std::move(members));
    }

    // Contracted nodes keep the by-min-member ordering.
    std::vector<int> order(next.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return next.nodes[static_cast<std::size_t>(a)].front() <
               next.nodes[static_cast<std::size_t>(b)].front();
    });
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    {
        std::vector<std::vector<Agent>> sorted_nodes(next.nodes.size());
        for (std::size_t i = 0; i < next.nodes.size(); ++i)
            sorted_nodes[static_cast<std::size_t>(position[i])] = std::move(next.nodes[i]);
        next.nodes = std::move(sorted_nodes);
        for (int i = 0; i < count; ++i)
            renumber[static_cast<std::size_t>(i)] =
                position[static_cast<std::size_t>(renumber[static_cast<std::size_t>(i)])];
    }

    std::map<std::pair<int, int>, char> wanted;
    for (const auto& [a, b, w] : mg.edges) {
        (void)w;
        const bool a_matched = partner[static_cast<std::size_t>(a)] != -1;
        const bool b_matched = partner[static_cast<std::size_t>(b)] != -1;
        if (a_matched && b_matched) continue;  // never joins two same-round merges
        int ia = renumber[static_cast<std::size_t>(a)];
        int ib = renumber[static_cast<std::size_t>(b)];
        if (ia == ib) continue;
        if (ia > ib) std::swap(ia, ib);
        if (next.nodes[static_cast<std::size_t>(ia)].size() +
                next.nodes[static_cast<std::size_t>(ib)].size() >
            static_cast<std::size_t>(k))
            continue;
        wanted[{ia, ib}] = 1;
    }
    next.edges.reserve(wanted.size());
    for (const auto& [key, unused] : wanted) {
        (void)unused;
        const Weight w = cross_weight(original, next.nodes[static_cast<std::size_t>(key.first)],
                                      next.nodes[static_cast<std::size_t>(key.second)]);
        next.edges.emplace_back(key.first, key.second, w);
    }
    return next;
}

Weight MnMTrace::total_matched_weight() const {
    Weight total = 0;
    for (const auto& r : rounds) total += r.matched_weight;
    return total;
}

std::pair<Partition, MnMTrace> match_and_merge(const GameInstance& game) {
    const Graph& g = game.graph;
    MergedGraph mg = initial_merged_graph(g);
    MnMTrace trace;
    const bool unweighted = game.unweighted();

    for (int l = 1; l <= game.k - 1; ++l) {
        MnMRound record;
        record.round = l;
        record.node_count = static_cast<int>(mg.nodes.size());
        record.edge_count = static_cast<int>(mg.edges.size());

        std::vector<int> mate;
        if (unweighted) {
            std::vector<std::pair<int, int>> idx_edges;
            idx_edges.reserve(mg.edges.size());
            for (const auto& [a, b, w] : mg.edges) {
                (void)w;
                idx_edges.emplace_back(a, b);
            }
            mate = detail::max_cardinality_mate(static_cast<int>(mg.nodes.size()), idx_edges);
        } else {
            mate = detail::max_weight_mate(static_cast<int>(mg.nodes.size()), mg.edges);
        }

        Matching m;
        for (int i = 0; i < static_cast<int>(mate.size()); ++i) {
            const int j = mate[static_cast<std::size_t>(i)];
            if (j > i) {
                m.edges.emplace_back(mg.representative(i), mg.representative(j));
                record.matched_weight += mg.edge_weight(i, j);
            }
        }
        std::sort(m.edges.begin(), m.edges.end());
        record.matching = m;
        trace.rounds.push_back(record);

        mg = merge_round(g, mg, m, game.k);
    }

    Partition p(g.agent_count(), mg.nodes);
    return {std::move(p), std::move(trace)};
}

}  // namespace hedonic
