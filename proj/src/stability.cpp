#include "hedonic/stability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hedonic/detail/subsets.hpp"
#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

int default_budget(const GameInstance& game) {
    return 10 * (game.graph.edge_count() + game.n());
}

[[noreturn]] void budget_exhausted(const char* who) {
    throw ConvergenceError(std::string(who) + ": iteration budget exhausted without convergence");
}

}  // namespace

std::optional<BlockingWitness> find_blocking_coalition(const GameInstance& game,
                                                       const Partition& p,
                                                       const BlockingMode& mode,
                                                       const ScanPolicy& scan,
                                                       const std::vector<Agent>& active) {
    std::vector<Agent> pool = active.empty() ? detail::agents_1_to(game.n()) : active;
    std::sort(pool.begin(), pool.end());

    // utilities against the current partition, computed once per scan
    std::vector<Weight> u(static_cast<std::size_t>(game.n()) + 1, 0);
    for (const auto& block : p.blocks())
        for (Agent v : block) u[static_cast<std::size_t>(v)] = coalition_weight(game.graph, v, block);

    auto test = [&](const std::vector<Agent>& s) -> bool {
        bool any_strict = false;
        for (Agent v : s) {
            Weight in_s = 0;
            for (Agent x : s)
                if (x != v) in_s += game.graph.weight(v, x);
            const Weight cur = u[static_cast<std::size_t>(v)];
            switch (mode.kind) {
                case BlockingMode::Kind::strong:
                    if (in_s <= cur) return false;
                    break;
                case BlockingMode::Kind::weak:
                    if (in_s < cur) return false;
                    if (in_s > cur) any_strict = true;
                    break;
                case BlockingMode::Kind::eps_a:
                    if (!exceeds_plus(in_s, cur, mode.eps)) return false;
                    break;
                case BlockingMode::Kind::eps_m:
                    if (!exceeds_times(in_s, cur, mode.eps)) return false;
                    break;
            }
        }
        return mode.kind != BlockingMode::Kind::weak || any_strict;
    };

    std::optional<std::vector<Agent>> hit;
    if (!scan.shuffled) {
        hit = detail::scan_coalitions(pool, game.k, test);
    } else {
        std::vector<std::vector<Agent>> candidates;
        detail::scan_coalitions(pool, game.k, [&](const std::vector<Agent>& s) {
            candidates.push_back(s);
            return false;
        });
        RngStream rng(scan.seed);
        rng.shuffle(candidates);
        for (const auto& s : candidates)
            if (test(s)) {
                hit = s;
                break;
            }
    }
    if (!hit) return std::nullopt;
    return blocks(game, *hit, p, mode);
}

namespace {

// Shared outer loop of Algorithms 2/3 and the eps_m variant: apply the first
// blocking coalition over the active set, freeze when the rule fires, restart
// from the top.
template <typename FreezeRule>
std::pair<Partition, SolverStats> improving_loop(const GameInstance& game,
                                                 const BlockingMode& mode,
                                                 FreezeRule&& freeze, const char* who) {
    Partition p = Partition::singletons(game.n());
    SolverStats stats;
    std::vector<char> active(static_cast<std::size_t>(game.n()) + 1, 1);
    std::vector<Agent> pool = detail::agents_1_to(game.n());
    const int budget = default_budget(game);

    for (;;) {
        auto witness = find_blocking_coalition(game, p, mode, ScanPolicy::lexicographic(), pool);
        if (!witness) break;
        if (stats.outer_iterations >= budget) budget_exhausted(who);
        p = p.break_off(witness->coalition);
        ++stats.outer_iterations;
        stats.welfare_trajectory.push_back(social_welfare(game, p));
        if (freeze(*witness)) {
            for (Agent v : witness->coalition) active[static_cast<std::size_t>(v)] = 0;
            stats.removed_agents += static_cast<int>(witness->coalition.size());
            pool.clear();
            for (Agent v = 1; v <= game.n(); ++v)
                if (active[static_cast<std::size_t>(v)]) pool.push_back(v);
        }
    }
    return {std::move(p), std::move(stats)};
}

}  // namespace

std::pair<Partition, SolverStats> find_core_k3(const GameInstance& game) {
    if (!game.unweighted())
        throw std::domain_error("find_core_k3: defined for unweighted instances only");
    if (game.k != 3) throw std::domain_error("find_core_k3: requires k = 3");

    return improving_loop(game, BlockingMode::strong(), [&](const BlockingWitness& w) {
        if (w.coalition.size() != 3) return false;
        return game.graph.has_edge(w.coalition[0], w.coalition[1]) &&
               game.graph.has_edge(w.coalition[0], w.coalition[2]) &&
               game.graph.has_edge(w.coalition[1], w.coalition[2]);
    }, "find_core_k3");
}

std::pair<Partition, SolverStats> find_eps_a_core(const GameInstance& game, const Rational& eps_a) {
    if (!game.unweighted())
        throw std::domain_error("find_eps_a_core: defined for unweighted instances only");
    if (game.k <= 3) throw std::domain_error("find_eps_a_core: requires k > 3");

    const Weight cap = game.k - 1;
    return improving_loop(game, BlockingMode::eps_a(eps_a), [&](const BlockingWitness& w) {
        // freeze when every member reached W(v,S) >= k-1-eps_a
        for (const auto& entry : w.per_agent) {
            if (static_cast<__int128>(entry.coalition_value) * eps_a.den + eps_a.num <
                static_cast<__int128>(cap) * eps_a.den)
                return false;
        }
        return true;
    }, "find_eps_a_core");
}

std::pair<Partition, SolverStats> find_eps_m_core(const GameInstance& game, const Rational& eps_m) {
    if (!game.unweighted())
        throw std::domain_error("find_eps_m_core: defined for unweighted instances only");
    if (eps_m.num == 0) throw std::domain_error("find_eps_m_core: eps_m must be positive");

    const Weight cap = game.k - 1;
    return improving_loop(game, BlockingMode::eps_m(eps_m), [&](const BlockingWitness& w) {
        // freeze when every member reached W(v,S) >= (k-1)/eps_m
        for (const auto& entry : w.per_agent)
            if (!at_least_quotient(entry.coalition_value, cap, eps_m)) return false;
        return true;
    }, "find_eps_m_core");
}

namespace {

Weight cross_block_weight(const Graph& g, const std::vector<Agent>& a,
                          const std::vector<Agent>& b) {
    Weight total = 0;
    for (Agent x : a)
        for (Agent y : b) total += g.weight(x, y);
    return total;
}

// One maximal-merge sweep: merges the first (by lexicographic block-index
// scan) pair of blocks that fits in k and strictly raises welfare. Returns
// false when no such pair exists.
bool merge_once(const GameInstance& game, Partition& p) {
    const auto& blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[i].size() + blocks[j].size() > static_cast<std::size_t>(game.k)) continue;
            if (cross_block_weight(game.graph, blocks[i], blocks[j]) <= 0) continue;
            std::vector<Agent> merged = blocks[i];
            merged.insert(merged.end(), blocks[j].begin(), blocks[j].end());
            p = p.break_off(merged);
            return true;
        }
    }
    return false;
}

}  // namespace

std::pair<Partition, SolverStats> find_csc(const GameInstance& game) {
    Partition p = Partition::singletons(game.n());
    SolverStats stats;
    while (merge_once(game, p)) {
        ++stats.outer_iterations;
        stats.welfare_trajectory.push_back(social_welfare(game, p));
        if (stats.outer_iterations >= game.n()) budget_exhausted("find_csc");  // > n-1 merges
    }
    return {std::move(p), std::move(stats)};
}

std::pair<Partition, SolverStats> find_nash_stable(const GameInstance& game) {
    Partition p = Partition::singletons(game.n());
    SolverStats stats;
    const int budget = default_budget(game);

    for (;;) {
        bool moved = false;
        for (Agent v = 1; v <= game.n() && !moved; ++v) {
            const int home = p.block_index_of(v);
            const Weight cur = utility(game, v, p);
            for (std::size_t b = 0; b < p.block_count(); ++b) {
                if (static_cast<int>(b) == home) continue;
                const auto& target = p.blocks()[b];
                if (static_cast<int>(target.size()) > game.k - 1) continue;
                Weight gain = 0;
                for (Agent x : target) gain += game.graph.weight(v, x);
                if (gain > cur) {
                    std::vector<Agent> joined = target;
                    joined.push_back(v);
                    p = p.break_off(joined);
                    ++stats.outer_iterations;
                    stats.welfare_trajectory.push_back(social_welfare(game, p));
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) return {std::move(p), std::move(stats)};
        if (stats.outer_iterations >= budget) budget_exhausted("find_nash_stable");
    }
}

Partition arbmax(const GameInstance& game,
                 const std::vector<std::pair<Agent, Agent>>& preferred_merges) {
    Partition p = Partition::singletons(game.n());
    for (auto [a, b] : preferred_merges) {
        if (a < 1 || a > game.n() || b < 1 || b > game.n())
            throw std::domain_error("arbmax: merge pair out of range");
        const int ia = p.block_index_of(a);
        const int ib = p.block_index_of(b);
        if (ia == ib) continue;
        const auto& ba = p.blocks()[static_cast<std::size_t>(ia)];
        const auto& bb = p.blocks()[static_cast<std::size_t>(ib)];
        if (ba.size() + bb.size() > static_cast<std::size_t>(game.k)) continue;
        if (cross_block_weight(game.graph, ba, bb) <= 0) continue;
        std::vector<Agent> merged = ba;
        merged.insert(merged.end(), bb.begin(), bb.end());
        p = p.break_off(merged);
    }
    while (merge_once(game, p)) {
    }
    return p;
}

Partition arbmax_random(const GameInstance& game, RngStream& rng) {
    Partition p = Partition::singletons(game.n());
    for (;;) {
        const auto& blocks = p.blocks();
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(blocks.size()); ++j)
                pairs.emplace_back(i, j);
        rng.shuffle(pairs);
        bool merged_any = false;
        for (auto [i, j] : pairs) {
            const auto& ba = blocks[static_cast<std::size_t>(i)];
            const auto& bb = blocks[static_cast<std::size_t>(j)];
            if (ba.size() + bb.size() > static_cast<std::size_t>(game.k)) continue;
            if (cross_block_weight(game.graph, ba, bb) <= 0) continue;
            std::vector<Agent> merged = ba;
            merged.insert(merged.end(), bb.begin(), bb.end());
            p = p.break_off(merged);
            merged_any = true;
            break;
        }
        if (!merged_any) return p;
    }
}

}  // namespace hedonic
