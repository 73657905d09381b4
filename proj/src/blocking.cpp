#include "hedonic/blocking.hpp"

#include <algorithm>
#include <stdexcept>

namespace hedonic {

Weight coalition_weight(const Graph& g, Agent v, const std::vector<Agent>& coalition) {
    if (std::find(coalition.begin(), coalition.end(), v) == coalition.end())
        throw std::domain_error("coalition_weight: agent is not a member of the coalition");
    Weight total = 0;
    for (Agent u : coalition) {
        if (u == v) continue;
        total += g.weight(v, u);
    }
    return total;
}

Weight utility(const GameInstance& game, Agent v, const Partition& p) {
    return coalition_weight(game.graph, v, p.block_of(v));
}

Weight social_welfare(const GameInstance& game, const Partition& p) {
    Weight total = 0;
    for (const auto& block : p.blocks())
        for (Agent v : block) total += coalition_weight(game.graph, v, block);
    return total;
}

std::string BlockingMode::name() const {
    switch (kind) {
        case Kind::strong: return "strong";
        case Kind::weak: return "weak";
        case Kind::eps_a: return "eps_a(" + eps.str() + ")";
        case Kind::eps_m: return "eps_m(" + eps.str() + ")";
    }
    return "?";
}

std::optional<BlockingWitness> blocks(const GameInstance& game,
                                      const std::vector<Agent>& coalition,
                                      const Partition& p,
                                      const BlockingMode& mode) {
    if (coalition.empty()) throw std::domain_error("blocks: empty coalition");
    if (static_cast<int>(coalition.size()) > game.k)
        throw std::domain_error("blocks: coalition larger than k");

    BlockingWitness w;
    w.coalition = coalition;
    std::sort(w.coalition.begin(), w.coalition.end());
    w.mode = mode;
    bool any_strict = false;
    for (Agent v : w.coalition) {
        const Weight in_s = coalition_weight(game.graph, v, w.coalition);
        const Weight cur = utility(game, v, p);
        bool ok = false;
        switch (mode.kind) {
            case BlockingMode::Kind::strong:
                ok = in_s > cur;
                break;
            case BlockingMode::Kind::weak:
                ok = in_s >= cur;
                if (in_s > cur) any_strict = true;
                break;
            case BlockingMode::Kind::eps_a:
                ok = exceeds_plus(in_s, cur, mode.eps);
                break;
            case BlockingMode::Kind::eps_m:
                ok = exceeds_times(in_s, cur, mode.eps);
                break;
        }
        if (!ok) return std::nullopt;
        w.per_agent.push_back({v, in_s, cur});
    }
    if (mode.kind == BlockingMode::Kind::weak && !any_strict) return std::nullopt;
    return w;
}

bool witness_valid(const GameInstance& game, const Partition& p, const BlockingWitness& w) {
    auto again = blocks(game, w.coalition, p, w.mode);
    if (!again) return false;
    if (again->per_agent.size() != w.per_agent.size()) return false;
    for (std::size_t i = 0; i < w.per_agent.size(); ++i) {
        if (again->per_agent[i].agent != w.per_agent[i].agent ||
            again->per_agent[i].coalition_value != w.per_agent[i].coalition_value ||
            again->per_agent[i].current_utility != w.per_agent[i].current_utility)
            return false;
    }
    return true;
}

}  // namespace hedonic
