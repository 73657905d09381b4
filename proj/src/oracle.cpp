#include "hedonic/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hedonic/detail/subsets.hpp"
#include "hedonic/errors.hpp"

namespace hedonic {

PartitionEnumerator::PartitionEnumerator(int n, int k, bool override_guard) : n_(n), k_(k) {
    if (n_ < 1) throw std::invalid_argument("PartitionEnumerator: n must be >= 1");
    if (k_ < 1) throw std::invalid_argument("PartitionEnumerator: k must be >= 1");
    if (!override_guard && n_ > kEnumerationGuardN)
        throw GuardError("partition enumeration refused for n = " + std::to_string(n_) +
                         " (guard is n <= " + std::to_string(kEnumerationGuardN) +
                         ", override to force)");
    assign_.assign(static_cast<std::size_t>(n_), -1);
}

bool PartitionEnumerator::place_from(int agent, int min_block) {
    for (int b = min_block; b <= blocks_; ++b) {
        if (b < blocks_ && block_size_[static_cast<std::size_t>(b)] >= k_) continue;
        assign_[static_cast<std::size_t>(agent)] = b;
        if (b == blocks_) {
            block_size_.push_back(0);
            ++blocks_;
        }
        ++block_size_[static_cast<std::size_t>(b)];
        return true;
    }
    return false;
}

bool PartitionEnumerator::advance() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        for (int i = 0; i < n_; ++i) place_from(i, 0);
        return true;
    }
    for (int i = n_ - 1; i >= 0; --i) {
        const int b = assign_[static_cast<std::size_t>(i)];
        --block_size_[static_cast<std::size_t>(b)];
        assign_[static_cast<std::size_t>(i)] = -1;
        if (b == blocks_ - 1 && block_size_[static_cast<std::size_t>(b)] == 0) {
            block_size_.pop_back();
            --blocks_;
        }
        if (place_from(i, b + 1)) {
            for (int j = i + 1; j < n_; ++j) place_from(j, 0);
            return true;
        }
    }
    done_ = true;
    return false;
}

Partition PartitionEnumerator::current() const {
    std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < n_; ++i)
        blocks[static_cast<std::size_t>(assign_[static_cast<std::size_t>(i)])].push_back(i + 1);
    return Partition(n_, std::move(blocks));
}

PartitionEnumerator enumerate_partitions(int n, int k, bool override_guard) {
    return PartitionEnumerator(n, k, override_guard);
}

namespace {

// Dense weight matrix plus per-agent suffix weights for the emptiness search.
struct DenseGame {
    int n = 0;
    int k = 0;
    std::vector<Weight> w;  // (n+1)^2, 1-based

    explicit DenseGame(const GameInstance& game) : n(game.n()), k(game.k) {
        w.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
        for (const Edge& e : game.graph.edges()) {
            at(e.u, e.v) = e.w;
            at(e.v, e.u) = e.w;
        }
    }

    Weight& at(int u, int v) {
        return w[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) +
                 static_cast<std::size_t>(v)];
    }
    Weight at(int u, int v) const {
        return w[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) +
                 static_cast<std::size_t>(v)];
    }

    Weight value(Agent v, const std::vector<Agent>& coalition) const {
        Weight total = 0;
        for (Agent u : coalition)
            if (u != v) total += at(v, u);
        return total;
    }
};

std::uint64_t subset_count(int n, int k) {
    std::uint64_t total = 0;
    std::uint64_t c = static_cast<std::uint64_t>(n);  // C(n,1)
    for (int s = 2; s <= k && s <= n; ++s) {
        c = c * static_cast<std::uint64_t>(n - s + 1) / static_cast<std::uint64_t>(s);
        total += c;
        if (total > (1ULL << 40)) break;
    }
    return total;
}

void check_membership_guard(const GameInstance& game, bool override_guard) {
    if (override_guard) return;
    if (game.n() > kMembershipGuardN || subset_count(game.n(), game.k) > 4'000'000ULL)
        throw GuardError("membership check refused: too many size-2..k coalitions for n = " +
                         std::to_string(game.n()) + ", k = " + std::to_string(game.k) +
                         " (override to force)");
}

template <typename F>
std::optional<std::vector<Agent>> scan_subsets(int n, int k, F&& fn) {
    return detail::scan_coalitions(detail::agents_1_to(n), k, std::forward<F>(fn));
}

enum class Mode { strong, weak, eps_a, eps_m };

bool coalition_blocks(const DenseGame& dense, const std::vector<Agent>& s,
                      const std::vector<Weight>& u, Mode mode, const Rational& eps) {
    bool any_strict = false;
    for (Agent v : s) {
        const Weight in_s = dense.value(v, s);
        const Weight cur = u[static_cast<std::size_t>(v)];
        switch (mode) {
            case Mode::strong:
                if (in_s <= cur) return false;
                break;
            case Mode::weak:
                if (in_s < cur) return false;
                if (in_s > cur) any_strict = true;
                break;
            case Mode::eps_a:
                if (!exceeds_plus(in_s, cur, eps)) return false;
                break;
            case Mode::eps_m:
                if (!exceeds_times(in_s, cur, eps)) return false;
                break;
        }
    }
    return mode != Mode::weak || any_strict;
}

std::vector<Weight> utilities_of(const DenseGame& dense, const Partition& p) {
    std::vector<Weight> u(static_cast<std::size_t>(dense.n) + 1, 0);
    for (const auto& block : p.blocks())
        for (Agent v : block) u[static_cast<std::size_t>(v)] = dense.value(v, block);
    return u;
}

}  // namespace

std::pair<Partition, Weight> opt_max_util(const GameInstance& game, bool override_guard) {
    PartitionEnumerator it(game.n(), game.k, override_guard);
    const auto& edges = game.graph.edges();
    Weight best = -1;
    std::vector<int> best_assign;
    int best_blocks = 0;
    while (it.advance()) {
        const auto& a = it.assignment();
        Weight intra = 0;
        for (const Edge& e : edges)
            if (a[static_cast<std::size_t>(e.u - 1)] == a[static_cast<std::size_t>(e.v - 1)])
                intra += e.w;
        if (2 * intra > best) {
            best = 2 * intra;
            best_assign = a;
            best_blocks = it.block_count();
        }
    }
    std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(best_blocks));
    for (int i = 0; i < game.n(); ++i)
        blocks[static_cast<std::size_t>(best_assign[static_cast<std::size_t>(i)])].push_back(i + 1);
    return {Partition(game.n(), std::move(blocks)), best};
}

namespace {

// Exhaustive-with-pruning search for a partition with no (strongly|weakly)
// blocking coalition. Agents are placed in id order into existing blocks or a
// fresh one (canonical restricted-growth tree); a prefix is pruned when a
// coalition S of placed agents blocks every completion, judged against sound
// per-agent utility upper bounds. Exact blocking is re-checked at leaves.
class EmptinessSearch {
public:
    EmptinessSearch(const GameInstance& game, bool weak) : dense_(game), weak_(weak) {
        n_ = dense_.n;
        k_ = dense_.k;
        suffix_.assign(static_cast<std::size_t>(n_ + 1),
                       std::vector<Weight>(static_cast<std::size_t>(n_ + 2), 0));
        for (int v = 1; v <= n_; ++v)
            for (int i = n_ - 1; i >= 0; --i)
                suffix_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] =
                    suffix_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i + 1)] +
                    dense_.at(v, i + 1);
        ucur_.assign(static_cast<std::size_t>(n_ + 1), 0);
        block_of_.assign(static_cast<std::size_t>(n_ + 1), -1);
    }

    std::optional<Partition> find_stable() {
        if (dfs(1)) {
            std::vector<std::vector<Agent>> copy(blocks_.begin(), blocks_.end());
            return Partition(n_, std::move(copy));
        }
        return std::nullopt;
    }

private:
    Weight upper_bound(Agent v, int placed) const {
        const int b = block_of_[static_cast<std::size_t>(v)];
        const bool full = blocks_[static_cast<std::size_t>(b)].size() >= static_cast<std::size_t>(k_);
        return ucur_[static_cast<std::size_t>(v)] +
               (full ? 0 : suffix_[static_cast<std::size_t>(v)][static_cast<std::size_t>(placed)]);
    }

    // Does some coalition containing `last` block every completion of the prefix?
    bool provably_blocked(int last) {
        std::vector<Agent> pool;
        pool.reserve(static_cast<std::size_t>(last - 1));
        for (Agent v = 1; v < last; ++v) pool.push_back(v);
        std::vector<Agent> s;
        return pick(pool, 0, s, last);
    }

    bool pick(const std::vector<Agent>& pool, std::size_t from, std::vector<Agent>& chosen,
              int last) {
        chosen.push_back(last);
        const bool hit = chosen.size() >= 2 && blocked_at_bounds(chosen, last);
        chosen.pop_back();
        if (hit) return true;
        if (static_cast<int>(chosen.size()) >= k_ - 1) return false;
        for (std::size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (pick(pool, i + 1, chosen, last)) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool blocked_at_bounds(const std::vector<Agent>& s, int placed) const {
        bool any_strict = false;
        for (Agent v : s) {
            const Weight in_s = dense_.value(v, s);
            const Weight ub = upper_bound(v, placed);
            if (weak_) {
                if (in_s < ub) return false;
                if (in_s > ub) any_strict = true;
            } else {
                if (in_s <= ub) return false;
            }
        }
        return !weak_ || any_strict;
    }

    bool leaf_is_stable() {
        std::vector<Weight> u(ucur_.begin(), ucur_.end());
        auto hit = scan_subsets(n_, k_, [&](const std::vector<Agent>& s) {
            return coalition_blocks(dense_, s, u, weak_ ? Mode::weak : Mode::strong,
                                    Rational{0, 1});
        });
        return !hit.has_value();
    }

    bool dfs(int agent) {
        if (agent > n_) return leaf_is_stable();
        const int open = static_cast<int>(blocks_.size());
        for (int b = 0; b <= open; ++b) {
            if (b < open && blocks_[static_cast<std::size_t>(b)].size() >=
                                static_cast<std::size_t>(k_))
                continue;
            if (b == open) blocks_.push_back({});
            Weight gained = 0;
            for (Agent x : blocks_[static_cast<std::size_t>(b)]) {
                const Weight wxv = dense_.at(x, agent);
                ucur_[static_cast<std::size_t>(x)] += wxv;
                gained += wxv;
            }
            blocks_[static_cast<std::size_t>(b)].push_back(agent);
            ucur_[static_cast<std::size_t>(agent)] = gained;
            block_of_[static_cast<std::size_t>(agent)] = b;

            if (!provably_blocked(agent) && dfs(agent + 1)) return true;

            // re-index: the recursion may have grown and reallocated blocks_
            blocks_[static_cast<std::size_t>(b)].pop_back();
            for (Agent x : blocks_[static_cast<std::size_t>(b)])
                ucur_[static_cast<std::size_t>(x)] -= dense_.at(x, agent);
            ucur_[static_cast<std::size_t>(agent)] = 0;
            block_of_[static_cast<std::size_t>(agent)] = -1;
            if (b == open) blocks_.pop_back();
        }
        return false;
    }

    DenseGame dense_;
    bool weak_;
    int n_ = 0;
    int k_ = 0;
    std::vector<std::vector<Weight>> suffix_;
    std::vector<std::vector<Agent>> blocks_;
    std::vector<Weight> ucur_;
    std::vector<int> block_of_;
};

EmptinessCertificate emptiness(const GameInstance& game, bool weak, bool override_guard) {
    if (!override_guard && game.n() > kEnumerationGuardN)
        throw GuardError("emptiness check refused for n = " + std::to_string(game.n()) +
                         " (guard is n <= " + std::to_string(kEnumerationGuardN) +
                         ", override to force)");
    EmptinessCertificate cert;
    EmptinessSearch search(game, weak);
    auto stable = search.find_stable();
    if (stable) {
        cert.empty = false;
        cert.witness = std::move(stable);
        return cert;
    }
    cert.empty = true;
    // Sample a few enumerated partitions with their blocking witnesses.
    if (game.n() <= kEnumerationGuardN) {
        const BlockingMode mode = weak ? BlockingMode::weak() : BlockingMode::strong();
        DenseGame dense(game);
        PartitionEnumerator it(game.n(), game.k);
        int taken = 0;
        while (taken < 3 && it.advance()) {
            Partition p = it.current();
            auto u = utilities_of(dense, p);
            auto s = scan_subsets(game.n(), game.k, [&](const std::vector<Agent>& cand) {
                return coalition_blocks(dense, cand, u, weak ? Mode::weak : Mode::strong,
                                        Rational{0, 1});
            });
            if (s) {
                auto witness = blocks(game, *s, p, mode);
                if (witness) {
                    cert.blocked_samples.emplace_back(std::move(p), std::move(*witness));
                    ++taken;
                }
            }
        }
    }
    return cert;
}

}  // namespace

EmptinessCertificate core_emptiness(const GameInstance& game, bool override_guard) {
    return emptiness(game, /*weak=*/false, override_guard);
}

EmptinessCertificate sc_emptiness(const GameInstance& game, bool override_guard) {
    return emptiness(game, /*weak=*/true, override_guard);
}

MembershipResult verify_membership(const GameInstance& game, const Partition& p,
                                   const ConceptQuery& query, bool override_guard) {
    p.validate_for(game);
    MembershipResult result;
    DenseGame dense(game);
    const auto u = utilities_of(dense, p);
    const int n = game.n();
    const int k = game.k;

    auto finish_with_subset = [&](const std::optional<std::vector<Agent>>& s,
                                  const BlockingMode& mode) {
        if (!s) {
            result.member = true;
        } else {
            result.member = false;
            result.blocking = blocks(game, *s, p, mode);
        }
    };

    switch (query.kind) {
        case StabilityConcept::core: {
            check_membership_guard(game, override_guard);
            auto s = scan_subsets(n, k, [&](const std::vector<Agent>& cand) {
                return coalition_blocks(dense, cand, u, Mode::strong, query.eps);
            });
            finish_with_subset(s, BlockingMode::strong());
            break;
        }
        case StabilityConcept::strict_core: {
            check_membership_guard(game, override_guard);
            auto s = scan_subsets(n, k, [&](const std::vector<Agent>& cand) {
                return coalition_blocks(dense, cand, u, Mode::weak, query.eps);
            });
            finish_with_subset(s, BlockingMode::weak());
            break;
        }
        case StabilityConcept::eps_a_core: {
            check_membership_guard(game, override_guard);
            auto s = scan_subsets(n, k, [&](const std::vector<Agent>& cand) {
                return coalition_blocks(dense, cand, u, Mode::eps_a, query.eps);
            });
            finish_with_subset(s, BlockingMode::eps_a(query.eps));
            break;
        }
        case StabilityConcept::eps_m_core: {
            check_membership_guard(game, override_guard);
            auto s = scan_subsets(n, k, [&](const std::vector<Agent>& cand) {
                return coalition_blocks(dense, cand, u, Mode::eps_m, query.eps);
            });
            finish_with_subset(s, BlockingMode::eps_m(query.eps));
            break;
        }
        case StabilityConcept::csc: {
            check_membership_guard(game, override_guard);
            // Weakly blocking S is admissible unless someone left behind loses:
            // a non-member of S sharing a block with an S-member via an edge.
            auto s = scan_subsets(n, k, [&](const std::vector<Agent>& cand) {
                if (!coalition_blocks(dense, cand, u, Mode::weak, query.eps)) return false;
                for (Agent v : cand) {
                    for (Agent x : p.block_of(v)) {
                        if (std::binary_search(cand.begin(), cand.end(), x)) continue;
                        if (dense.at(x, v) > 0) return false;  // x is harmed; S inadmissible
                    }
                }
                return true;  // weakly blocking and harmless: CSC violated
            });
            finish_with_subset(s, BlockingMode::weak());
            break;
        }
        case StabilityConcept::nash: {
            for (Agent v = 1; v <= n && result.move == std::nullopt; ++v) {
                const int home = p.block_index_of(v);
                for (std::size_t b = 0; b < p.block_count(); ++b) {
                    if (static_cast<int>(b) == home) continue;
                    const auto& target = p.blocks()[b];
                    if (static_cast<int>(target.size()) > k - 1) continue;
                    Weight gain = 0;
                    for (Agent x : target) gain += dense.at(v, x);
                    if (gain > u[static_cast<std::size_t>(v)]) {
                        result.move = NashMove{v, target, u[static_cast<std::size_t>(v)], gain};
                        break;
                    }
                }
            }
            result.member = !result.move.has_value();
            break;
        }
    }
    return result;
}

std::vector<Matching> kn_matching_partition(int n) {
    if (n < 3) throw std::domain_error("kn_matching_partition: n must be >= 3");
    std::vector<Matching> classes(static_cast<std::size_t>(n));
    for (Agent i = 1; i <= n; ++i)
        for (Agent j = i + 1; j <= n; ++j)
            classes[static_cast<std::size_t>((i + j) % n)].edges.emplace_back(i, j);
    for (auto& m : classes) std::sort(m.edges.begin(), m.edges.end());
    return classes;
}

}  // namespace hedonic
