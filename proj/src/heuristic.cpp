#include "hedonic/heuristic.hpp"

#include <cstdint>
#include <unordered_set>

#include "hedonic/detail/subsets.hpp"

namespace hedonic {

namespace {

constexpr int kSampleBudgetPerStep = 2000;

struct DenseWeights {
    int n;
    std::vector<Weight> w;

    explicit DenseWeights(const Graph& g) : n(g.agent_count()) {
        w.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
        for (const Edge& e : g.edges()) {
            w[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n + 1) +
              static_cast<std::size_t>(e.v)] = e.w;
            w[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n + 1) +
              static_cast<std::size_t>(e.u)] = e.w;
        }
    }

    Weight at(Agent u, Agent v) const {
        return w[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) +
                 static_cast<std::size_t>(v)];
    }
};

// Uniform sampling over all coalitions of size 2..k: size drawn proportionally
// to C(n, size), then the combination unranked from a uniform rank.
class CoalitionSampler {
public:
    CoalitionSampler(int n, int k) : n_(n), k_(std::min(k, n)) {
        binom_.assign(static_cast<std::size_t>(n_) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(k_) + 1, 0));
        for (int i = 0; i <= n_; ++i) {
            binom_[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= std::min(i, k_); ++j)
                binom_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    binom_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    binom_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        total_ = 0;
        for (int s = 2; s <= k_; ++s) total_ += binom_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(s)];
    }

    void draw(RngStream& rng, std::vector<Agent>& out) const {
        std::uint64_t r = rng.below(total_);
        int size = 2;
        while (r >= binom_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(size)]) {
            r -= binom_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(size)];
            ++size;
        }
        out.clear();
        int x = 1;  // smallest candidate agent
        int remaining = size;
        while (remaining > 0) {
            const std::uint64_t with_x =
                binom_[static_cast<std::size_t>(n_ - x)][static_cast<std::size_t>(remaining - 1)];
            if (r < with_x) {
                out.push_back(x);
                --remaining;
            } else {
                r -= with_x;
            }
            ++x;
        }
    }

private:
    int n_;
    int k_;
    std::uint64_t total_ = 0;
    std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace

HeuristicResult core_heuristic(const GameInstance& game, RngStream& rng, int restart_threshold,
                               int max_restarts) {
    const int n = game.n();
    const int k = game.k;
    DenseWeights dense(game.graph);
    CoalitionSampler sampler(n, k);

    HeuristicResult result;
    Partition p = Partition::singletons(n);
    std::vector<Weight> u(static_cast<std::size_t>(n) + 1, 0);
    auto refresh_utilities = [&] {
        for (const auto& block : p.blocks())
            for (Agent v : block) {
                Weight total = 0;
                for (Agent x : block)
                    if (x != v) total += dense.at(v, x);
                u[static_cast<std::size_t>(v)] = total;
            }
    };

    auto strongly_blocks = [&](const std::vector<Agent>& s) {
        for (Agent v : s) {
            Weight in_s = 0;
            for (Agent x : s)
                if (x != v) in_s += dense.at(v, x);
            if (in_s <= u[static_cast<std::size_t>(v)]) return false;
        }
        return true;
    };

    std::unordered_set<std::string> seen;
    seen.insert(p.canonical_form());
    int stale = 0;
    std::vector<Agent> candidate;

    for (;;) {
        // random phase, then an exhaustive pass that either finds a blocking
        // coalition or certifies the partition as a core member
        bool found = false;
        if (n >= 2 && k >= 2) {
            for (int t = 0; t < kSampleBudgetPerStep; ++t) {
                sampler.draw(rng, candidate);
                ++result.stats.sampled;
                if (strongly_blocks(candidate)) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            ++result.stats.full_passes;
            auto hit = detail::scan_coalitions(detail::agents_1_to(n), k, strongly_blocks);
            if (!hit) {
                result.success = true;
                result.partition = std::move(p);
                return result;
            }
            candidate = *hit;
        }

        p = p.break_off(candidate);
        refresh_utilities();
        ++result.stats.applied_blocks;

        std::string key = p.canonical_form();
        if (seen.count(key)) {
            ++stale;
        } else {
            seen.insert(std::move(key));
            stale = 0;
        }

        if (stale >= restart_threshold) {
            ++result.stats.restarts;
            if (result.stats.restarts > max_restarts) {
                result.success = false;
                return result;
            }
            p = Partition::singletons(n);
            refresh_utilities();
            stale = 0;
        }
    }
}

}  // namespace hedonic
