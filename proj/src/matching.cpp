#include "hedonic/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace hedonic {

Weight Matching::total_weight(const Graph& g) const {
    Weight total = 0;
    for (auto [u, v] : edges) total += g.weight(u, v);
    return total;
}

bool Matching::valid_for(const Graph& g) const {
    std::vector<char> used(static_cast<std::size_t>(g.agent_count()) + 1, 0);
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) return false;
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

namespace detail {

namespace {

// Classic blossom algorithm for maximum-cardinality matching, 0-indexed.
class CardinalityBlossom {
public:
    CardinalityBlossom(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (auto [u, v] : edge_list) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& row : adj_) std::sort(row.begin(), row.end());
        mate_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[static_cast<std::size_t>(v)] != -1) continue;
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (mate_[static_cast<std::size_t>(u)] == -1) {
                    mate_[static_cast<std::size_t>(v)] = u;
                    mate_[static_cast<std::size_t>(u)] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[static_cast<std::size_t>(v)] == -1) try_augment(v);
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (mate_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            const int mv = mate_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void contract(int v, int u, std::deque<int>& queue) {
        const int b = lca(v, u);
        blossom_.assign(static_cast<std::size_t>(n_), 0);
        mark_path(v, b, u);
        mark_path(u, b, v);
        for (int i = 0; i < n_; ++i) {
            if (!blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) continue;
            base_[static_cast<std::size_t>(i)] = b;
            if (!in_queue_[static_cast<std::size_t>(i)]) {
                in_queue_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
            }
        }
    }

    void try_augment(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        in_queue_.assign(static_cast<std::size_t>(n_), 0);

        std::deque<int> queue{root};
        in_queue_[static_cast<std::size_t>(root)] = 1;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    mate_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (mate_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
                    contract(v, to, queue);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    const int m = mate_[static_cast<std::size_t>(to)];
                    if (m == -1) {
                        // augment along the alternating path back to the root
                        int cur = to;
                        while (cur != -1) {
                            const int prev = parent_[static_cast<std::size_t>(cur)];
                            const int next = mate_[static_cast<std::size_t>(prev)];
                            mate_[static_cast<std::size_t>(cur)] = prev;
                            mate_[static_cast<std::size_t>(prev)] = cur;
                            cur = next;
                        }
                        return;
                    }
                    if (!in_queue_[static_cast<std::size_t>(m)]) {
                        in_queue_[static_cast<std::size_t>(m)] = 1;
                        queue.push_back(m);
                    }
                }
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> blossom_, in_queue_;
};

// Primal-dual blossom for maximum-weight matching, O(n^3). Internally
// 1-indexed with blossom ids above n. Edge weights are compared through
// delta = lab[u] + lab[v] - 2*w, which keeps all duals integral.
class WeightedBlossom {
public:
    WeightedBlossom(int n, const std::vector<std::tuple<int, int, Weight>>& edge_list)
        : n_(n), cap_(2 * n + 1) {
        g_.assign(static_cast<std::size_t>(cap_), std::vector<E>(static_cast<std::size_t>(cap_)));
        for (int u = 0; u < cap_; ++u)
            for (int v = 0; v < cap_; ++v) g_[u][v] = E{u, v, 0};
        for (auto [u, v, w] : edge_list) {
            const int a = u + 1, b = v + 1;
            if (w > g_[a][b].w) g_[a][b].w = g_[b][a].w = w;
        }
        lab_.assign(static_cast<std::size_t>(cap_), 0);
        match_.assign(static_cast<std::size_t>(cap_), 0);
        slack_.assign(static_cast<std::size_t>(cap_), 0);
        st_.assign(static_cast<std::size_t>(cap_), 0);
        pa_.assign(static_cast<std::size_t>(cap_), 0);
        s_.assign(static_cast<std::size_t>(cap_), -1);
        vis_.assign(static_cast<std::size_t>(cap_), 0);
        flower_.assign(static_cast<std::size_t>(cap_), {});
        flower_from_.assign(static_cast<std::size_t>(cap_),
                            std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
    }

    std::vector<int> solve() {
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) st_[u] = u;
        Weight w_max = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (run_phase()) {
        }
        std::vector<int> mate(static_cast<std::size_t>(n_), -1);
        for (int u = 1; u <= n_; ++u)
            if (match_[u] && g_[u][match_[u]].w > 0) mate[u - 1] = match_[u] - 1;
        return mate;
    }

private:
    struct E {
        int u, v;
        Weight w;
    };

    static constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

    Weight delta(const E& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || delta(g_[u][x]) < delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            queue_.push_back(x);
        } else {
            for (int y : flower_[x]) q_push(y);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int y : flower_[x]) set_st(y, b);
    }

    int get_pr(int b, int xr) {
        auto& f = flower_[b];
        const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
        if (pr % 2 == 1) {
            std::reverse(f.begin() + 1, f.end());
            return static_cast<int>(f.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u <= n_) return;
        const E e = g_[u][v];
        const int xr = flower_from_[u][e.u];
        const int pr = get_pr(u, xr);
        auto& f = flower_[u];
        for (int i = 0; i < pr; ++i) set_match(f[i], f[i ^ 1]);
        set_match(xr, v);
        std::rotate(f.begin(), f.begin() + pr, f.end());
    }

    void augment(int u, int v) {
        for (;;) {
            const int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++timer_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == timer_) return u;
            vis_[u] = timer_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        auto& f = flower_[b];
        f.clear();
        f.push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            f.push_back(x);
            f.push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(f.begin() + 1, f.end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            f.push_back(x);
            f.push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : f) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || delta(g_[xs][x]) < delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        auto& f = flower_[b];
        for (int x : f) set_st(x, x);
        const int xr = flower_from_[b][g_[b][pa_[b]].u];
        const int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            const int xs = f[static_cast<std::size_t>(i)];
            const int xns = f[static_cast<std::size_t>(i) + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < f.size(); ++i) {
            s_[f[i]] = -1;
            set_slack(f[i]);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const E& e) {
        const int u = st_[e.u];
        const int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            const int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            const int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool run_phase() {
        std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
        queue_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (queue_.empty()) return false;
        for (;;) {
            while (!queue_.empty()) {
                const int u = queue_.front();
                queue_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            Weight d = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, delta(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, delta(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += d * 2;
                    else if (s_[b] == 1)
                        lab_[b] -= d * 2;
                }
            queue_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    delta(g_[slack_[x]][x]) == 0) {
                    if (on_found_edge(g_[slack_[x]][x])) return true;
                }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_, cap_, n_x_ = 0, timer_ = 0;
    std::vector<std::vector<E>> g_;
    std::vector<Weight> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_, flower_from_;
    std::deque<int> queue_;
};

}  // namespace

std::vector<int> max_cardinality_mate(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return {};
    return CardinalityBlossom(n, edges).solve();
}

std::vector<int> max_weight_mate(int n, const std::vector<std::tuple<int, int, Weight>>& edges) {
    if (n == 0) return {};
    for (auto [u, v, w] : edges)
        if (w < 0) throw std::domain_error("max_weight_mate: negative weights are not supported");
    return WeightedBlossom(n, edges).solve();
}

}  // namespace detail

namespace {

Matching mate_to_matching(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
        const int u = mate[static_cast<std::size_t>(v)];
        if (u > v) m.edges.emplace_back(v + 1, u + 1);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace

Matching max_cardinality_matching(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.emplace_back(e.u - 1, e.v - 1);
    return mate_to_matching(detail::max_cardinality_mate(g.agent_count(), edges));
}

Matching max_weight_matching(const Graph& g) {
    std::vector<std::tuple<int, int, Weight>> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.emplace_back(e.u - 1, e.v - 1, e.w);
    return mate_to_matching(detail::max_weight_mate(g.agent_count(), edges));
}

}  // namespace hedonic
