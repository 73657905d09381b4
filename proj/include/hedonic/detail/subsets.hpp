#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic::detail {

// Enumerates coalitions of size 2..max_size drawn from pool (sorted ascending),
// size-ascending then lexicographic. Stops at the first coalition for which fn
// returns true and returns it.
template <typename F>
std::optional<std::vector<Agent>> scan_coalitions(const std::vector<Agent>& pool, int max_size,
                                                  F&& fn) {
    const int n = static_cast<int>(pool.size());
    std::vector<int> idx;
    std::vector<Agent> s;
    for (int size = 2; size <= std::min(max_size, n); ++size) {
        idx.resize(static_cast<std::size_t>(size));
        s.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            for (int i = 0; i < size; ++i)
                s[static_cast<std::size_t>(i)] =
                    pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (fn(s)) return s;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (size - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

inline std::vector<Agent> agents_1_to(int n) {
    std::vector<Agent> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

}  // namespace hedonic::detail
