#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hedonic {

// Deterministic random stream. The engine (mt19937_64) is fully specified by
// the C++ standard and the helpers below avoid std distributions, whose output
// is implementation-defined, so identical seeds reproduce identical draws on
// every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static constexpr std::string_view algorithm = "mt19937_64";

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound);

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Counter-based sub-seed derivation for campaign instances: a splitmix64 mix
// of the master seed and the instance index.
std::uint64_t derive_subseed(std::uint64_t master, std::uint64_t index);

}  // namespace hedonic
