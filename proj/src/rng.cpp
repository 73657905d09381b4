#include "hedonic/rng.hpp"

namespace hedonic {

std::uint64_t RngStream::below(std::uint64_t bound) {
    // Rejection sampling over the top of the range to stay unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

double RngStream::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_subseed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

}  // namespace hedonic
