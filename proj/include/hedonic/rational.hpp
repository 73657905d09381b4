#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hedonic {

// Exact non-negative rational. Comparisons against integer quantities are
// cross-multiplied in 128-bit arithmetic, so stability predicates never touch
// floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        if (num < 0) throw std::invalid_argument("Rational: negative values are not used here");
        normalize();
    }
    explicit Rational(std::int64_t n) : Rational(n, 1) {}

    void normalize() {
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }

    // a > num/den
    friend bool operator<(const Rational& r, std::int64_t a) {
        return static_cast<__int128>(r.num) < static_cast<__int128>(a) * r.den;
    }
    // num/den > a
    friend bool operator>(const Rational& r, std::int64_t a) {
        return static_cast<__int128>(r.num) > static_cast<__int128>(a) * r.den;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// w > u + eps, exact.
inline bool exceeds_plus(std::int64_t w, std::int64_t u, const Rational& eps) {
    return static_cast<__int128>(w) * eps.den >
           static_cast<__int128>(u) * eps.den + eps.num;
}

// w > eps * u, exact.
inline bool exceeds_times(std::int64_t w, std::int64_t u, const Rational& eps) {
    return static_cast<__int128>(w) * eps.den > static_cast<__int128>(eps.num) * u;
}

// w >= q / eps, exact (q, w non-negative; eps > 0).
inline bool at_least_quotient(std::int64_t w, std::int64_t q, const Rational& eps) {
    return static_cast<__int128>(w) * eps.num >= static_cast<__int128>(q) * eps.den;
}

// Parses "3", "1/2" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace hedonic
