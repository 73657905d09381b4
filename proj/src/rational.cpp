#include "hedonic/rational.hpp"

#include <cctype>

#include "hedonic/errors.hpp"

namespace hedonic {

static std::int64_t parse_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) throw ParseError("rational: missing digits in '" + s + "'");
    std::int64_t value = 0;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("rational: unexpected character in '" + s + "'");
        value = value * 10 + (s[i] - '0');
        if (value < 0) throw ParseError("rational: value out of range in '" + s + "'");
    }
    return value;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t num = parse_digits(text, 0, slash);
        const std::int64_t den = parse_digits(text, slash + 1, text.size());
        if (den == 0) throw ParseError("rational: zero denominator in '" + text + "'");
        return Rational{num, den};
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational{parse_digits(text, 0, text.size()), 1};
    std::size_t frac_end = text.size();
    while (frac_end > dot + 1 && text[frac_end - 1] == '0') --frac_end;  // trim trailing zeros
    std::int64_t den = 1;
    std::int64_t num = dot > 0 ? parse_digits(text, 0, dot) : 0;
    for (std::size_t i = dot + 1; i < frac_end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("rational: unexpected character in '" + text + "'");
        num = num * 10 + (text[i] - '0');
        den *= 10;
        if (num < 0 || den < 0) throw ParseError("rational: value out of range in '" + text + "'");
    }
    return Rational{num, den};
}

}  // namespace hedonic
