#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace younghull {

// Exact arbitrary-precision rational, used wherever values are not known to
// be small integers (strip functions, profiles, areas, oracle output).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" (q > 0 after normalization).
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
}

// Emits "p" for integers and "p/q" otherwise; inverse of parse_rational.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// Largest integer n with n <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

}  // namespace younghull
