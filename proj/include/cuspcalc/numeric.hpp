#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cuspcalc/errors.hpp"

namespace cuspcalc {

/// Arbitrary-precision signed integer. Discriminants grow exponentially with
/// chain length, so fixed-width arithmetic is never used for them.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
    return rat_num(q).str() + "/" + rat_den(q).str();
}

/// Parses "p/q" (or a bare integer "p") into a Rational.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(text)));
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0)
            throw InvalidArgument("fraction denominator must be nonzero");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed fraction: '" + std::string(text) + "'");
    }
}

} // namespace cuspcalc
