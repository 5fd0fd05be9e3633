#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace homspace {

/// Exact rational used for every comparison in the library. Values stay
/// small (dimensions of Lie algebras of rank <= a few dozen), so 64-bit
/// numerators never come close to overflow.
using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Inverse of to_string. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace homspace
