#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace credalkit {

/// Arbitrary-precision rational number. Stored in lowest terms with a
/// positive denominator; every operation is exact, there is no rounding
/// mode anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses the canonical text form "p/q" (the "/q" part omitted when the
/// denominator is 1). Accepts a leading '-'; the denominator must be
/// positive. Non-canonical fractions such as "2/4" normalize on
/// construction. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form, inverse of parse_rational.
std::string format_rational(const Rational& value);

/// Nearest double. Used only for plot approximations; approximations
/// never feed back into any computation.
double to_double(const Rational& value);

}  // namespace credalkit
