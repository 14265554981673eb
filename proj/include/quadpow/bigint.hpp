#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadpow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Parses an optionally signed base-10 integer. Throws UsageError on anything
// else (no whitespace, no hex, no exponent).
BigInt parse_decimal(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace quadpow
