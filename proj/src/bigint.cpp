#include "quadpow/bigint.hpp"

#include "quadpow/errors.hpp"

namespace quadpow {

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw UsageError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw UsageError("invalid character in decimal integer '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace quadpow
