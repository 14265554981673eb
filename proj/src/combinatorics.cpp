#include "quadpow/combinatorics.hpp"

#include <string>
#include <utility>

#include "quadpow/errors.hpp"

namespace quadpow {

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  // result stays integral: after step i it equals C(a-b+i, i).
  for (std::uint64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt binomial_or_zero(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

BinomialBasisPolynomial::BinomialBasisPolynomial(unsigned n, std::vector<BigInt> coefficients)
    : n_(n), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<std::size_t>(n_) + 1) {
    throw UsageError("binomial basis polynomial with n=" + std::to_string(n_) + " needs " +
                     std::to_string(n_ + 1) + " coefficients, got " +
                     std::to_string(coefficients_.size()));
  }
}

BigInt basis_term(unsigned n, unsigned i, std::int64_t s) {
  const std::int64_t k = static_cast<std::int64_t>(n) - i;
  // C(s-1, 0) = 1 for every s >= 1, so the last term is the constant (-1)^n.
  BigInt term = binomial_or_zero(s + k - 1, k);
  return (i % 2 == 0) ? term : BigInt(-term);
}

BigInt evaluate_basis(const BinomialBasisPolynomial& poly, std::int64_t s) {
  if (s < 1) throw UsageError("evaluate_basis requires s >= 1");
  BigInt total = 0;
  for (unsigned i = 0; i <= poly.n(); ++i) {
    if (poly.coefficients()[i] == 0) continue;
    total += poly.coefficients()[i] * basis_term(poly.n(), i, s);
  }
  return total;
}

BigInt lattice_point_count(unsigned n, unsigned j) {
  if (n == 0) return j == 0 ? 1 : 0;
  return binomial(static_cast<std::uint64_t>(n) + j - 1, n - 1);
}

}  // namespace quadpow
