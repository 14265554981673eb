#pragma once

#include <cstdint>
#include <vector>

#include "quadpow/bigint.hpp"

namespace quadpow {

// C(a, b), exact. Zero when b > a.
BigInt binomial(std::uint64_t a, std::uint64_t b);

// C(a, b) with the vanishing convention for series sums that index past
// their support: zero when b < 0, a < 0 or b > a.
BigInt binomial_or_zero(std::int64_t a, std::int64_t b);

// Polynomial in s written in the alternating binomial basis
//   sum_i (-1)^i e_i C(s+n-i-1, n-i),   i = 0..n,
// which is how Hilbert coefficients e_0..e_n of an m-primary ideal are read
// off the eventual length function l(S/I^s).
class BinomialBasisPolynomial {
 public:
  // Throws UsageError unless coefficients.size() == n + 1.
  BinomialBasisPolynomial(unsigned n, std::vector<BigInt> coefficients);

  unsigned n() const { return n_; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  bool operator==(const BinomialBasisPolynomial&) const = default;

 private:
  unsigned n_;
  std::vector<BigInt> coefficients_;
};

// Value of the basis function multiplying e_i at s, including the sign.
BigInt basis_term(unsigned n, unsigned i, std::int64_t s);

// Requires s >= 1 (UsageError otherwise).
BigInt evaluate_basis(const BinomialBasisPolynomial& poly, std::int64_t s);

// Number of a in N^n with a_1 + ... + a_n = j, i.e. C(n+j-1, n-1).
BigInt lattice_point_count(unsigned n, unsigned j);

}  // namespace quadpow
