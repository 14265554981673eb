#include "quadpow/combinatorics.hpp"
#include "quadpow/errors.hpp"

#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace quadpow {
namespace {

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(13, 4), 715);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, LargeValuesAreExact) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(to_decimal(binomial(100, 50)), "100891344545564193334812497256");
}

TEST(Binomial, VanishingConvention) {
  EXPECT_EQ(binomial_or_zero(-1, 0), 0);
  EXPECT_EQ(binomial_or_zero(4, -1), 0);
  EXPECT_EQ(binomial_or_zero(3, 5), 0);
  EXPECT_EQ(binomial_or_zero(6, 2), 15);
}

TEST(Binomial, PascalIdentity) {
  for (std::uint64_t a = 1; a <= 200; ++a) {
    for (std::uint64_t b = 1; b <= a; ++b) {
      ASSERT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << " " << b;
    }
  }
}

TEST(EvaluateBasis, Examples) {
  EXPECT_EQ(evaluate_basis(BinomialBasisPolynomial(3, {8, 0, 0, 0}), 2), 32);
  EXPECT_EQ(evaluate_basis(BinomialBasisPolynomial(4, {16, 12, 1, 0, 0}), 5), 715);
  const BinomialBasisPolynomial zero(2, {0, 0, 0});
  for (int s = 1; s < 10; ++s) EXPECT_EQ(evaluate_basis(zero, s), 0);
}

TEST(EvaluateBasis, ConstantTermIsSignedOne) {
  // C(s-1, 0) = 1 for every s >= 1.
  EXPECT_EQ(evaluate_basis(BinomialBasisPolynomial(1, {0, 5}), 1), -5);
  EXPECT_EQ(evaluate_basis(BinomialBasisPolynomial(2, {0, 0, 5}), 1), 5);
}

TEST(EvaluateBasis, RejectsBadInput) {
  EXPECT_THROW(BinomialBasisPolynomial(3, {1, 2}), UsageError);
  EXPECT_THROW(evaluate_basis(BinomialBasisPolynomial(1, {1, 1}), 0), UsageError);
}

TEST(EvaluateBasis, IsLinear) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 6;
    std::vector<BigInt> a(n + 1), b(n + 1), sum(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      a[i] = coeff(rng);
      b[i] = coeff(rng);
      sum[i] = 3 * a[i] - b[i];
    }
    const std::int64_t s = 1 + trial % 17;
    EXPECT_EQ(evaluate_basis(BinomialBasisPolynomial(n, sum), s),
              3 * evaluate_basis(BinomialBasisPolynomial(n, a), s) -
                  evaluate_basis(BinomialBasisPolynomial(n, b), s));
  }
}

TEST(LatticePointCount, Examples) {
  EXPECT_EQ(lattice_point_count(3, 2), 6);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(lattice_point_count(n, 0), 1);
  for (unsigned j = 0; j <= 10; ++j) EXPECT_EQ(lattice_point_count(1, j), 1);
}

TEST(LatticePointCount, MatchesEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j <= 8; ++j) {
      EXPECT_EQ(lattice_point_count(n, j), oracle::count_lattice(n, j)) << n << " " << j;
    }
  }
}

}  // namespace
}  // namespace quadpow
