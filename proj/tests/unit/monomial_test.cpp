#include "quadpow/monomial.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "quadpow/combinatorics.hpp"
#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

TEST(Monomial, DegreeAndProduct) {
  const Monomial a{2, 0, 1};
  const Monomial b{0, 1, 3};
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ((a * b), (Monomial{2, 1, 4}));
  EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW(a / b, UsageError);
}

TEST(Monomial, Divisibility) {
  const Monomial x1sq{2, 0, 0};
  EXPECT_TRUE(x1sq.divides(Monomial{3, 1, 0}));
  EXPECT_FALSE(x1sq.divides(Monomial{1, 1, 1}));
  EXPECT_TRUE(x1sq.divides(x1sq));
}

TEST(Monomial, DivisibilityIsAPartialOrder) {
  const auto deg3 = enumerate_degree(3, 3);
  const auto deg5 = enumerate_degree(3, 5);
  for (const auto& a : deg3) {
    EXPECT_TRUE(a.divides(a));
    for (const auto& b : deg3) {
      if (a.divides(b) && b.divides(a)) EXPECT_EQ(a, b);
      for (const auto& c : deg5) {
        if (a.divides(b) && b.divides(c)) EXPECT_TRUE(a.divides(c));
      }
    }
  }
}

TEST(Monomial, Rendering) {
  EXPECT_EQ((Monomial{2, 0, 1}).to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial(4).to_string(), "1");
  EXPECT_EQ((Monomial{0, 1}).to_string(), "x2");
}

TEST(Monomial, RejectsBadShapes) {
  EXPECT_THROW(Monomial(0), UsageError);
  EXPECT_THROW(Monomial(17), UsageError);
  EXPECT_THROW(Monomial::variable_power(3, 3), UsageError);
  EXPECT_THROW((Monomial{200} * Monomial{100}), UsageError);
}

TEST(EnumerateDegree, Examples) {
  const auto two = enumerate_degree(2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], (Monomial{2, 0}));
  EXPECT_EQ(two[1], (Monomial{1, 1}));
  EXPECT_EQ(two[2], (Monomial{0, 2}));
  const auto constant = enumerate_degree(3, 0);
  ASSERT_EQ(constant.size(), 1u);
  EXPECT_EQ(constant[0], Monomial(3));
  EXPECT_EQ(enumerate_degree(4, 2).size(), 10u);
}

TEST(EnumerateDegree, CountsAndOrder) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned d = 0; d <= 14; ++d) {
      const auto slice = enumerate_degree(n, d);
      ASSERT_EQ(BigInt(slice.size()), binomial(d + n - 1, n - 1)) << n << " " << d;
      EXPECT_TRUE(std::is_sorted(slice.begin(), slice.end()));
      EXPECT_TRUE(std::adjacent_find(slice.begin(), slice.end()) == slice.end());
      for (const auto& m : slice) EXPECT_EQ(m.degree(), d);
    }
  }
}

TEST(EnumerateDegree, AdvanceWalksTheSameOrder) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 8; ++d) {
      const auto slice = enumerate_degree(n, d);
      Monomial m = slice.front();
      for (std::size_t i = 1; i < slice.size(); ++i) {
        ASSERT_TRUE(m.advance_in_degree());
        ASSERT_EQ(m, slice[i]);
      }
      EXPECT_FALSE(m.advance_in_degree());
      EXPECT_EQ(m, slice.back());
    }
  }
}

TEST(RankInDegree, Examples) {
  EXPECT_EQ(rank_in_degree(Monomial{2, 0}), 0u);
  EXPECT_EQ(unrank_in_degree(2, 2, 2), (Monomial{0, 2}));
  EXPECT_THROW(unrank_in_degree(2, 2, 3), UsageError);
}

TEST(RankInDegree, RoundTripIsExhaustive) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 12; ++d) {
      const auto slice = enumerate_degree(n, d);
      for (std::uint64_t k = 0; k < slice.size(); ++k) {
        ASSERT_EQ(rank_in_degree(slice[k]), k);
        ASSERT_EQ(unrank_in_degree(n, d, k), slice[k]);
      }
    }
  }
}

}  // namespace
}  // namespace quadpow
