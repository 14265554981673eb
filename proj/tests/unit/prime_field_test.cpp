#include "quadpow/prime_field.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "quadpow/errors.hpp"
#include "support/oracles.hpp"

namespace quadpow {
namespace {

std::vector<std::vector<std::uint64_t>> reduce_rows(const PrimeFieldContext& f,
                                                    const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> row;
    for (auto v : r) row.push_back(f.reduce(v));
    out.push_back(row);
  }
  return out;
}

TEST(PrimeFieldContext, ValidatesModulus) {
  EXPECT_NO_THROW(PrimeFieldContext(1000003));
  EXPECT_NO_THROW(PrimeFieldContext(2147483647));
  EXPECT_THROW(PrimeFieldContext(1000001), UsageError);  // 101 * 9901
  EXPECT_THROW(PrimeFieldContext(65537), UsageError);    // prime but too small
  EXPECT_THROW(PrimeFieldContext(4294967311ULL), UsageError);  // prime but >= 2^32
}

TEST(PrimeFieldContext, Arithmetic) {
  const PrimeFieldContext f(1000003);
  EXPECT_EQ(f.reduce(-1), 1000002u);
  EXPECT_EQ(f.add(1000002, 5), 4u);
  EXPECT_EQ(f.sub(3, 5), 1000001u);
  for (std::uint64_t a : {1ULL, 2ULL, 12345ULL, 1000002ULL}) EXPECT_EQ(f.mul(a, f.inverse(a)), 1u);
  EXPECT_THROW(f.inverse(0), UsageError);
}

TEST(IsProbablePrime, SmallRange) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) prime = false;
    }
    EXPECT_EQ(is_probable_prime(n), prime) << n;
  }
}

TEST(RankWithEarlyExit, Examples) {
  const PrimeFieldContext f;
  std::vector<std::vector<std::uint64_t>> identity(5, std::vector<std::uint64_t>(5, 0));
  for (int i = 0; i < 5; ++i) identity[i][i] = 1;
  EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, 5, identity), 5), 5u);

  std::vector<std::vector<std::uint64_t>> zeros(7, std::vector<std::uint64_t>(4, 0));
  EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, 4, zeros), 4), 0u);
  EXPECT_THROW(rank_with_early_exit(SliceMatrix::from_rows(f, 4, zeros), 5), UsageError);
}

TEST(RankWithEarlyExit, StopsAtCap) {
  const PrimeFieldContext f;
  std::size_t produced = 0;
  SliceMatrix m{f, 3, 100, [&](std::size_t i, std::span<std::uint64_t> row) {
                  ++produced;
                  row[i % 3] = 1;
                }};
  EXPECT_EQ(rank_with_early_exit(m, 3), 3u);
  EXPECT_EQ(produced, 3u);
  produced = 0;
  EXPECT_EQ(rank_with_early_exit(m, 2), 2u);
  EXPECT_EQ(produced, 2u);
}

TEST(RankWithEarlyExit, MatchesRationalOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  const PrimeFieldContext f(1000003);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 8;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    // Sparse-ish so rank deficiency shows up.
    for (auto& r : m) {
      for (auto& v : r) v = (rng() % 3 == 0) ? 0 : entry(rng);
    }
    if (rows > 2) m[rows - 1] = m[0];
    EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, cols, reduce_rows(f, m)), cols),
              std::min(oracle::rational_rank(m), cols));
  }
}

TEST(RankWithEarlyExit, RandomFiftyByTwenty) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-50, 50);
  const PrimeFieldContext f(1000003);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<std::int64_t>> m(50, std::vector<std::int64_t>(20));
    // Rank at most 12: every row is a combination of 12 seed rows.
    std::vector<std::vector<std::int64_t>> seeds(12, std::vector<std::int64_t>(20));
    for (auto& r : seeds) {
      for (auto& v : r) v = entry(rng);
    }
    for (auto& r : m) {
      std::fill(r.begin(), r.end(), 0);
      for (const auto& sr : seeds) {
        const int w = (rng() % 4 == 0) ? entry(rng) % 3 : 0;
        for (std::size_t j = 0; j < 20; ++j) r[j] += w * sr[j];
      }
    }
    EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, 20, reduce_rows(f, m)), 20),
              oracle::rational_rank(m));
  }
}

TEST(RankWithEarlyExit, InvariantUnderRowPermutation) {
  std::mt19937 rng(3);
  const PrimeFieldContext f;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<std::uint64_t>> rows(15, std::vector<std::uint64_t>(10));
    for (auto& r : rows) {
      for (auto& v : r) v = (rng() % 2) ? rng() % f.prime() : 0;
    }
    rows[3] = rows[1];
    const auto base = rank_with_early_exit(SliceMatrix::from_rows(f, 10, rows), 10);
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, 10, rows), 10), base);
    EXPECT_EQ(rank_with_early_exit(SliceMatrix::from_rows(f, 10, rows), 10), base);
  }
}

}  // namespace
}  // namespace quadpow
