#include "quadpow/closed_forms.hpp"

#include <gtest/gtest.h>

#include "quadpow/combinatorics.hpp"
#include "quadpow/generic_forms.hpp"
#include "quadpow/monomial_ideal.hpp"
#include "support/oracles.hpp"

namespace quadpow {
namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> widen(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

TEST(CiSeriesGeneral, Examples) {
  EXPECT_EQ(ci_series_general({2, 2, 2}, 2).dims(), ints({1, 3, 6, 10, 9, 3}));
  EXPECT_EQ(ci_series_general({2, 3}, 1).dims(), ints({1, 2, 2, 1}));
  const auto h = ci_series_general({3, 3}, 2);
  EXPECT_EQ(h.length(), 27);
  EXPECT_EQ(h.dims(), widen(oracle::pure_power_ci_dims({3, 3}, 2, static_cast<int>(h.dims().size()) - 1)));
}

TEST(CiSeriesGeneral, MatchesPurePowerOracle) {
  const std::vector<std::vector<unsigned>> cases = {{1}, {2}, {3, 1}, {2, 3}, {2, 2, 3}, {1, 2, 4}, {3, 3, 3}};
  for (const auto& degrees : cases) {
    for (unsigned s = 1; s <= 4; ++s) {
      const auto h = ci_series_general(degrees, s);
      const std::vector<int> d(degrees.begin(), degrees.end());
      EXPECT_EQ(h.dims(), widen(oracle::pure_power_ci_dims(d, s, static_cast<int>(h.dims().size()) - 1)));
      BigInt product = 1;
      for (unsigned k : degrees) product *= k;
      EXPECT_EQ(h.length(), product * binomial(s + degrees.size() - 1, degrees.size()));
    }
  }
}

TEST(CiQuadricSeries, AgreesWithGeneralFormAndEngines) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto squares = from_squarefree_set(n, {});
    for (unsigned s = 1; s <= 5; ++s) {
      const auto closed = ci_quadric_series(n, s);
      EXPECT_EQ(closed, ci_series_general(std::vector<unsigned>(n, 2), s)) << n << " " << s;
      EXPECT_EQ(closed, hilbert_data(squares, s)) << n << " " << s;
    }
  }
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned s = 1; s <= 3; ++s) {
      EXPECT_EQ(ci_quadric_series(n, s).trimmed(),
                hilbert_data_generic(GenericIdealSpec::random(n, n, 1'000'003, 5), s).trimmed());
    }
  }
}

TEST(CiQuadricSeries, LengthAndTopDegree) {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned s = 1; s <= 30; ++s) {
      const auto h = ci_quadric_series(n, s);
      EXPECT_EQ(h.length(), (BigInt(1) << n) * binomial(s + n - 1, n));
      EXPECT_EQ(h.dims().size(), 2 * s + n - 1);
      EXPECT_EQ(h.dims().back(), binomial(s + n - 2, n - 1));
    }
  }
}

TEST(CiPrintedExample, RowsForThreeToFiveMatch) {
  for (unsigned n = 3; n <= 5; ++n) {
    for (unsigned s = 1; s <= 8; ++s) EXPECT_EQ(ci_printed_example(n, s), ci_quadric_series(n, s));
  }
  // The n = 2 row misstates the low degrees.
  EXPECT_EQ(ci_quadric_series(2, 2).dims(), ints({1, 2, 3, 4, 2}));
  EXPECT_NE(ci_printed_example(2, 2), ci_quadric_series(2, 2));
  EXPECT_THROW(ci_printed_example(6, 2), UsageError);
}

TEST(LengthIdentities, HoldForAllListedCases) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned s = 1; s <= 100; ++s) EXPECT_TRUE(ci_length_identity(k, s).holds()) << k << " " << s;
  }
  EXPECT_THROW(ci_length_identity(5, 1), UsageError);
}

TEST(LengthIdentities, GeneralFormNeedsTheShiftedBinomial) {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned s = 1; s <= 20; ++s) {
      EXPECT_TRUE(ci_length_identity_general(n, s, 0).holds());
      EXPECT_FALSE(ci_length_identity_general(n, s, 1).holds());
    }
  }
}

TEST(MaximalSquareIdentity, CorrectedFormHolds) {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned s = 1; s <= 30; ++s) EXPECT_TRUE(maximal_square_identity(n, s).corrected_holds());
  }
  const auto at = maximal_square_identity(4, 5);
  EXPECT_EQ(at.lhs, 715);
  EXPECT_FALSE(at.printed_holds());
}

TEST(KnownSeries, Examples) {
  const auto r34 = known_series("thm-R34", 3);
  EXPECT_EQ(r34.lower, ints({1, 3, 6, 10, 15, 21}));
  EXPECT_EQ(r34.interesting, ints({8}));
  EXPECT_EQ(r34.length(), 64);
  EXPECT_EQ(known_series("conj34-case4", 1).interesting, ints({3}));
  EXPECT_EQ(known_series("conj34-case1", 1).interesting, ints({5, 2}));
  const auto r46 = known_series("conj-R46", 4);
  EXPECT_FALSE(r46.degree_resolved);
  EXPECT_EQ(r46.interesting_total, 40);
  EXPECT_THROW(known_series("no-such-case", 1), UsageError);
  EXPECT_THROW(formula_case("no-such-case"), UsageError);
}

TEST(KnownSeries, MonomialFormulasMatchEngine) {
  for (const auto& f : formula_catalog()) {
    if (f.family != FormulaFamily::kMonomial) continue;
    const auto range = hilbert_data_range(from_squarefree_set(f.n, f.pairs), 5);
    for (const auto& h : range) {
      const auto k = known_series(f, h.s());
      std::vector<BigInt> expected = k.lower;
      expected.insert(expected.end(), k.interesting.begin(), k.interesting.end());
      EXPECT_EQ(h.trimmed(), expected) << f.id << " s=" << h.s();
    }
  }
}

TEST(KnownSeries, GenericFormulaForFourQuadrics) {
  for (unsigned s = 1; s <= 4; ++s) {
    const auto h = hilbert_data_generic(GenericIdealSpec::random(3, 4, 1'000'003, 11), s);
    const auto k = known_series("thm-R34", s);
    std::vector<BigInt> expected = k.lower;
    expected.insert(expected.end(), k.interesting.begin(), k.interesting.end());
    EXPECT_EQ(h.trimmed(), expected) << s;
  }
}

}  // namespace
}  // namespace quadpow
