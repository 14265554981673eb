#include "quadpow/generic_forms.hpp"

#include <gtest/gtest.h>

#include "quadpow/combinatorics.hpp"
#include "quadpow/monomial_ideal.hpp"

namespace quadpow {
namespace {

constexpr std::uint64_t kP1 = 1000003;
constexpr std::uint64_t kP2 = 2147483647;

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

GenericIdealSpec witness_spec(std::uint64_t prime = kP1) {
  const PrimeFieldContext f(prime);
  std::vector<QuadraticForm> forms;
  for (const char* text : {"x^2", "y^2", "z^2", "x*y+x*z+y*z", "x*z+2*y*z"}) {
    forms.push_back(parse_form(3, text, f));
  }
  return GenericIdealSpec::with_forms(3, forms, prime);
}

// (1+t)^n (1-t^2)^(r-n), cut before the first coefficient <= 0.
std::vector<BigInt> truncated_generic_series(int n, int r) {
  std::vector<BigInt> poly{1};
  auto times = [&](const std::vector<int>& factor) {
    std::vector<BigInt> out(poly.size() + factor.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += poly[i] * factor[j];
    }
    poly = out;
  };
  for (int i = 0; i < n; ++i) times({1, 1});
  for (int i = 0; i < r - n; ++i) times({1, 0, -1});
  std::vector<BigInt> out;
  for (const auto& c : poly) {
    if (c <= 0) break;
    out.push_back(c);
  }
  return out;
}

TEST(SampleForms, DeterministicAndShaped) {
  const auto spec = GenericIdealSpec::random(3, 4, kP1, 1);
  const auto a = sample_forms(spec);
  ASSERT_EQ(a.size(), 4u);
  for (const auto& f : a) {
    EXPECT_EQ(f.coeffs.size(), 6u);
    for (auto c : f.coeffs) EXPECT_LT(c, kP1);
  }
  EXPECT_EQ(a, sample_forms(spec));
  EXPECT_NE(a, sample_forms(GenericIdealSpec::random(3, 4, kP1, 2)));
}

TEST(SampleForms, RefusesTooFewGenerators) {
  EXPECT_THROW(sample_forms(GenericIdealSpec::random(3, 2, kP1, 1)), PreconditionError);
  EXPECT_THROW(sample_forms(witness_spec()), UsageError);
}

TEST(SampleForms, LargerRExtendsSmallerR) {
  const auto four = sample_forms(GenericIdealSpec::random(3, 4, kP1, 5));
  const auto five = sample_forms(GenericIdealSpec::random(3, 5, kP1, 5));
  EXPECT_TRUE(std::equal(four.begin(), four.end(), five.begin()));
}

TEST(ParseForm, Examples) {
  const PrimeFieldContext f;
  const auto sym = parse_form(3, "x*y + x*z + y*z", f);
  // degree-2 order: x^2, xy, xz, y^2, yz, z^2
  EXPECT_EQ(sym.coeffs, (std::vector<std::uint64_t>{0, 1, 1, 0, 1, 0}));
  EXPECT_EQ(parse_form(3, "x*z + 2*y*z", f).coeffs, (std::vector<std::uint64_t>{0, 0, 1, 0, 2, 0}));
  EXPECT_EQ(parse_form(5, "x1^2", f).coeffs[0], 1u);
}

TEST(ParseForm, AcceptedSpellings) {
  const PrimeFieldContext f;
  const auto a = parse_form(3, "2yz - x^2 + 3 x1*x3", f);
  EXPECT_EQ(a.coeffs, (std::vector<std::uint64_t>{kP1 - 1, 0, 3, 0, 2, 0}));
  EXPECT_EQ(parse_form(3, "xy+xy", f).coeffs[1], 2u);
  EXPECT_EQ(parse_form(3, "x1x2", f).coeffs[1], 1u);
  EXPECT_EQ(parse_form(3, "1000004*x^2", f).coeffs[0], 1u);
  EXPECT_EQ(parse_form(3, "x*x", f).coeffs[0], 1u);
}

TEST(ParseForm, Errors) {
  const PrimeFieldContext f;
  try {
    parse_form(3, "x*y + ", f);
    FAIL();
  } catch (const FormParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    parse_form(3, "x*y + x^3", f);
    FAIL();
  } catch (const FormParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("non-quadratic"), std::string::npos);
  }
  EXPECT_THROW(parse_form(3, "5", f), FormParseError);
  EXPECT_THROW(parse_form(3, "x*y x", f), FormParseError);
  EXPECT_THROW(parse_form(3, "w^2", f), FormParseError);
  EXPECT_THROW(parse_form(5, "x^2", f), FormParseError);
  EXPECT_THROW(parse_form(3, "x4^2", f), FormParseError);
  EXPECT_THROW(parse_form(3, "x*", f), FormParseError);
  EXPECT_THROW(parse_form(3, "", f), FormParseError);
  EXPECT_THROW(parse_form(3, "x + y", f), FormParseError);
}

TEST(PowerSliceDim, Examples) {
  EXPECT_EQ(power_slice_dim(GenericIdealSpec::random(3, 4, kP1, 1), 1, 2), 4u);
  EXPECT_EQ(power_slice_dim(GenericIdealSpec::random(3, 3, kP1, 1), 2, 4), 6u);
  EXPECT_EQ(power_slice_dim(GenericIdealSpec::random(3, 5, kP1, 1), 2, 4), 15u);
  EXPECT_THROW(power_slice_dim(GenericIdealSpec::random(3, 5, kP1, 1), 2, 3), UsageError);
}

TEST(HilbertDataGeneric, Examples) {
  EXPECT_EQ(hilbert_data_generic(GenericIdealSpec::random(3, 4, kP1, 1), 2).trimmed(), big({1, 3, 6, 10, 5}));
  EXPECT_EQ(hilbert_data_generic(GenericIdealSpec::random(3, 5, kP1, 1), 1).trimmed(), big({1, 3, 1}));
  EXPECT_THROW(hilbert_data_generic(GenericIdealSpec::random(3, 2, kP1, 1), 1), PreconditionError);
}

TEST(HilbertDataGeneric, CompleteIntersectionMatchesSquares) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto squares = hilbert_data_range(from_squarefree_set(n, {}), 4);
    for (unsigned s = 1; s <= 4; ++s) {
      EXPECT_EQ(hilbert_data_generic(GenericIdealSpec::random(n, n, kP1, 3), s), squares[s - 1])
          << n << " " << s;
    }
  }
}

TEST(HilbertDataGeneric, FirstPowerIsTruncatedGenericSeries) {
  std::vector<std::pair<unsigned, unsigned>> cases{{4, 5}, {5, 6}};
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned r = n; r <= 6; ++r) cases.emplace_back(n, r);
  }
  for (const auto& [n, r] : cases) {
    EXPECT_EQ(hilbert_data_generic(GenericIdealSpec::random(n, r, kP1, 11), 1).trimmed(),
              truncated_generic_series(static_cast<int>(n), static_cast<int>(r)))
        << n << " " << r;
  }
}

TEST(HilbertDataGeneric, OneMoreGeneratorNeverIncreasesDims) {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned r = n; r <= n + 3; ++r) {
      for (unsigned s = 1; s <= 3; ++s) {
        const auto smaller = hilbert_data_generic(GenericIdealSpec::random(n, r, kP1, 4), s);
        const auto larger = hilbert_data_generic(GenericIdealSpec::random(n, r + 1, kP1, 4), s);
        for (std::size_t d = 2 * s; d < smaller.dims().size(); ++d) {
          EXPECT_LE(larger.dims()[d], smaller.dims()[d]);
        }
      }
    }
  }
}

TEST(HilbertDataGeneric, IndependentOfPrimeAndSeed) {
  for (unsigned s = 1; s <= 3; ++s) {
    const auto a = hilbert_data_generic(GenericIdealSpec::random(3, 4, kP1, 1), s);
    EXPECT_EQ(a, hilbert_data_generic(GenericIdealSpec::random(3, 4, kP2, 1), s));
    EXPECT_EQ(a, hilbert_data_generic(GenericIdealSpec::random(3, 4, kP1, 77), s));
  }
}

TEST(HilbertDataGeneric, RejectsNonArtinianExplicitForms) {
  const PrimeFieldContext f;
  std::vector<QuadraticForm> forms;
  for (const char* text : {"x^2", "x*y", "y^2"}) forms.push_back(parse_form(3, text, f));
  EXPECT_THROW(hilbert_data_generic(GenericIdealSpec::with_forms(3, forms, kP1), 2), PreconditionError);
}

TEST(IsPowerFull, Examples) {
  EXPECT_TRUE(is_power_full(GenericIdealSpec::random(3, 5, kP1, 1), 2));
  EXPECT_FALSE(is_power_full(GenericIdealSpec::random(3, 5, kP1, 1), 1));
  EXPECT_FALSE(is_power_full(GenericIdealSpec::random(3, 4, kP1, 1), 3));
  EXPECT_TRUE(is_power_full(witness_spec(), 3));
  EXPECT_TRUE(is_power_full(witness_spec(kP2), 4));
}

TEST(PhiProbe, ThreeVariables) {
  const auto table = phi_probe(3, {4, 5, 6}, 5, 2, kP1, 1);
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_FALSE(table.rows[0].min_s.has_value());
  EXPECT_EQ(table.rows[1].min_s, 2u);
  ASSERT_TRUE(table.rows[2].min_s.has_value());
  EXPECT_LE(*table.rows[2].min_s, 2u);
  EXPECT_EQ(table.minimal_r, 5u);
  EXPECT_TRUE(table.warnings.empty());
  EXPECT_EQ(table.seeds, (std::vector<std::uint64_t>{1, 2}));
}

TEST(PhiProbe, TwoVariables) {
  const auto table = phi_probe(2, {3}, 3, 1, kP1, 9);
  EXPECT_EQ(table.rows.at(0).min_s, 1u);
}

}  // namespace
}  // namespace quadpow
