#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadpow/errors.hpp"
#include "quadpow/hilbert_data.hpp"
#include "quadpow/prime_field.hpp"

namespace quadpow {

// Degree-2 form over Z/p; coeffs[k] multiplies unrank_in_degree(n, 2, k).
struct QuadraticForm {
  unsigned n = 0;
  std::vector<std::uint64_t> coeffs;

  std::string to_string() const;
  bool operator==(const QuadraticForm&) const = default;
};

// Ideal generated by r quadrics in n variables over Z/p. With no explicit
// forms the generators are pseudo-random (see sample_forms).
struct GenericIdealSpec {
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t prime = PrimeFieldContext::kDefaultPrime;
  std::uint64_t seed = 1;
  std::optional<std::vector<QuadraticForm>> forms;

  static GenericIdealSpec random(unsigned n, unsigned r, std::uint64_t prime, std::uint64_t seed);
  static GenericIdealSpec with_forms(unsigned n, std::vector<QuadraticForm> forms,
                                     std::uint64_t prime);

  bool is_random() const { return !forms.has_value(); }
};

// Syntax error in parse_form; position is a 0-based offset into the text.
class FormParseError : public UsageError {
 public:
  FormParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The first r forms drawn from a mt19937_64 stream seeded by (n, p, seed),
// coefficients uniform in Z/p. Forms for r are a prefix of those for r + 1.
// Throws UsageError for explicit specs, PreconditionError when r < n.
std::vector<QuadraticForm> sample_forms(const GenericIdealSpec& spec);

// Explicit forms, or sample_forms for random specs.
std::vector<QuadraticForm> generators_of(const GenericIdealSpec& spec);

// Parses a sum of integer multiples of degree-2 monomials, e.g.
// "x*z + 2*y*z", "x1^2 - 3x2x3". Variables are x1..xn; x, y, z, w alias
// x1..x4 when n <= 4. Coefficients are reduced mod p.
QuadraticForm parse_form(unsigned n, std::string_view text, const PrimeFieldContext& field);

// dim_k (I^s)_d for d >= 2s: rank of all m*g with g a product of s
// generators and m a monomial of degree d - 2s.
std::uint64_t power_slice_dim(const GenericIdealSpec& spec, unsigned s, unsigned d);

// Hilbert function of S_n / I^s in degrees 0..2s+n-2. Throws
// PreconditionError when r < n or when degree 2s+n-1 is not already inside
// I^s (the forms do not contain a regular sequence).
HilbertData hilbert_data_generic(const GenericIdealSpec& spec, unsigned s);

// I^s == (x1..xn)^(2s): the degree-2s slice of I^s is everything.
bool is_power_full(const GenericIdealSpec& spec, unsigned s);

struct PhiRow {
  unsigned r = 0;
  // Smallest s <= s_max with I^s full, per trial (seed_base + t).
  std::vector<std::optional<unsigned>> per_trial;
  bool trials_agree = true;
  // Agreed value; when trials disagree, the smallest value seen.
  std::optional<unsigned> min_s;
};

struct PhiTable {
  unsigned n = 0;
  unsigned s_max = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<PhiRow> rows;
  // Smallest r in the table with some s <= s_max.
  std::optional<unsigned> minimal_r;
  std::vector<std::string> warnings;
};

// For each r in r_values (each >= n): the least s <= s_max with
// I^s = m^(2s) for r random quadrics, over `trials` seeds.
PhiTable phi_probe(unsigned n, const std::vector<unsigned>& r_values, unsigned s_max,
                   unsigned trials, std::uint64_t prime, std::uint64_t seed_base);

}  // namespace quadpow
