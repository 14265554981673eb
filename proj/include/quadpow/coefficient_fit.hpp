#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quadpow/bigint.hpp"
#include "quadpow/combinatorics.hpp"
#include "quadpow/errors.hpp"

namespace quadpow {

// s -> l(S/I^s).
using LengthSamples = std::map<std::int64_t, BigInt>;

struct ResidualWitness {
  std::int64_t s = 0;
  Rational expected;  // value of the fitted polynomial
  BigInt actual;      // sample
};

// Hilbert coefficients recovered exactly from length samples.
struct CoefficientFit {
  unsigned n = 0;
  std::vector<Rational> e;  // e_0..e_n, signed, alternating-basis convention
  bool integral = true;
  // Least s from which the fitted polynomial reproduces every sample.
  std::int64_t s_onset = 0;
  // First sample below s_onset that the polynomial misses, if any.
  std::optional<ResidualWitness> residual_witness;

  // Throws UsageError if some e_i is not an integer.
  std::vector<BigInt> integer_coefficients() const;
};

class FitError : public UsageError {
 public:
  enum class Kind { kUnderdetermined, kNotConsecutive, kDegenerate, kNonPolynomialTail };

  FitError(Kind kind, const std::string& what, std::optional<ResidualWitness> witness = {});
  Kind kind() const { return kind_; }
  const std::optional<ResidualWitness>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::optional<ResidualWitness> witness_;
};

// Solves sum_i (-1)^i e_i C(s+n-i-1, n-i) = l(s) for e from exactly n+1
// samples at distinct s >= 1, by exact rational elimination.
std::vector<Rational> solve_window(unsigned n, const std::vector<std::pair<std::int64_t, BigInt>>& points);

Rational evaluate_fit(unsigned n, const std::vector<Rational>& e, std::int64_t s);

// Fits the last n+1 samples and extends backwards while the samples agree.
// Needs at least n+2 consecutive samples, and the sample just before the
// window must agree (otherwise the tail is not yet polynomial).
CoefficientFit fit(const LengthSamples& samples, unsigned n);

// e_j = C(n-j, j) 2^(n-2j) for j <= n/2, zero above: the predicted Hilbert
// coefficients of (x1..xn)^2.
std::vector<BigInt> maximal_square_predicted_coefficients(unsigned n);

}  // namespace quadpow
