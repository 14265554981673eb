#include "quadpow/coefficient_fit.hpp"

#include <algorithm>
#include <string>

namespace quadpow {

FitError::FitError(Kind kind, const std::string& what, std::optional<ResidualWitness> witness)
    : UsageError(what), kind_(kind), witness_(std::move(witness)) {}

std::vector<BigInt> CoefficientFit::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(e.size());
  for (const auto& q : e) {
    if (denominator(q) != 1) throw UsageError("fitted coefficient " + to_string(q) + " is not an integer");
    out.push_back(numerator(q));
  }
  return out;
}

std::vector<Rational> solve_window(unsigned n,
                                   const std::vector<std::pair<std::int64_t, BigInt>>& points) {
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  if (points.size() != m) {
    throw UsageError("solve_window needs exactly " + std::to_string(m) + " samples");
  }
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t row = 0; row < m; ++row) {
    const auto& [s, length] = points[row];
    if (s < 1) throw UsageError("samples must have s >= 1");
    for (unsigned i = 0; i <= n; ++i) a[row][i] = Rational(basis_term(n, i, s));
    a[row][m] = Rational(length);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw UsageError("sample points are not distinct");
    std::swap(a[col], a[pivot]);
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j <= m; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = a[i][m] / a[i][i];
  return e;
}

Rational evaluate_fit(unsigned n, const std::vector<Rational>& e, std::int64_t s) {
  Rational total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    if (e[i] != 0) total += e[i] * Rational(basis_term(n, i, s));
  }
  return total;
}

CoefficientFit fit(const LengthSamples& samples, unsigned n) {
  const std::size_t needed = static_cast<std::size_t>(n) + 2;
  if (samples.size() < needed) {
    throw FitError(FitError::Kind::kUnderdetermined,
                   "fitting n=" + std::to_string(n) + " needs at least " + std::to_string(needed) +
                       " samples, got " + std::to_string(samples.size()));
  }
  if (samples.begin()->first < 1) throw UsageError("samples must have s >= 1");
  if (samples.rbegin()->first - samples.begin()->first + 1 !=
      static_cast<std::int64_t>(samples.size())) {
    throw FitError(FitError::Kind::kNotConsecutive, "samples must be at consecutive s");
  }
  if (std::all_of(samples.begin(), samples.end(), [](const auto& kv) { return kv.second == 0; })) {
    throw FitError(FitError::Kind::kDegenerate,
                   "all lengths are zero; no Artinian quotient has this length function");
  }

  std::vector<std::pair<std::int64_t, BigInt>> window(std::prev(samples.end(), n + 1), samples.end());
  CoefficientFit result;
  result.n = n;
  result.e = solve_window(n, window);
  result.integral = std::all_of(result.e.begin(), result.e.end(),
                                [](const Rational& q) { return denominator(q) == 1; });
  result.s_onset = window.front().first;
  for (auto it = std::make_reverse_iterator(std::prev(samples.end(), n + 1)); it != samples.rend(); ++it) {
    const Rational expected = evaluate_fit(n, result.e, it->first);
    if (expected != Rational(it->second)) {
      result.residual_witness = ResidualWitness{it->first, expected, it->second};
      break;
    }
    result.s_onset = it->first;
  }
  const auto consistent = samples.rbegin()->first - result.s_onset + 1;
  if (consistent < static_cast<std::int64_t>(needed)) {
    throw FitError(FitError::Kind::kNonPolynomialTail,
                   "length is not polynomial of degree " + std::to_string(n) +
                       " on the sampled tail: s=" + std::to_string(result.residual_witness->s) +
                       " has length " + to_decimal(result.residual_witness->actual) +
                       " but the fit predicts " + to_string(result.residual_witness->expected),
                   result.residual_witness);
  }
  return result;
}

std::vector<BigInt> maximal_square_predicted_coefficients(unsigned n) {
  if (n == 0) throw UsageError("need n >= 1");
  std::vector<BigInt> e(n + 1, 0);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    e[j] = binomial(n - j, j) * (BigInt(1) << (n - 2 * j));
  }
  return e;
}

}  // namespace quadpow
