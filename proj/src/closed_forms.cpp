#include "quadpow/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "quadpow/combinatorics.hpp"
#include "quadpow/errors.hpp"

namespace quadpow {

namespace {

BigInt c(std::int64_t a, std::int64_t b) { return binomial_or_zero(a, b); }

BigInt exact_div(const BigInt& num, int den) {
  if (num % den != 0) throw std::logic_error("closed form not integral");
  return num / den;
}

std::vector<BigInt> full_lower(unsigned n, unsigned s) {
  std::vector<BigInt> out;
  for (unsigned i = 0; i < 2 * s; ++i) out.push_back(c(i + n - 1, n - 1));
  return out;
}

// Counts lattice points a in N^n with |a| <= s-1 by weight sum a_k d_k.
void lattice_weights(const std::vector<unsigned>& degrees, std::size_t k, unsigned budget,
                     unsigned weight, std::vector<BigInt>& by_weight) {
  if (k == degrees.size()) {
    by_weight[weight] += 1;
    return;
  }
  for (unsigned a = 0; a <= budget; ++a) {
    lattice_weights(degrees, k + 1, budget - a, weight + a * degrees[k], by_weight);
  }
}

using SeriesFn = std::function<KnownSeries(unsigned s)>;

KnownSeries resolved(unsigned n, unsigned s, std::vector<BigInt> lower, std::vector<BigInt> interesting) {
  KnownSeries k;
  k.n = n;
  k.s = s;
  k.lower = std::move(lower);
  k.interesting = std::move(interesting);
  for (const auto& v : k.interesting) k.interesting_total += v;
  return k;
}

KnownSeries total_only(unsigned n, unsigned s, BigInt total) {
  KnownSeries k;
  k.n = n;
  k.s = s;
  k.lower = full_lower(n, s);
  k.interesting_total = std::move(total);
  k.degree_resolved = false;
  return k;
}

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

struct CatalogEntry {
  FormulaCase info;
  SeriesFn series;
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto generic = [&](std::string id, unsigned n, unsigned r, unsigned s_min, bool conj,
                     std::vector<BigInt> printed, std::string formula, SeriesFn fn) {
    FormulaCase f{std::move(id), FormulaFamily::kGeneric, n, r, {}, s_min, conj, std::move(printed),
                  std::move(formula)};
    cat.push_back({std::move(f), std::move(fn)});
  };
  auto monomial = [&](std::string id, unsigned n, std::vector<VariablePair> pairs, bool conj,
                      std::vector<BigInt> printed, std::string formula,
                      std::function<std::vector<BigInt>(std::int64_t)> part) {
    FormulaCase f{std::move(id), FormulaFamily::kMonomial, n, 0, std::move(pairs), 1, conj,
                  std::move(printed), std::move(formula)};
    cat.push_back({std::move(f), [n, part](unsigned s) {
                     return resolved(n, s, full_lower(n, s), part(s));
                   }});
  };

  generic("thm-R34", 3, 4, 1, false, ints({8, 4, 3, 4}), "sum_{i<2s} C(i+2,2) t^i + (3s-1) t^{2s}",
          [](unsigned s) { return resolved(3, s, full_lower(3, s), {BigInt(3 * s - 1)}); });
  generic("thm-R35", 3, 5, 2, false, {}, "sum_{i<2s} C(2i+2,2) t^i", [](unsigned s) {
    std::vector<BigInt> lower;
    for (unsigned i = 0; i < 2 * s; ++i) lower.push_back(c(2 * i + 2, 2));
    return resolved(3, s, std::move(lower), {});
  });
  generic("conj-R45", 4, 5, 4, true, ints({16, 12, 21, 35, 35}),
          "sum_{i<2s} C(i+3,3) t^i + 10s^2-25s+35", [](unsigned s) {
            const std::int64_t v = 10 * std::int64_t{s} * s - 25 * std::int64_t{s} + 35;
            return total_only(4, s, BigInt(v));
          });
  generic("conj-R46", 4, 6, 4, true, ints({16, 12, 1, 10}), "sum_{i<2s} C(i+3,3) t^i + 10s",
          [](unsigned s) { return total_only(4, s, BigInt(10 * s)); });
  generic("conj-R47", 4, 7, 3, true, ints({16, 12, 1}), "sum_{i<2s} C(i+3,3) t^i",
          [](unsigned s) { return resolved(4, s, full_lower(4, s), {}); });
  generic("conj-R59", 5, 9, 4, true, ints({32, 32, 6}), "sum_{i<2s} C(i+4,4) t^i",
          [](unsigned s) { return resolved(5, s, full_lower(5, s), {}); });

  monomial("thm33-case1", 3, {{1, 2}}, false, ints({8, 6}), "H_s = 2 C(s+1,2) t^{2s}",
           [](std::int64_t s) { return std::vector<BigInt>{2 * c(s + 1, 2)}; });
  monomial("thm33-case2", 3, {{1, 2}, {1, 3}}, false, ints({8, 4, 1}), "H_s = s t^{2s}",
           [](std::int64_t s) { return std::vector<BigInt>{BigInt(s)}; });

  monomial("conj34-case1", 4, {{1, 2}}, true, ints({16, 4}),
           "H_s = (2s^3+5s^2+3s)/2 t^{2s} + 2 C(s+2,3) t^{2s+1}", [](std::int64_t s) {
             return std::vector<BigInt>{exact_div(BigInt(2 * s * s * s + 5 * s * s + 3 * s), 2),
                                        2 * c(s + 2, 3)};
           });
  monomial("conj34-case2", 4, {{1, 2}, {1, 3}}, true, ints({16, 16, 2}),
           "H_s = 4 C(s+2,3) t^{2s} + C(s+1,2) t^{2s+1}",
           [](std::int64_t s) { return std::vector<BigInt>{4 * c(s + 2, 3), c(s + 1, 2)}; });
  monomial("conj34-case3", 4, {{1, 2}, {3, 4}}, true, ints({16, 16, 1}), "H_s = 4 C(s+2,3) t^{2s}",
           [](std::int64_t s) { return std::vector<BigInt>{4 * c(s + 2, 3)}; });
  monomial("conj34-case4", 4, {{1, 2}, {1, 3}, {2, 3}}, true, ints({16, 8}),
           "H_s = s(s+1)(4s+5)/6 t^{2s}", [](std::int64_t s) {
             return std::vector<BigInt>{exact_div(BigInt(s * (s + 1) * (4 * s + 5)), 6)};
           });
  monomial("conj34-case5", 4, {{1, 2}, {1, 3}, {1, 4}}, true, ints({16, 12, 6}),
           "H_s = s(2s+1) t^{2s} + C(s+1,2) t^{2s+1}",
           [](std::int64_t s) { return std::vector<BigInt>{BigInt(s * (2 * s + 1)), c(s + 1, 2)}; });
  monomial("conj34-case6", 4, {{1, 2}, {2, 3}, {3, 4}}, true, ints({16, 12, 5}), "H_s = s(2s+1) t^{2s}",
           [](std::int64_t s) { return std::vector<BigInt>{BigInt(s * (2 * s + 1))}; });
  monomial("conj34-case7", 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, true, ints({16, 12, 1, 2}),
           "H_s = 2s t^{2s}", [](std::int64_t s) { return std::vector<BigInt>{BigInt(2 * s)}; });
  monomial("conj34-case8", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}, true, ints({16, 12, 3}),
           "H_s = 2 C(s+1,2) t^{2s}", [](std::int64_t s) { return std::vector<BigInt>{2 * c(s + 1, 2)}; });
  monomial("conj34-case9", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, true, ints({16, 12, 1, 1}),
           "H_s = s t^{2s}", [](std::int64_t s) { return std::vector<BigInt>{BigInt(s)}; });
  return cat;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.info.id == id) return e;
  }
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.info.id;
  throw UsageError("unknown formula case '" + std::string(id) + "'; known: " + known);
}

}  // namespace

HilbertData ci_series_general(const std::vector<unsigned>& degrees, unsigned s) {
  if (degrees.empty()) throw UsageError("need at least one degree");
  if (s == 0) throw UsageError("need s >= 1");
  unsigned max_degree = 0;
  unsigned socle = 0;
  for (unsigned d : degrees) {
    if (d == 0) throw UsageError("form degrees must be >= 1");
    max_degree = std::max(max_degree, d);
    socle += d - 1;
  }
  // Hilbert function of S/Q: product of (1 + t + ... + t^(d-1)).
  std::vector<BigInt> base{1};
  for (unsigned d : degrees) {
    std::vector<BigInt> next(base.size() + d - 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (unsigned k = 0; k < d; ++k) next[i + k] += base[i];
    }
    base = std::move(next);
  }
  const unsigned top_weight = (s - 1) * max_degree;
  std::vector<BigInt> by_weight(top_weight + 1, 0);
  lattice_weights(degrees, 0, s - 1, 0, by_weight);
  std::vector<BigInt> dims(socle + top_weight + 1, 0);
  for (std::size_t w = 0; w < by_weight.size(); ++w) {
    if (by_weight[w] == 0) continue;
    for (std::size_t i = 0; i < base.size(); ++i) dims[w + i] += by_weight[w] * base[i];
  }
  return HilbertData(static_cast<unsigned>(degrees.size()), s, std::move(dims));
}

HilbertData ci_quadric_series(unsigned n, unsigned s) {
  if (n == 0 || s == 0) throw UsageError("need n >= 1 and s >= 1");
  const std::int64_t nn = n;
  const std::int64_t top = 2 * std::int64_t{s} + nn - 2;
  std::vector<BigInt> dims(static_cast<std::size_t>(std::max<std::int64_t>(top, 2 * s - 1) + 1), 0);
  for (std::int64_t i = 0; i < 2 * std::int64_t{s}; ++i) dims[i] = c(i + nn - 1, nn - 1);
  for (std::int64_t i = 2 * s; i <= top; ++i) {
    BigInt v = 0;
    for (std::int64_t j = 0; j <= std::int64_t{s} - 1; ++j) v += c(nn + j - 1, nn - 1) * c(nn, i - 2 * j);
    dims[i] = v;
  }
  return HilbertData(n, s, std::move(dims));
}

HilbertData ci_printed_example(unsigned n, unsigned s) {
  if (n < 2 || n > 5) throw UsageError("printed examples exist for n = 2..5");
  if (s == 0) throw UsageError("need s >= 1");
  const std::int64_t ss = s;
  std::vector<BigInt> dims;
  for (std::int64_t i = 0; i < 2 * ss; ++i) dims.push_back(n == 2 ? BigInt(ss + 1) : c(i + n - 1, n - 1));
  switch (n) {
    case 2:
      dims.push_back(BigInt(ss));
      break;
    case 3:
      dims.push_back(3 * c(ss + 1, 2));
      dims.push_back(c(ss + 1, 2));
      break;
    case 4:
      dims.push_back(c(ss + 1, 3) + 6 * c(ss + 2, 3));
      dims.push_back(4 * c(ss + 2, 3));
      dims.push_back(c(ss + 2, 3));
      break;
    default:
      dims.push_back(5 * c(ss + 2, 4) + 10 * c(ss + 3, 4));
      dims.push_back(c(ss + 2, 4) + 10 * c(ss + 3, 4));
      dims.push_back(5 * c(ss + 3, 4));
      dims.push_back(c(ss + 3, 4));
      break;
  }
  return HilbertData(n, s, std::move(dims));
}

IdentityCheck ci_length_identity(unsigned k, unsigned s) {
  const std::int64_t t = s;
  switch (k) {
    case 1:
      return {c(2 * t + 1, 2) + t, 4 * c(t + 1, 2)};
    case 2:
      return {c(2 * t + 2, 3) + 4 * c(t + 1, 2), 8 * c(t + 2, 3)};
    case 3:
      return {c(2 * t + 3, 4) + c(t + 1, 3) + 11 * c(t + 2, 3), 16 * c(t + 3, 4)};
    case 4:
      return {c(2 * t + 4, 5) + 6 * c(t + 2, 4) + 26 * c(t + 3, 4), 32 * c(t + 4, 5)};
    default:
      throw UsageError("length identities are numbered 1..4");
  }
}

IdentityCheck ci_length_identity_general(unsigned n, unsigned s, unsigned offset) {
  const auto series = ci_quadric_series(n, s);
  BigInt upper = 0;
  for (std::size_t i = 2 * std::size_t{s}; i < series.dims().size(); ++i) upper += series.dims()[i];
  const std::int64_t nn = n;
  return {c(nn + 2 * std::int64_t{s} - 1 + offset, nn) + upper,
          (BigInt(1) << n) * c(std::int64_t{s} + nn - 1, nn)};
}

MaximalSquareIdentity maximal_square_identity(unsigned n, unsigned s) {
  if (n == 0 || s == 0) throw UsageError("need n >= 1 and s >= 1");
  const std::int64_t nn = n;
  const std::int64_t ss = s;
  MaximalSquareIdentity out;
  out.lhs = c(2 * ss - 1 + nn, nn);
  for (std::int64_t j = 0; 2 * j <= nn; ++j) {
    const BigInt weight = (BigInt(1) << (n - 2 * j)) * c(nn - j, j);
    const BigInt sign = (j % 2 == 0) ? 1 : -1;
    out.printed_rhs += sign * weight * c(ss + nn - j, nn - j);
    out.corrected_rhs += sign * weight * c(ss + nn - j - 1, nn - j);
  }
  return out;
}

BigInt KnownSeries::length() const {
  BigInt total = interesting_total;
  for (const auto& v : lower) total += v;
  return total;
}

const std::vector<FormulaCase>& formula_catalog() {
  static const std::vector<FormulaCase> cases = [] {
    std::vector<FormulaCase> out;
    for (const auto& e : catalog()) out.push_back(e.info);
    return out;
  }();
  return cases;
}

const FormulaCase& formula_case(std::string_view id) { return entry(id).info; }

KnownSeries known_series(const FormulaCase& formula, unsigned s) { return known_series(formula.id, s); }

KnownSeries known_series(std::string_view id, unsigned s) {
  if (s == 0) throw UsageError("need s >= 1");
  return entry(id).series(s);
}

}  // namespace quadpow
