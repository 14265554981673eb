#include "quadpow/monomial_ideal.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "quadpow/errors.hpp"

namespace quadpow {

namespace {

using Membership = std::vector<char>;

// Marks which degree-(2k) monomials are products g*h with g a minimal
// generator of I^(k-1) (given by prev over degree 2k-2) and h a generator of I.
Membership next_power(unsigned n, unsigned degree, const Membership& prev,
                      const std::vector<Monomial>& gens) {
  Membership out(monomial_count(n, degree), 0);
  Monomial u = Monomial::variable_power(n, 0, degree);
  std::size_t idx = 0;
  do {
    for (const Monomial& h : gens) {
      if (h.divides(u) && prev[rank_in_degree(u / h)]) {
        out[idx] = 1;
        break;
      }
    }
    ++idx;
  } while (u.advance_in_degree());
  return out;
}

// A degree-d monomial lies in an ideal generated in degrees < d iff one of
// its quotients by a variable lies in the ideal.
Membership lift_one_degree(unsigned n, unsigned degree, const Membership& below) {
  Membership out(monomial_count(n, degree), 0);
  Monomial u = Monomial::variable_power(n, 0, degree);
  std::size_t idx = 0;
  do {
    for (unsigned i = 0; i < n; ++i) {
      if (u.exponent(i) == 0) continue;
      if (below[rank_in_degree(u / Monomial::variable_power(n, i))]) {
        out[idx] = 1;
        break;
      }
    }
    ++idx;
  } while (u.advance_in_degree());
  return out;
}

std::uint64_t count_outside(const Membership& m) {
  return static_cast<std::uint64_t>(std::count(m.begin(), m.end(), 0));
}

HilbertData quotient_data(unsigned n, unsigned s, const Membership& power) {
  const unsigned top = 2 * s + n - 2;
  std::vector<BigInt> dims(top + 1, 0);
  for (unsigned d = 0; d < 2 * s; ++d) dims[d] = monomial_count(n, d);
  Membership current = power;
  for (unsigned d = 2 * s; d <= top; ++d) {
    const std::uint64_t standard = count_outside(current);
    dims[d] = standard;
    // Once a slice is entirely inside I^s every later slice is too.
    if (standard == 0 || d == top) break;
    current = lift_one_degree(n, d + 1, current);
  }
  return HilbertData(n, s, std::move(dims));
}

void require_engine_input(const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic()) {
    throw PreconditionError("monomial engine requires an ideal generated in degree 2");
  }
  if (!ideal.contains_all_squares()) {
    throw PreconditionError(
        "monomial engine requires every x_i^2 among the generators "
        "(otherwise S/I^s is not Artinian within degree 2s+n-2)");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(unsigned n, std::vector<Monomial> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.num_variables() != n_) throw UsageError("generator lives in a different ring");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  // Sorted by degree, so a generator can only be divided by an earlier one of
  // strictly smaller degree.
  std::vector<Monomial> minimal;
  minimal.reserve(generators_.size());
  for (const auto& g : generators_) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& h) {
      return h.degree() < g.degree() && h.divides(g);
    });
    if (!redundant) minimal.push_back(g);
  }
  generators_ = std::move(minimal);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains_all_squares() const {
  for (unsigned i = 0; i < n_; ++i) {
    if (!contains(Monomial::variable_power(n_, i, 2))) return false;
  }
  return true;
}

bool MonomialIdeal::is_quadratic() const {
  return !generators_.empty() && std::all_of(generators_.begin(), generators_.end(),
                                             [](const Monomial& g) { return g.degree() == 2; });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal from_squarefree_set(unsigned n, const std::vector<VariablePair>& pairs) {
  std::vector<Monomial> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(Monomial::variable_power(n, i, 2));
  for (const auto& [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw UsageError("variable pair {" + std::to_string(i) + "," + std::to_string(j) +
                       "} outside 1.." + std::to_string(n));
    }
    if (i == j) throw UsageError("variable pair {" + std::to_string(i) + "," +
                                 std::to_string(j) + "} is not squarefree");
    gens.push_back(Monomial::variable_power(n, i - 1) * Monomial::variable_power(n, j - 1));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<VariablePair> all_pairs(unsigned n) {
  std::vector<VariablePair> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

MonomialIdeal power_generators(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw UsageError("power_generators requires s >= 1");
  const unsigned n = ideal.num_variables();
  std::unordered_set<Monomial, MonomialHash> current{Monomial(n)};
  for (unsigned k = 0; k < s; ++k) {
    std::unordered_set<Monomial, MonomialHash> next;
    next.reserve(current.size() * ideal.generators().size());
    for (const auto& g : current) {
      for (const auto& h : ideal.generators()) next.insert(g * h);
    }
    current = std::move(next);
  }
  return MonomialIdeal(n, std::vector<Monomial>(current.begin(), current.end()));
}

HilbertData hilbert_data(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw UsageError("hilbert_data requires s >= 1");
  return hilbert_data_range(ideal, s).back();
}

std::vector<HilbertData> hilbert_data_range(const MonomialIdeal& ideal, unsigned s_max) {
  require_engine_input(ideal);
  const unsigned n = ideal.num_variables();
  std::vector<HilbertData> out;
  out.reserve(s_max);
  Membership power(monomial_count(n, 2), 0);
  for (const auto& g : ideal.generators()) power[rank_in_degree(g)] = 1;
  for (unsigned s = 1; s <= s_max; ++s) {
    if (s > 1) power = next_power(n, 2 * s, power, ideal.generators());
    out.push_back(quotient_data(n, s, power));
  }
  return out;
}

}  // namespace quadpow
