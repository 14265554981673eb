#pragma once

#include <utility>
#include <vector>

#include "quadpow/hilbert_data.hpp"
#include "quadpow/monomial.hpp"

namespace quadpow {

// Monomial ideal held by its minimal generating set, sorted in graded order.
class MonomialIdeal {
 public:
  // Drops duplicates and generators divisible by another generator.
  MonomialIdeal(unsigned n, std::vector<Monomial> generators);

  unsigned num_variables() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool contains(const Monomial& m) const;
  bool contains_all_squares() const;
  bool is_quadratic() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  unsigned n_;
  std::vector<Monomial> generators_;
};

using VariablePair = std::pair<unsigned, unsigned>;

// (x1^2, ..., xn^2) + (xi*xj : {i,j} in pairs); variables are 1-based.
// Throws UsageError for indices outside 1..n or i == j.
MonomialIdeal from_squarefree_set(unsigned n, const std::vector<VariablePair>& pairs);

// Every pair {i,j}, i.e. the ideal (x1..xn)^2.
std::vector<VariablePair> all_pairs(unsigned n);

// Minimal generators of I^s. Requires s >= 1.
MonomialIdeal power_generators(const MonomialIdeal& ideal, unsigned s);

// Hilbert function of S_n / I^s in degrees 0..2s+n-2, counted as standard
// monomials slice by slice. Throws PreconditionError unless I is generated in
// degree 2 and contains every x_i^2.
HilbertData hilbert_data(const MonomialIdeal& ideal, unsigned s);

// hilbert_data for s = 1..s_max, sharing the power computation.
std::vector<HilbertData> hilbert_data_range(const MonomialIdeal& ideal, unsigned s_max);

}  // namespace quadpow
