#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace quadpow {

// Exponent vector in k[x1..xn]. Exponents are stored as bytes: every degree
// this project handles is bounded by 2s+n-2 with s and n in the tens.
class Monomial {
 public:
  static constexpr unsigned kMaxVariables = 16;

  // The constant monomial 1 in n variables.
  explicit Monomial(unsigned n);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  // x_i^e, with i zero-based.
  static Monomial variable_power(unsigned n, unsigned i, unsigned e = 1);

  unsigned num_variables() const { return n_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(unsigned i) const { return exps_[i]; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  // "x1^2*x3"; "1" for the constant. Variable names are always x1..xn.
  std::string to_string() const;

  bool operator==(const Monomial& other) const {
    return n_ == other.n_ && exps_ == other.exps_;
  }
  // Graded order: lower degree first, then graded-lex (x1 largest) within a
  // degree, so sorting a degree slice reproduces enumerate_degree order.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

  // Steps to the next monomial of the same degree in enumerate_degree order.
  // Returns false (leaving *this unchanged) when already at xn^d.
  bool advance_in_degree();

 private:
  void set(unsigned i, unsigned e);

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// C(d+n-1, n-1) in machine arithmetic; throws UsageError if it would not fit.
std::uint64_t monomial_count(unsigned n, unsigned d);

// All monomials of degree d in n variables in graded-lex order with x1
// largest: x1^d, x1^(d-1)x2, ..., xn^d.
std::vector<Monomial> enumerate_degree(unsigned n, unsigned d);

// Position of m inside enumerate_degree(m.num_variables(), m.degree()).
std::uint64_t rank_in_degree(const Monomial& m);

// Inverse of rank_in_degree. Throws UsageError when k >= monomial_count(n, d).
Monomial unrank_in_degree(unsigned n, unsigned d, std::uint64_t k);

}  // namespace quadpow
