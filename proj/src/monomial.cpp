#include "quadpow/monomial.hpp"

#include <algorithm>
#include <limits>

#include "quadpow/errors.hpp"

namespace quadpow {

namespace {

constexpr unsigned kTableSize = 160;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Pascal triangle in uint64, saturating on overflow.
struct BinomialTable {
  std::array<std::array<std::uint64_t, kTableSize>, kTableSize> c{};

  BinomialTable() {
    for (unsigned a = 0; a < kTableSize; ++a) {
      c[a][0] = 1;
      for (unsigned b = 1; b <= a; ++b) {
        const std::uint64_t x = c[a - 1][b - 1];
        const std::uint64_t y = c[a - 1][b];
        c[a][b] = (x > kSaturated - y) ? kSaturated : x + y;
      }
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

std::uint64_t small_binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  if (a >= kTableSize) throw UsageError("monomial index arithmetic out of range");
  const std::uint64_t v = table().c[a][b];
  if (v == kSaturated) throw UsageError("monomial count does not fit in 64 bits");
  return v;
}

void check_n(unsigned n) {
  if (n == 0 || n > Monomial::kMaxVariables) {
    throw UsageError("number of variables must be in 1.." +
                     std::to_string(Monomial::kMaxVariables) + ", got " + std::to_string(n));
  }
}

void fill_degree(unsigned n, unsigned var, unsigned remaining, std::vector<unsigned>& exps,
                 std::vector<Monomial>& out) {
  if (var + 1 == n) {
    exps[var] = remaining;
    out.emplace_back(std::span<const unsigned>(exps));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    fill_degree(n, var + 1, remaining - e, exps, out);
  }
}

}  // namespace

Monomial::Monomial(unsigned n) : n_(static_cast<std::uint8_t>(n)) { check_n(n); }

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents)
    : n_(static_cast<std::uint8_t>(exponents.size())) {
  check_n(static_cast<unsigned>(exponents.size()));
  for (unsigned i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable_power(unsigned n, unsigned i, unsigned e) {
  Monomial m(n);
  if (i >= n) throw UsageError("variable index out of range");
  m.set(i, e);
  return m;
}

void Monomial::set(unsigned i, unsigned e) {
  if (e > std::numeric_limits<std::uint8_t>::max()) throw UsageError("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (n_ != other.n_ || degree_ > other.degree_) return false;
  for (unsigned i = 0; i < n_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n_ != other.n_) throw UsageError("monomials live in different rings");
  Monomial r(*this);
  for (unsigned i = 0; i < n_; ++i) r.set(i, unsigned{exps_[i]} + other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw UsageError("monomial quotient is not exact");
  Monomial r(*this);
  for (unsigned i = 0; i < n_; ++i) r.set(i, unsigned{exps_[i]} - divisor.exps_[i]);
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (unsigned i = 0; i < n_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  // Within a degree, larger leading exponents come first.
  for (unsigned i = 0; i < n_; ++i) {
    if (exps_[i] != other.exps_[i]) {
      return exps_[i] > other.exps_[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used exponent bytes.
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (unsigned i = 0; i < n_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool Monomial::advance_in_degree() {
  if (n_ < 2) return false;
  int j = n_ - 2;
  while (j >= 0 && exps_[j] == 0) --j;
  if (j < 0) return false;
  const std::uint8_t tail = exps_[n_ - 1];
  exps_[n_ - 1] = 0;
  --exps_[j];
  exps_[j + 1] = static_cast<std::uint8_t>(tail + 1);
  return true;
}

std::uint64_t monomial_count(unsigned n, unsigned d) {
  check_n(n);
  return small_binomial(d + n - 1, n - 1);
}

std::vector<Monomial> enumerate_degree(unsigned n, unsigned d) {
  check_n(n);
  std::vector<Monomial> out;
  out.reserve(monomial_count(n, d));
  std::vector<unsigned> exps(n, 0);
  fill_degree(n, 0, d, exps, out);
  return out;
}

std::uint64_t rank_in_degree(const Monomial& m) {
  const unsigned n = m.num_variables();
  std::uint64_t rank = 0;
  unsigned remaining = m.degree();
  for (unsigned i = 0; i + 1 < n; ++i) {
    const unsigned a = m.exponent(i);
    const unsigned tail_vars = n - i - 1;
    // Monomials with a larger exponent at position i: the tail has degree
    // at most remaining - a - 1 in tail_vars variables.
    if (remaining > a) rank += small_binomial(remaining - a - 1 + tail_vars, tail_vars);
    remaining -= a;
  }
  return rank;
}

Monomial unrank_in_degree(unsigned n, unsigned d, std::uint64_t k) {
  const std::uint64_t count = monomial_count(n, d);
  if (k >= count) {
    throw UsageError("rank " + std::to_string(k) + " out of range for degree " +
                     std::to_string(d) + " in " + std::to_string(n) + " variables (" +
                     std::to_string(count) + " monomials)");
  }
  std::vector<unsigned> exps(n, 0);
  unsigned remaining = d;
  for (unsigned i = 0; i + 1 < n; ++i) {
    const unsigned tail_vars = n - i - 1;
    // Block for exponent a is preceded by every monomial with a larger
    // exponent here; take the smallest a whose block starts at or before k.
    unsigned best = 0;
    for (unsigned cand = remaining + 1; cand-- > 0;) {
      const std::uint64_t before =
          cand == remaining ? 0 : small_binomial(remaining - cand - 1 + tail_vars, tail_vars);
      if (before <= k) {
        best = cand;
      } else {
        break;
      }
    }
    const std::uint64_t before =
        best == remaining ? 0 : small_binomial(remaining - best - 1 + tail_vars, tail_vars);
    k -= before;
    exps[i] = best;
    remaining -= best;
  }
  exps[n - 1] = remaining;
  return Monomial(std::span<const unsigned>(exps));
}

}  // namespace quadpow
