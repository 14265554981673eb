#include "quadpow/prime_field.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "quadpow/errors.hpp"

namespace quadpow {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are exact for every 64-bit n.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFieldContext::PrimeFieldContext(std::uint64_t p) : p_(p) {
  if (p <= kMinExclusive || p >= kMaxExclusive) {
    throw UsageError("prime " + std::to_string(p) + " outside (10^6, 2^32)");
  }
  if (!is_probable_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeFieldContext::reduce(std::int64_t v) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeFieldContext::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod(base, exp, p_);
}

std::uint64_t PrimeFieldContext::inverse(std::uint64_t a) const {
  if (a % p_ == 0) throw UsageError("zero has no inverse");
  return pow(a, p_ - 2);
}

SliceMatrix SliceMatrix::from_rows(const PrimeFieldContext& context, std::size_t ncols,
                                   std::vector<std::vector<std::uint64_t>> rows) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw UsageError("row length does not match column count");
  }
  const std::size_t count = rows.size();
  auto shared = std::make_shared<std::vector<std::vector<std::uint64_t>>>(std::move(rows));
  return SliceMatrix{context, ncols, count,
                     [shared](std::size_t i, std::span<std::uint64_t> out) {
                       const auto& src = (*shared)[i];
                       std::copy(src.begin(), src.end(), out.begin());
                     }};
}

EchelonBasis::EchelonBasis(const PrimeFieldContext& context, std::size_t ncols)
    : ctx_(context), ncols_(ncols), pivots_(ncols) {}

bool EchelonBasis::insert(std::span<std::uint64_t> row) {
  if (row.size() != ncols_) throw UsageError("row length does not match column count");
  for (std::size_t c = 0; c < ncols_; ++c) {
    const std::uint64_t lead = row[c];
    if (lead == 0) continue;
    const auto& pivot = pivots_[c];
    if (pivot.empty()) {
      const std::uint64_t inv = ctx_.inverse(lead);
      std::vector<std::uint64_t> stored(row.begin(), row.end());
      for (std::size_t j = c; j < ncols_; ++j) stored[j] = ctx_.mul(stored[j], inv);
      pivots_[c] = std::move(stored);
      ++rank_;
      return true;
    }
    for (std::size_t j = c; j < ncols_; ++j) {
      if (pivot[j] != 0) row[j] = ctx_.sub(row[j], ctx_.mul(lead, pivot[j]));
    }
  }
  return false;
}

std::size_t rank_with_early_exit(const SliceMatrix& m, std::size_t cap) {
  if (cap > m.ncols) throw UsageError("rank cap exceeds column count");
  if (cap == 0) return 0;
  EchelonBasis basis(m.context, m.ncols);
  std::vector<std::uint64_t> row(m.ncols);
  for (std::size_t i = 0; i < m.row_count; ++i) {
    std::fill(row.begin(), row.end(), 0);
    m.fill_row(i, row);
    basis.insert(row);
    if (basis.rank() >= cap) return cap;
  }
  return basis.rank();
}

}  // namespace quadpow
