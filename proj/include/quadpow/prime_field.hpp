#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace quadpow {

// Z/p for a prime 10^6 < p < 2^32, so the product of two residues fits in
// one uint64.
class PrimeFieldContext {
 public:
  static constexpr std::uint64_t kDefaultPrime = 1'000'003;
  static constexpr std::uint64_t kMinExclusive = 1'000'000;
  static constexpr std::uint64_t kMaxExclusive = std::uint64_t{1} << 32;

  // Throws UsageError if p is out of range or fails Miller-Rabin.
  explicit PrimeFieldContext(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }

  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  // Fermat inverse a^(p-2); a must be nonzero.
  std::uint64_t inverse(std::uint64_t a) const;

  bool operator==(const PrimeFieldContext&) const = default;

 private:
  std::uint64_t p_;
};

bool is_probable_prime(std::uint64_t n);

// A stream of rows over Z/p with a fixed column count. Rows are produced on
// demand by fill_row(i, out), out.size() == ncols, pre-zeroed.
struct SliceMatrix {
  using RowFiller = std::function<void(std::size_t, std::span<std::uint64_t>)>;

  PrimeFieldContext context;
  std::size_t ncols = 0;
  std::size_t row_count = 0;
  RowFiller fill_row;

  static SliceMatrix from_rows(const PrimeFieldContext& context, std::size_t ncols,
                               std::vector<std::vector<std::uint64_t>> rows);
};

// Row-echelon basis grown one row at a time. Stored rows are monic at their
// pivot column.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeFieldContext& context, std::size_t ncols);

  // Reduces row in place; returns true and keeps it if it was independent.
  bool insert(std::span<std::uint64_t> row);
  std::size_t rank() const { return rank_; }

 private:
  PrimeFieldContext ctx_;
  std::size_t ncols_;
  std::size_t rank_ = 0;
  // pivots_[c] is the basis row whose leading column is c, or empty.
  std::vector<std::vector<std::uint64_t>> pivots_;
};

// min(rank over Z/p, cap), stopping as soon as the running rank hits cap.
// Throws UsageError if cap > ncols.
std::size_t rank_with_early_exit(const SliceMatrix& m, std::size_t cap);

}  // namespace quadpow
