#pragma once

#include <utility>
#include <vector>

#include "quadpow/bigint.hpp"

namespace quadpow {

// Hilbert function h_0..h_top of an Artinian graded quotient S_n / I^s.
class HilbertData {
 public:
  HilbertData(unsigned n, unsigned s, std::vector<BigInt> dims);

  unsigned n() const { return n_; }
  unsigned s() const { return s_; }
  const std::vector<BigInt>& dims() const { return dims_; }
  const BigInt& length() const { return length_; }

  // dims without trailing zeros.
  std::vector<BigInt> trimmed() const;

  bool operator==(const HilbertData&) const = default;

 private:
  unsigned n_;
  unsigned s_;
  std::vector<BigInt> dims_;
  BigInt length_;
};

// Nonzero terms (degree, h_degree) with degree >= 2s.
std::vector<std::pair<unsigned, BigInt>> interesting_part(const HilbertData& h);

}  // namespace quadpow
