#include "quadpow/hilbert_data.hpp"

namespace quadpow {

HilbertData::HilbertData(unsigned n, unsigned s, std::vector<BigInt> dims)
    : n_(n), s_(s), dims_(std::move(dims)) {
  for (const auto& d : dims_) length_ += d;
}

std::vector<BigInt> HilbertData::trimmed() const {
  std::vector<BigInt> out = dims_;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::pair<unsigned, BigInt>> interesting_part(const HilbertData& h) {
  std::vector<std::pair<unsigned, BigInt>> out;
  for (std::size_t d = 2 * static_cast<std::size_t>(h.s()); d < h.dims().size(); ++d) {
    if (h.dims()[d] != 0) out.emplace_back(static_cast<unsigned>(d), h.dims()[d]);
  }
  return out;
}

}  // namespace quadpow
