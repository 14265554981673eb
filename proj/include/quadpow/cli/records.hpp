#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadpow/bigint.hpp"
#include "quadpow/monomial_ideal.hpp"

namespace quadpow::cli {

inline constexpr int kSchemaVersion = 1;

// What was computed: I_{n,M}, r random quadrics, or explicit quadrics.
struct RingSpec {
  std::string kind;                // "monomial" | "generic" | "explicit"
  unsigned n = 0;
  std::vector<VariablePair> pairs;  // monomial
  unsigned r = 0;                   // generic
  std::uint64_t prime = 0;          // generic, explicit
  std::uint64_t seed = 0;           // generic
  std::vector<std::string> generators;  // explicit, canonical rendering

  bool operator==(const RingSpec&) const = default;
};

struct FitSummary {
  std::vector<BigInt> e;
  std::int64_t s_onset = 0;

  bool operator==(const FitSummary&) const = default;
};

struct ResultRecord {
  RingSpec ring;
  unsigned s = 0;
  std::vector<BigInt> dims;
  BigInt length;
  std::optional<FitSummary> fit;
  double seconds = 0;
  bool cached = false;
};

nlohmann::ordered_json to_json(const RingSpec& ring);
RingSpec ring_from_json(const nlohmann::json& j);

// Everything but timing; the cached payload.
nlohmann::ordered_json to_json(const ResultRecord& record, bool with_timing = true);
// Throws UsageError on malformed input or a schema version mismatch.
ResultRecord record_from_json(const nlohmann::json& j);

// Canonical serialization of ring spec and s.
std::string cache_key(const RingSpec& ring, unsigned s);

}  // namespace quadpow::cli
