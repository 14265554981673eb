#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace quadpow {

enum class Verdict { kConfirmed, kRefuted, kDiscrepancy, kConjectureConsistent, kSkipped };
enum class ClaimStatus { kTheorem, kConjecture, kExample, kQuestion };

std::string_view to_string(Verdict v);
std::string_view to_string(ClaimStatus s);

// First mismatch found by a check. Values are decimal strings or tuples.
struct Witness {
  std::optional<unsigned> n;
  std::optional<unsigned> s;
  std::optional<unsigned> degree;
  std::string expected;
  std::string actual;
};

struct Provenance {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  unsigned trials = 0;
};

struct VerificationReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::kTheorem;
  Verdict verdict = Verdict::kSkipped;
  nlohmann::ordered_json sweep = nlohmann::ordered_json::object();
  std::optional<Witness> witness;
  Provenance provenance;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string note;
};

// Unset fields fall back to each claim's own defaults.
struct CheckBounds {
  std::optional<unsigned> s_max;
  std::optional<unsigned> n_max;
  std::optional<unsigned> trials;
  std::optional<std::vector<std::uint64_t>> primes;
  std::uint64_t seed_base = 1;
};

struct ClaimInfo {
  std::string id;
  ClaimStatus status;
  std::string summary;
};

// Sorted by id.
const std::vector<ClaimInfo>& claim_catalog();

// Throws UsageError (listing the valid ids) for unknown ids; every other
// outcome is a verdict.
VerificationReport run_check(std::string_view id, const CheckBounds& bounds);

// Every claim, on up to `jobs` worker threads, sorted by id.
std::vector<VerificationReport> run_all(const CheckBounds& bounds, unsigned jobs);

// True iff some theorem-status claim came back REFUTED.
bool theorem_refuted(const std::vector<VerificationReport>& reports);

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string render_table(const std::vector<VerificationReport>& reports);

}  // namespace quadpow
