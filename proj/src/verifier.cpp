#include "quadpow/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "quadpow/closed_forms.hpp"
#include "quadpow/coefficient_fit.hpp"
#include "quadpow/combinatorics.hpp"
#include "quadpow/errors.hpp"
#include "quadpow/generic_forms.hpp"
#include "quadpow/monomial_ideal.hpp"

namespace quadpow {

using json = nlohmann::ordered_json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
    case Verdict::kConjectureConsistent: return "CONJECTURE-CONSISTENT";
    case Verdict::kSkipped: return "SKIPPED";
  }
  return "?";
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kTheorem: return "theorem";
    case ClaimStatus::kConjecture: return "conjecture";
    case ClaimStatus::kExample: return "example";
    case ClaimStatus::kQuestion: return "question";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kSecondPrime = 2'147'483'647;

using Dims = std::vector<BigInt>;

std::string tuple_string(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
  return out + ")";
}

json decimal_array(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

Dims trim(Dims v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

struct Mismatch {
  unsigned degree;
  BigInt expected;
  BigInt actual;
};

// Degree-by-degree, missing entries read as zero.
std::optional<Mismatch> first_mismatch(const Dims& expected, const Dims& actual) {
  const std::size_t top = std::max(expected.size(), actual.size());
  for (std::size_t d = 0; d < top; ++d) {
    const BigInt e = d < expected.size() ? expected[d] : BigInt(0);
    const BigInt a = d < actual.size() ? actual[d] : BigInt(0);
    if (e != a) return Mismatch{static_cast<unsigned>(d), e, a};
  }
  return std::nullopt;
}

Witness series_witness(unsigned n, unsigned s, const Mismatch& m) {
  return Witness{n, s, m.degree, to_decimal(m.expected), to_decimal(m.actual)};
}

Witness value_witness(std::optional<unsigned> n, std::optional<unsigned> s, const BigInt& expected,
                      const BigInt& actual) {
  return Witness{n, s, std::nullopt, to_decimal(expected), to_decimal(actual)};
}

Dims interesting_dims(const HilbertData& h) {
  const auto& d = h.dims();
  const std::size_t from = 2 * std::size_t{h.s()};
  return from < d.size() ? trim(Dims(d.begin() + from, d.end())) : Dims{};
}

Dims lower_dims(const HilbertData& h) {
  const auto& d = h.dims();
  return Dims(d.begin(), d.begin() + std::min(d.size(), 2 * std::size_t{h.s()}));
}

Dims full_series(const KnownSeries& k) {
  Dims out = k.lower;
  out.insert(out.end(), k.interesting.begin(), k.interesting.end());
  return out;
}

Verdict agreement(ClaimStatus status) {
  return (status == ClaimStatus::kConjecture || status == ClaimStatus::kQuestion)
             ? Verdict::kConjectureConsistent
             : Verdict::kConfirmed;
}

// A formula disagreeing with an engine. Printed examples are reported as
// discrepancies; stated results are refuted.
Verdict contradiction(ClaimStatus status) {
  return status == ClaimStatus::kExample ? Verdict::kDiscrepancy : Verdict::kRefuted;
}

class Sweep {
 public:
  explicit Sweep(const CheckBounds& b) : b_(b) {}

  unsigned s_max(unsigned fallback) const { return b_.s_max.value_or(fallback); }
  unsigned n_max(unsigned fallback) const { return b_.n_max.value_or(fallback); }
  unsigned trials(unsigned fallback) const { return std::max(1u, b_.trials.value_or(fallback)); }
  std::vector<std::uint64_t> primes() const {
    if (b_.primes && !b_.primes->empty()) return *b_.primes;
    return {PrimeFieldContext::kDefaultPrime, kSecondPrime};
  }
  std::vector<std::uint64_t> seeds(unsigned fallback_trials) const {
    std::vector<std::uint64_t> out;
    for (unsigned t = 0; t < trials(fallback_trials); ++t) out.push_back(b_.seed_base + t);
    return out;
  }
  std::uint64_t seed_base() const { return b_.seed_base; }

 private:
  const CheckBounds& b_;
};

struct Report {
  VerificationReport r;

  Report(std::string id, ClaimStatus status) {
    r.claim = std::move(id);
    r.status = status;
  }
  // Keeps the first failure; later calls with a failure verdict are ignored.
  void fail(Verdict v, Witness w) {
    if (r.witness) return;
    r.verdict = v;
    r.witness = std::move(w);
  }
  bool failed() const { return r.witness.has_value(); }
  VerificationReport done() {
    if (!failed()) r.verdict = agreement(r.status);
    return std::move(r);
  }
};

LengthSamples monomial_lengths(unsigned n, const std::vector<VariablePair>& pairs, unsigned s_max) {
  LengthSamples out;
  for (const auto& h : hilbert_data_range(from_squarefree_set(n, pairs), s_max)) out[h.s()] = h.length();
  return out;
}

CoefficientFit monomial_fit(unsigned n, const std::vector<VariablePair>& pairs) {
  return fit(monomial_lengths(n, pairs, n + 4), n);
}

std::vector<BigInt> padded(std::vector<BigInt> v, std::size_t size) {
  v.resize(std::max(v.size(), size), 0);
  return v;
}

// Fitted tuple against a printed one (printed tuples may omit trailing zeros).
void compare_tuple(Report& rep, unsigned n, const CoefficientFit& f, const std::vector<BigInt>& printed) {
  const auto fitted = f.integer_coefficients();
  rep.r.details["fitted"] = decimal_array(fitted);
  rep.r.details["printed"] = decimal_array(printed);
  rep.r.details["s_onset"] = f.s_onset;
  if (padded(printed, fitted.size()) != fitted) {
    rep.fail(Verdict::kDiscrepancy, Witness{n, std::nullopt, std::nullopt, tuple_string(printed),
                                            tuple_string(fitted)});
  }
}

// ---- complete intersections ------------------------------------------------

VerificationReport ci_length(const Sweep& sw) {
  Report rep("ci-length", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(5), s_max = sw.s_max(6);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", {1, s_max}}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const auto& h : hilbert_data_range(from_squarefree_set(n, {}), s_max)) {
      const BigInt expected = (BigInt(1) << n) * binomial(h.s() + n - 1, n);
      if (h.length() != expected) rep.fail(Verdict::kRefuted, value_witness(n, h.s(), expected, h.length()));
    }
  }
  return rep.done();
}

VerificationReport ci_multiplicity(const Sweep& sw) {
  Report rep("ci-multiplicity", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(5);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", "1..n+4"}};
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto fitted = monomial_fit(n, {}).integer_coefficients();
    std::vector<BigInt> expected(n + 1, 0);
    expected[0] = BigInt(1) << n;
    rep.r.details[std::to_string(n)] = decimal_array(fitted);
    if (fitted != expected) {
      rep.fail(Verdict::kRefuted, Witness{n, std::nullopt, std::nullopt, tuple_string(expected),
                                          tuple_string(fitted)});
    }
  }
  return rep.done();
}

// S/(x1^d1..xn^dn)^s by direct count: x^a survives iff sum floor(a_i/d_i) < s.
Dims pure_power_count(const std::vector<unsigned>& degrees, unsigned s, unsigned top) {
  Dims dims(top + 1, 0);
  std::vector<unsigned> a(degrees.size(), 0);
  std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t k, unsigned deg,
                                                                 unsigned packed) {
    if (k == degrees.size()) {
      if (packed < s) dims[deg] += 1;
      return;
    }
    for (unsigned e = 0; deg + e <= top; ++e) rec(k + 1, deg + e, packed + e / degrees[k]);
  };
  rec(0, 0, 0);
  return dims;
}

VerificationReport gvt_series(const Sweep& sw) {
  Report rep("gvt-series", ClaimStatus::kTheorem);
  const unsigned n_max = std::min(sw.n_max(3), 4u), s_max = sw.s_max(4);
  rep.r.sweep = {{"n", {1, n_max}}, {"degrees", "nondecreasing tuples over {1,2,3}"}, {"s", {1, s_max}}};
  unsigned cases = 0;
  std::function<void(std::vector<unsigned>&)> rec = [&](std::vector<unsigned>& degrees) {
    if (!degrees.empty()) {
      for (unsigned s = 1; s <= s_max; ++s) {
        const auto h = ci_series_general(degrees, s);
        const auto oracle = pure_power_count(degrees, s, static_cast<unsigned>(h.dims().size()));
        ++cases;
        if (auto m = first_mismatch(oracle, h.dims())) {
          rep.fail(Verdict::kRefuted, series_witness(static_cast<unsigned>(degrees.size()), s, *m));
        }
      }
    }
    if (degrees.size() == n_max) return;
    for (unsigned d = degrees.empty() ? 1 : degrees.back(); d <= 3; ++d) {
      degrees.push_back(d);
      rec(degrees);
      degrees.pop_back();
    }
  };
  std::vector<unsigned> degrees;
  rec(degrees);
  rep.r.details["cases"] = cases;
  return rep.done();
}

VerificationReport ci_top_degree(const Sweep& sw) {
  Report rep("ci-top-degree", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(5), s_max = sw.s_max(6);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", {1, s_max}}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const auto& h : hilbert_data_range(from_squarefree_set(n, {}), s_max)) {
      const auto top = static_cast<unsigned>(h.trimmed().size()) - 1;
      const unsigned expected = 2 * h.s() + n - 2;
      if (top != expected) rep.fail(Verdict::kRefuted, value_witness(n, h.s(), expected, top));
    }
  }
  return rep.done();
}

VerificationReport lattice_count(const Sweep& sw) {
  Report rep("lattice-count", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(6), j_max = sw.s_max(12);
  rep.r.sweep = {{"n", {1, n_max}}, {"j", {0, j_max}}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned j = 0; j <= j_max; ++j) {
      std::uint64_t count = 0;
      std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned left) {
        if (k + 1 == n) {
          ++count;
          return;
        }
        for (unsigned e = 0; e <= left; ++e) rec(k + 1, left - e);
      };
      rec(0, j);
      const BigInt formula = lattice_point_count(n, j);
      if (formula != count) rep.fail(Verdict::kRefuted, value_witness(n, j, count, formula));
    }
  }
  return rep.done();
}

VerificationReport ci_series(const Sweep& sw) {
  Report rep("ci-series", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(5), s_max = sw.s_max(5);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", {1, s_max}}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const auto& engine : hilbert_data_range(from_squarefree_set(n, {}), s_max)) {
      const unsigned s = engine.s();
      const auto closed = ci_quadric_series(n, s);
      const auto general = ci_series_general(std::vector<unsigned>(n, 2), s);
      if (auto m = first_mismatch(engine.dims(), closed.dims())) rep.fail(Verdict::kRefuted, series_witness(n, s, *m));
      if (auto m = first_mismatch(engine.dims(), general.dims())) rep.fail(Verdict::kRefuted, series_witness(n, s, *m));
    }
  }
  return rep.done();
}

VerificationReport cor27(const Sweep& sw) {
  Report rep("cor27", ClaimStatus::kTheorem);
  const unsigned s_max = sw.s_max(100);
  rep.r.sweep = {{"k", {1, 4}}, {"s", {1, s_max}}};
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned s = 1; s <= s_max; ++s) {
      const auto c = ci_length_identity(k, s);
      if (!c.holds()) rep.fail(Verdict::kRefuted, value_witness(k + 1, s, c.rhs, c.lhs));
    }
  }
  return rep.done();
}

VerificationReport ci_length_identity_check(const Sweep& sw) {
  Report rep("ci-length-identity", ClaimStatus::kTheorem);
  const unsigned n_max = sw.n_max(8), s_max = sw.s_max(30);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", {1, s_max}}};
  bool consistent_holds = true;
  std::optional<Witness> printed_failure;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned s = 1; s <= s_max; ++s) {
      const auto consistent = ci_length_identity_general(n, s, 0);
      if (!consistent.holds()) {
        consistent_holds = false;
        rep.fail(Verdict::kRefuted, value_witness(n, s, consistent.rhs, consistent.lhs));
      }
      const auto printed = ci_length_identity_general(n, s, 1);
      if (!printed.holds() && !printed_failure) printed_failure = value_witness(n, s, printed.rhs, printed.lhs);
    }
  }
  rep.r.details["consistent_form_holds"] = consistent_holds;
  rep.r.details["printed_form_holds"] = !printed_failure.has_value();
  if (printed_failure) {
    rep.fail(Verdict::kDiscrepancy, *printed_failure);
    rep.r.note = "printed form uses C(n+2s,n); the identity holds with C(n+2s-1,n)";
  }
  return rep.done();
}

VerificationReport printed_ci_example(unsigned n, const Sweep& sw) {
  Report rep("ex2.8-n" + std::to_string(n), ClaimStatus::kExample);
  const unsigned s_max = sw.s_max(6);
  rep.r.sweep = {{"n", n}, {"s", {1, s_max}}};
  bool printed_ok = true, general_ok = true;
  for (const auto& engine : hilbert_data_range(from_squarefree_set(n, {}), s_max)) {
    const unsigned s = engine.s();
    if (first_mismatch(engine.dims(), ci_quadric_series(n, s).dims())) general_ok = false;
    if (auto m = first_mismatch(ci_printed_example(n, s).dims(), engine.dims())) {
      printed_ok = false;
      rep.fail(Verdict::kDiscrepancy, series_witness(n, s, *m));
    }
  }
  rep.r.details["printed_matches_engine"] = printed_ok;
  rep.r.details["general_formula_matches_engine"] = general_ok;
  if (!printed_ok && general_ok) rep.r.note = "printed row disagrees; the general formula matches the engine";
  return rep.done();
}

// ---- generic quadrics ------------------------------------------------------

void generic_provenance(Report& rep, const Sweep& sw, unsigned trials) {
  rep.r.provenance.primes = sw.primes();
  rep.r.provenance.seeds = sw.seeds(trials);
  rep.r.provenance.trials = sw.trials(trials);
}

// Engine series against a formula case at s, comparing lower part, and
// either the degree-resolved interesting part or its total.
std::optional<Witness> compare_generic(const FormulaCase& f, const HilbertData& h) {
  const auto k = known_series(f, h.s());
  if (auto m = first_mismatch(k.lower, lower_dims(h))) return series_witness(f.n, h.s(), *m);
  if (k.degree_resolved) {
    Dims expected(2 * std::size_t{h.s()}, 0);
    expected.insert(expected.end(), k.interesting.begin(), k.interesting.end());
    Dims actual(2 * std::size_t{h.s()}, 0);
    const auto upper = interesting_dims(h);
    actual.insert(actual.end(), upper.begin(), upper.end());
    if (auto m = first_mismatch(expected, actual)) return series_witness(f.n, h.s(), *m);
    return std::nullopt;
  }
  BigInt total = 0;
  for (const auto& v : interesting_dims(h)) total += v;
  if (total != k.interesting_total) return value_witness(f.n, h.s(), k.interesting_total, total);
  return std::nullopt;
}

VerificationReport generic_series_claim(const std::string& id, ClaimStatus status, const Sweep& sw,
                                        unsigned default_trials, unsigned default_s_max) {
  Report rep(id, status);
  const auto& f = formula_case(id);
  const unsigned s_max = sw.s_max(default_s_max);
  generic_provenance(rep, sw, default_trials);
  rep.r.sweep = {{"n", f.n}, {"r", f.r}, {"s", {f.s_min, s_max}}, {"s_min", f.s_min}};
  for (auto p : rep.r.provenance.primes) {
    for (auto seed : rep.r.provenance.seeds) {
      for (unsigned s = f.s_min; s <= s_max; ++s) {
        const auto h = hilbert_data_generic(GenericIdealSpec::random(f.n, f.r, p, seed), s);
        if (auto w = compare_generic(f, h)) rep.fail(contradiction(status), *w);
      }
    }
  }
  // Below the stated threshold the comparison is informational only.
  json below = json::array();
  for (unsigned s = 1; s < f.s_min && s <= s_max; ++s) {
    const auto h = hilbert_data_generic(
        GenericIdealSpec::random(f.n, f.r, rep.r.provenance.primes.front(), sw.seed_base()), s);
    below.push_back({{"s", s}, {"matches", !compare_generic(f, h).has_value()}});
  }
  rep.r.details["below_threshold"] = below;
  return rep.done();
}

LengthSamples formula_lengths(const FormulaCase& f, unsigned count) {
  LengthSamples out;
  for (unsigned s = f.s_min; s < f.s_min + count; ++s) out[s] = known_series(f, s).length();
  return out;
}

VerificationReport r34_coefficients(const Sweep& sw) {
  Report rep("thm-R34-coefficients", ClaimStatus::kTheorem);
  const auto& f = formula_case("thm-R34");
  const auto prime = sw.primes().front();
  rep.r.provenance = Provenance{{prime}, {sw.seed_base()}, 1};
  const unsigned s_top = std::max(sw.s_max(6), f.n + 2);
  rep.r.sweep = {{"n", 3}, {"r", 4}, {"s", {1, s_top}}};
  LengthSamples samples;
  for (unsigned s = 1; s <= s_top; ++s) {
    samples[s] = hilbert_data_generic(GenericIdealSpec::random(3, 4, prime, sw.seed_base()), s).length();
  }
  rep.r.details["source"] = "generic engine lengths";
  compare_tuple(rep, 3, fit(samples, 3), f.printed_coefficients);
  return rep.done();
}

VerificationReport formula_coefficients(const std::string& case_id) {
  const auto& f = formula_case(case_id);
  Report rep(case_id + "-coefficients", f.conjecture ? ClaimStatus::kConjecture : ClaimStatus::kTheorem);
  const unsigned count = f.n + 3;
  rep.r.sweep = {{"n", f.n}, {"r", f.r}, {"s", {f.s_min, f.s_min + count - 1}}};
  rep.r.details["source"] = "lengths of the printed series";
  compare_tuple(rep, f.n, fit(formula_lengths(f, count), f.n), f.printed_coefficients);
  return rep.done();
}

VerificationReport r35(const Sweep& sw) {
  Report rep("thm-R35", ClaimStatus::kTheorem);
  const unsigned s_max = sw.s_max(5);
  generic_provenance(rep, sw, 3);
  rep.r.sweep = {{"n", 3}, {"r", 5}, {"s", {2, s_max}}};
  json first_power = json::array();
  for (auto p : rep.r.provenance.primes) {
    for (auto seed : rep.r.provenance.seeds) {
      const auto spec = GenericIdealSpec::random(3, 5, p, seed);
      for (unsigned s = 2; s <= s_max; ++s) {
        if (!is_power_full(spec, s)) {
          rep.fail(Verdict::kRefuted, Witness{3, s, 2 * s, "I^s = m^(2s)", "I^s != m^(2s)"});
        }
      }
      first_power.push_back(is_power_full(spec, 1));
    }
  }
  rep.r.details["s1_full"] = first_power;
  return rep.done();
}

VerificationReport r35_series(const Sweep& sw) {
  Report rep("thm-R35-series", ClaimStatus::kTheorem);
  const unsigned s_max = sw.s_max(5);
  const auto prime = sw.primes().front();
  rep.r.provenance = Provenance{{prime}, {sw.seed_base()}, 1};
  rep.r.sweep = {{"n", 3}, {"r", 5}, {"s", {2, s_max}}};
  bool matches_full = true;
  for (unsigned s = 2; s <= s_max; ++s) {
    const auto h = hilbert_data_generic(GenericIdealSpec::random(3, 5, prime, sw.seed_base()), s);
    const auto k = known_series("thm-R35", s);
    if (auto m = first_mismatch(k.lower, h.dims())) rep.fail(Verdict::kDiscrepancy, series_witness(3, s, *m));
    Dims full;
    for (unsigned i = 0; i < 2 * s; ++i) full.push_back(binomial(i + 2, 2));
    if (first_mismatch(full, h.dims())) matches_full = false;
  }
  rep.r.details["engine_equals_sum_C(i+2,2)"] = matches_full;
  if (rep.failed()) rep.r.note = "printed series uses C(2i+2,2); I^s = m^(2s) gives C(i+2,2)";
  return rep.done();
}

VerificationReport r35_witness(const Sweep& sw) {
  Report rep("thm-R35-witness", ClaimStatus::kTheorem);
  const unsigned s_max = sw.s_max(5);
  const char* gens[] = {"x^2", "y^2", "z^2", "x*y+x*z+y*z", "x*z+2*y*z"};
  rep.r.provenance = Provenance{sw.primes(), {}, 0};
  rep.r.sweep = {{"n", 3}, {"s", {3, s_max}}, {"forms", "x^2;y^2;z^2;x*y+x*z+y*z;x*z+2*y*z"}};
  json s2 = json::array();
  for (auto p : rep.r.provenance.primes) {
    const PrimeFieldContext field(p);
    std::vector<QuadraticForm> forms;
    for (const char* g : gens) forms.push_back(parse_form(3, g, field));
    const auto spec = GenericIdealSpec::with_forms(3, forms, p);
    for (unsigned s = 3; s <= s_max; ++s) {
      if (!is_power_full(spec, s)) rep.fail(Verdict::kRefuted, Witness{3, s, 2 * s, "I^s = m^(2s)", "I^s != m^(2s)"});
    }
    s2.push_back({{"prime", p}, {"full", is_power_full(spec, 2)}});
  }
  rep.r.details["s2"] = s2;
  return rep.done();
}

VerificationReport phi(const Sweep& sw) {
  Report rep("phi", ClaimStatus::kQuestion);
  const unsigned s_max = sw.s_max(5), n_max = std::min(sw.n_max(4), 4u);
  const auto prime = sw.primes().front();
  generic_provenance(rep, sw, 2);
  rep.r.provenance.primes = {prime};
  rep.r.sweep = {{"n", {3, n_max}}, {"r", "n..2n-1"}, {"s", {1, s_max}}};
  json tables = json::object();
  for (unsigned n = 3; n <= n_max; ++n) {
    std::vector<unsigned> rs;
    for (unsigned r = n; r <= 2 * n - 1; ++r) rs.push_back(r);
    const auto t = phi_probe(n, rs, s_max, rep.r.provenance.trials, prime, sw.seed_base());
    json rows = json::array();
    for (const auto& row : t.rows) {
      rows.push_back({{"r", row.r},
                      {"min_s", row.min_s ? json(*row.min_s) : json(nullptr)},
                      {"trials_agree", row.trials_agree}});
    }
    tables[std::to_string(n)] = {{"rows", rows},
                                 {"minimal_r", t.minimal_r ? json(*t.minimal_r) : json(nullptr)},
                                 {"warnings", t.warnings}};
    if (t.minimal_r != 2 * n - 1) {
      rep.fail(Verdict::kDiscrepancy,
               Witness{n, std::nullopt, std::nullopt, std::to_string(2 * n - 1),
                       t.minimal_r ? std::to_string(*t.minimal_r) : std::string("none")});
    }
  }
  rep.r.details["tables"] = tables;
  rep.r.note = "observations up to s_max only";
  return rep.done();
}

VerificationReport r59(const Sweep& sw) {
  Report rep("conj-R59", ClaimStatus::kConjecture);
  const auto& f = formula_case("conj-R59");
  const unsigned s_max = std::max(f.s_min, sw.s_max(f.s_min));
  generic_provenance(rep, sw, 2);
  rep.r.sweep = {{"n", 5}, {"r", 9}, {"s", {f.s_min, s_max}}};
  for (auto p : rep.r.provenance.primes) {
    for (auto seed : rep.r.provenance.seeds) {
      for (unsigned s = f.s_min; s <= s_max; ++s) {
        if (!is_power_full(GenericIdealSpec::random(5, 9, p, seed), s)) {
          rep.fail(Verdict::kRefuted, Witness{5, s, 2 * s, "I^s = m^(2s)", "I^s != m^(2s)"});
        }
      }
    }
  }
  return rep.done();
}

// ---- m^2 and monomial ideals -----------------------------------------------

VerificationReport conj31(const Sweep& sw) {
  Report rep("conj31", ClaimStatus::kConjecture);
  const unsigned n_max = sw.n_max(8);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", "1..n+2"}};
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto f = fit(monomial_lengths(n, all_pairs(n), n + 2), n);
    const auto fitted = f.integer_coefficients();
    const auto predicted = maximal_square_predicted_coefficients(n);
    rep.r.details[std::to_string(n)] = decimal_array(fitted);
    if (fitted != predicted) {
      rep.fail(Verdict::kRefuted, Witness{n, std::nullopt, std::nullopt, tuple_string(predicted),
                                          tuple_string(fitted)});
    }
    for (unsigned i = 0; i <= n; ++i) {
      if ((fitted[i] != 0) != (2 * i <= n)) {
        rep.fail(Verdict::kRefuted, Witness{n, std::nullopt, std::nullopt,
                                            "e_i != 0 exactly for i <= n/2", tuple_string(fitted)});
      }
    }
  }
  return rep.done();
}

VerificationReport conj31_identity(const Sweep& sw) {
  Report rep("conj31-identity", ClaimStatus::kConjecture);
  const unsigned n_max = sw.n_max(8), s_max = sw.s_max(30);
  rep.r.sweep = {{"n", {1, n_max}}, {"s", {1, s_max}}};
  std::optional<Witness> printed_failure;
  bool corrected = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned s = 1; s <= s_max; ++s) {
      const auto id = maximal_square_identity(n, s);
      if (!id.corrected_holds()) {
        corrected = false;
        rep.fail(Verdict::kRefuted, value_witness(n, s, id.lhs, id.corrected_rhs));
      }
      if (!id.printed_holds() && !printed_failure) printed_failure = value_witness(n, s, id.lhs, id.printed_rhs);
    }
  }
  rep.r.details["corrected_form_holds"] = corrected;
  rep.r.details["printed_form_holds"] = !printed_failure.has_value();
  if (printed_failure) {
    rep.fail(Verdict::kDiscrepancy, *printed_failure);
    rep.r.note = "printed display uses C(s+n-j,n-j); the worked n=4 example uses C(s+n-j-1,n-j), which holds";
  }
  return rep.done();
}

VerificationReport ex32(const Sweep&) {
  Report rep("ex3.2", ClaimStatus::kExample);
  rep.r.sweep = {{"n", 4}, {"s", 5}};
  const auto id = maximal_square_identity(4, 5);
  const auto engine = hilbert_data(from_squarefree_set(4, all_pairs(4)), 5).length();
  rep.r.details["terms"] = decimal_array({BigInt(16) * binomial(8, 4), BigInt(12) * binomial(7, 3),
                                          binomial(6, 2)});
  rep.r.details["engine_length"] = to_decimal(engine);
  if (id.lhs != 715) rep.fail(Verdict::kDiscrepancy, value_witness(4, 5, 715, id.lhs));
  if (id.corrected_rhs != 715) rep.fail(Verdict::kDiscrepancy, value_witness(4, 5, 715, id.corrected_rhs));
  if (engine != 715) rep.fail(Verdict::kDiscrepancy, value_witness(4, 5, 715, engine));
  return rep.done();
}

// Interesting parts of I_{n,M}^s against a monomial formula case.
std::optional<Witness> compare_interesting(const FormulaCase& f, unsigned n, const HilbertData& h) {
  const auto k = known_series(f, h.s());
  if (auto m = first_mismatch(trim(k.interesting), interesting_dims(h))) {
    return series_witness(n, h.s(), Mismatch{m->degree + 2 * h.s(), m->expected, m->actual});
  }
  return std::nullopt;
}

VerificationReport monomial_series_claim(const std::string& id, const Sweep& sw) {
  const auto& f = formula_case(id);
  const ClaimStatus status = f.conjecture ? ClaimStatus::kConjecture : ClaimStatus::kTheorem;
  Report rep(id, status);
  const unsigned s_max = sw.s_max(f.n == 3 ? 6 : 5);
  json pairs = json::array();
  for (const auto& [i, j] : f.pairs) pairs.push_back({i, j});
  rep.r.sweep = {{"n", f.n}, {"M", pairs}, {"s", {1, s_max}}};
  for (const auto& h : hilbert_data_range(from_squarefree_set(f.n, f.pairs), s_max)) {
    if (auto m = first_mismatch(full_series(known_series(f, h.s())), h.dims())) {
      rep.fail(contradiction(status), series_witness(f.n, h.s(), *m));
    }
  }
  if (!f.conjecture) {
    // The statement is for three variables but says "if n >= 2".
    unsigned first_var = 2;
    for (const auto& [i, j] : f.pairs) first_var = std::max({first_var, i, j});
    json holds = json::object();
    const unsigned s_side = std::min(s_max, 4u);
    for (unsigned n = first_var; n <= 5; ++n) {
      bool ok = true;
      for (const auto& h : hilbert_data_range(from_squarefree_set(n, f.pairs), s_side)) {
        if (compare_interesting(f, n, h)) ok = false;
      }
      holds[std::to_string(n)] = ok;
    }
    rep.r.details["holds_for_n"] = holds;
    rep.r.details["holds_for_n_s_max"] = s_side;
  }
  return rep.done();
}

VerificationReport monomial_coefficients(const std::string& case_id) {
  const auto& f = formula_case(case_id);
  Report rep(case_id + "-coefficients", f.conjecture ? ClaimStatus::kConjecture : ClaimStatus::kTheorem);
  rep.r.sweep = {{"n", f.n}, {"s", {1, f.n + 4}}};
  rep.r.details["source"] = "monomial engine lengths";
  compare_tuple(rep, f.n, monomial_fit(f.n, f.pairs), f.printed_coefficients);
  return rep.done();
}

std::string ideal_label(unsigned n, const std::vector<VariablePair>& pairs) {
  std::string out = "I_{" + std::to_string(n) + ",{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out += (k ? "," : "") + std::to_string(pairs[k].first) + std::to_string(pairs[k].second);
  }
  return out + "}}";
}

VerificationReport positivity(const Sweep& sw) {
  Report rep("conj1.1-positivity", ClaimStatus::kConjecture);
  const unsigned m2_max = std::min(sw.n_max(6), 8u);
  struct Fitted {
    std::string label;
    unsigned n;
    std::vector<BigInt> e;
  };
  std::vector<Fitted> fits;
  std::vector<std::string> skipped;
  std::set<std::pair<unsigned, std::vector<VariablePair>>> seen;
  auto add_monomial = [&](unsigned n, const std::vector<VariablePair>& pairs) {
    auto canonical = pairs;
    std::sort(canonical.begin(), canonical.end());
    if (!seen.emplace(n, canonical).second) return;
    try {
      fits.push_back({ideal_label(n, pairs), n, monomial_fit(n, pairs).integer_coefficients()});
    } catch (const FitError&) {
      skipped.push_back(ideal_label(n, pairs));
    }
  };
  // The printed four-variable cases first, so the witness names one of them.
  for (const auto& f : formula_catalog()) {
    if (f.family == FormulaFamily::kMonomial) add_monomial(f.n, f.pairs);
  }
  for (unsigned n = 1; n <= 5; ++n) add_monomial(n, {});
  for (unsigned n = 2; n <= m2_max; ++n) add_monomial(n, all_pairs(n));
  for (unsigned n = 3; n <= 4; ++n) {
    const auto pairs = all_pairs(n);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<VariablePair> chosen;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) chosen.push_back(pairs[k]);
      }
      add_monomial(n, chosen);
    }
  }
  for (const char* id : {"thm-R34", "conj-R45", "conj-R46", "conj-R47", "conj-R59"}) {
    const auto& f = formula_case(id);
    fits.push_back({std::string(id) + " (printed series)", f.n,
                    fit(formula_lengths(f, f.n + 3), f.n).integer_coefficients()});
  }
  rep.r.sweep = {{"ideals", fits.size()}, {"m2_n_max", m2_max}};
  json negatives = json::array();
  for (const auto& f : fits) {
    for (std::size_t i = 0; i < f.e.size(); ++i) {
      if (f.e[i] >= 0) continue;
      negatives.push_back({{"ideal", f.label}, {"e", decimal_array(f.e)}, {"index", i}});
      rep.fail(Verdict::kRefuted, Witness{f.n, std::nullopt, std::nullopt, "e_" + std::to_string(i) + " >= 0",
                                          f.label + " e=" + tuple_string(f.e)});
    }
  }
  rep.r.details["negative"] = negatives;
  rep.r.details["fits_skipped"] = skipped;
  rep.r.note =
      "signed convention l(s) = sum (-1)^i e_i C(s+n-i-1,n-i); reading odd-index coefficients unsigned "
      "flips the sign of e_3";
  return rep.done();
}

// ---- catalog ---------------------------------------------------------------

struct Claim {
  ClaimInfo info;
  std::function<VerificationReport(const Sweep&)> run;
};

std::vector<Claim> build_claims() {
  std::vector<Claim> out;
  auto add = [&](std::string id, ClaimStatus status, std::string summary,
                 std::function<VerificationReport(const Sweep&)> run) {
    out.push_back({{std::move(id), status, std::move(summary)}, std::move(run)});
  };
  using S = ClaimStatus;
  add("ci-length", S::kTheorem, "l(S/Q^s) = 2^n C(s+n-1,n) for Q = (x1^2..xn^2)", ci_length);
  add("ci-multiplicity", S::kTheorem, "e_0 = 2^n and e_i = 0 for i > 0 for quadric complete intersections",
      ci_multiplicity);
  add("gvt-series", S::kTheorem, "series of Q^s for a complete intersection of degrees d_1..d_n", gvt_series);
  add("ci-top-degree", S::kTheorem, "top nonzero degree of S/Q^s is 2s+n-2", ci_top_degree);
  add("lattice-count", S::kTheorem, "|{a in N^n : |a| = j}| = C(n+j-1,n-1)", lattice_count);
  add("ci-series", S::kTheorem, "closed series of S/Q^s for quadrics agrees with the general form and the engine",
      ci_series);
  add("cor27", S::kTheorem, "the four length identities for n = 2..5", cor27);
  add("ci-length-identity", S::kTheorem, "C(n+2s,n) + upper part = 2^n C(s+n-1,n)", ci_length_identity_check);
  for (unsigned n = 2; n <= 5; ++n) {
    add("ex2.8-n" + std::to_string(n), S::kExample, "printed series of S_" + std::to_string(n) + "/Q^s",
        [n](const Sweep& sw) { return printed_ci_example(n, sw); });
  }
  add("thm-R34", S::kTheorem, "R_{3,4,s} series ends in (3s-1) t^{2s}",
      [](const Sweep& sw) { return generic_series_claim("thm-R34", S::kTheorem, sw, 3, 5); });
  add("thm-R34-coefficients", S::kTheorem, "Hilbert coefficients of R_{3,4}", r34_coefficients);
  add("thm-R35", S::kTheorem, "I^s = m^(2s) for five generic quadrics in three variables, s >= 2", r35);
  add("thm-R35-series", S::kTheorem, "printed series sum C(2i+2,2) t^i for R_{3,5,s}", r35_series);
  add("thm-R35-witness", S::kTheorem, "explicit five-quadric witness has I^s = m^(2s) for s = 3,4,5",
      r35_witness);
  add("phi", S::kQuestion, "least r with I^s = m^(2s) for some s, compared with 2n-1", phi);
  for (const char* id : {"conj-R45", "conj-R46", "conj-R47"}) {
    add(id, S::kConjecture, std::string("series of ") + id + " for s >= s_min",
        [id](const Sweep& sw) { return generic_series_claim(id, S::kConjecture, sw, 2, 5); });
  }
  add("conj-R59", S::kConjecture, "I^s = m^(2s) for nine generic quadrics in five variables, s >= 4", r59);
  for (const char* id : {"conj-R45", "conj-R46", "conj-R47", "conj-R59"}) {
    add(std::string(id) + "-coefficients", S::kConjecture, std::string("Hilbert coefficients of ") + id,
        [id](const Sweep&) { return formula_coefficients(id); });
  }
  add("conj31", S::kConjecture, "e_j(m^2) = C(n-j,j) 2^(n-2j), nonzero exactly for j <= n/2", conj31);
  add("conj31-identity", S::kConjecture, "C(2s-1+n,n) as an alternating sum over j <= n/2", conj31_identity);
  add("ex3.2", S::kExample, "l(S_4/m^10) = 715 = 1120 - 420 + 15", ex32);
  for (const char* id : {"thm33-case1", "thm33-case2"}) {
    add(id, S::kTheorem, formula_case(id).formula, [id](const Sweep& sw) { return monomial_series_claim(id, sw); });
    add(std::string(id) + "-coefficients", S::kTheorem, std::string("Hilbert coefficients of ") + id,
        [id](const Sweep&) { return monomial_coefficients(id); });
  }
  for (unsigned k = 1; k <= 9; ++k) {
    const std::string id = "conj34-case" + std::to_string(k);
    add(id, S::kConjecture, formula_case(id).formula, [id](const Sweep& sw) { return monomial_series_claim(id, sw); });
    add(id + "-coefficients", S::kConjecture, "Hilbert coefficients of " + id,
        [id](const Sweep&) { return monomial_coefficients(id); });
  }
  add("conj1.1-positivity", S::kConjecture, "e_i >= 0 over every computed fit", positivity);
  std::sort(out.begin(), out.end(), [](const Claim& a, const Claim& b) { return a.info.id < b.info.id; });
  return out;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = build_claims();
  return all;
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

VerificationReport run_check(std::string_view id, const CheckBounds& bounds) {
  for (const auto& c : claims()) {
    if (c.info.id != id) continue;
    auto report = c.run(Sweep(bounds));
    if ((report.verdict == Verdict::kRefuted || report.verdict == Verdict::kDiscrepancy) && !report.witness) {
      throw std::logic_error("verdict without witness for " + report.claim);
    }
    return report;
  }
  std::string known;
  for (const auto& c : claims()) known += (known.empty() ? "" : ", ") + c.info.id;
  throw UsageError("unknown claim '" + std::string(id) + "'; valid ids: " + known);
}

std::vector<VerificationReport> run_all(const CheckBounds& bounds, unsigned jobs) {
  const auto& all = claims();
  std::vector<VerificationReport> reports(all.size());
  std::vector<std::exception_ptr> errors(all.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      try {
        reports[i] = run_check(all[i].info.id, bounds);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(all.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

bool theorem_refuted(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.status == ClaimStatus::kTheorem && r.verdict == Verdict::kRefuted;
  });
}

json to_json(const VerificationReport& report) {
  json out;
  out["claim"] = report.claim;
  out["status"] = to_string(report.status);
  out["verdict"] = to_string(report.verdict);
  out["sweep"] = report.sweep;
  if (report.witness) {
    const auto& w = *report.witness;
    json wj;
    wj["n"] = w.n ? json(*w.n) : json(nullptr);
    wj["s"] = w.s ? json(*w.s) : json(nullptr);
    wj["degree"] = w.degree ? json(*w.degree) : json(nullptr);
    wj["expected"] = w.expected;
    wj["actual"] = w.actual;
    out["witness"] = wj;
  } else {
    out["witness"] = nullptr;
  }
  out["provenance"] = {{"primes", report.provenance.primes},
                       {"seeds", report.provenance.seeds},
                       {"trials", report.provenance.trials}};
  out["details"] = report.details;
  out["note"] = report.note;
  return out;
}

std::string render_table(const std::vector<VerificationReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.claim.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("claim", width) << "  " << pad("status", 10) << "  " << pad("verdict", 21) << "  witness\n";
  std::map<Verdict, unsigned> tally;
  for (const auto& r : reports) {
    ++tally[r.verdict];
    out << pad(r.claim, width) << "  " << pad(std::string(to_string(r.status)), 10) << "  "
        << pad(std::string(to_string(r.verdict)), 21) << "  ";
    if (r.witness) {
      const auto& w = *r.witness;
      if (w.n) out << "n=" << *w.n << " ";
      if (w.s) out << "s=" << *w.s << " ";
      if (w.degree) out << "deg=" << *w.degree << " ";
      out << "expected " << w.expected << ", got " << w.actual;
    }
    out << "\n";
  }
  out << "\n";
  for (const auto& [v, count] : tally) out << to_string(v) << ": " << count << "\n";
  return out.str();
}

}  // namespace quadpow
