#include "quadpow/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "quadpow/cli/cache.hpp"
#include "quadpow/cli/records.hpp"
#include "quadpow/coefficient_fit.hpp"
#include "quadpow/errors.hpp"
#include "quadpow/generic_forms.hpp"
#include "quadpow/monomial_ideal.hpp"
#include "quadpow/verifier.hpp"

namespace quadpow::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  const auto t = strip(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9) {
    throw UsageError(what + ": '" + text + "' is not a non-negative integer");
  }
  return static_cast<unsigned>(std::stoul(t));
}

// "1,2;1,3" -> {(1,2),(1,3)}; "all" -> every pair; "" -> none.
std::vector<VariablePair> parse_pairs(unsigned n, const std::string& text) {
  if (strip(text) == "all") return all_pairs(n);
  std::vector<VariablePair> pairs;
  for (const auto& item : split(text, ';')) {
    if (strip(item).empty()) continue;
    const auto ij = split(item, ',');
    if (ij.size() != 2) throw UsageError("--m: expected 'i,j' pairs separated by ';', got '" + item + "'");
    auto i = parse_unsigned(ij[0], "--m"), j = parse_unsigned(ij[1], "--m");
    if (i > j) std::swap(i, j);
    pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  from_squarefree_set(n, pairs);  // validates indices
  return pairs;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--s-range: expected 'a..b', got '" + text + "'");
  const unsigned a = parse_unsigned(text.substr(0, dots), "--s-range");
  const unsigned b = parse_unsigned(text.substr(dots + 2), "--s-range");
  if (a < 1 || b < a) throw UsageError("--s-range: need 1 <= a <= b, got '" + text + "'");
  return {a, b};
}

std::string join_dims(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_decimal(v[i]);
  return out + "]";
}

// Runs f(0..count-1) on up to `jobs` threads; rethrows the first failure.
template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F f) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, count)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---- hilbert ---------------------------------------------------------------

struct HilbertOptions {
  std::string kind;
  unsigned n = 0;
  std::string m;
  unsigned r = 0;
  unsigned s = 0;
  std::string s_range;
  std::uint64_t prime = PrimeFieldContext::kDefaultPrime;
  std::uint64_t seed = 1;
  std::string gens;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  bool with_fit = false;
  unsigned jobs = 1;
};

int run_hilbert(const HilbertOptions& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  if (o.n == 0) throw UsageError("--n must be >= 1");
  RingSpec ring;
  ring.kind = o.kind;
  ring.n = o.n;
  std::optional<GenericIdealSpec> generic;
  std::optional<MonomialIdeal> monomial;
  if (o.kind == "monomial") {
    for (const char* flag : {"--r", "--gens", "--prime", "--seed"}) {
      if (given(flag)) throw UsageError(std::string(flag) + " does not apply to --kind monomial");
    }
    ring.pairs = parse_pairs(o.n, o.m);
    monomial = from_squarefree_set(o.n, ring.pairs);
  } else if (o.kind == "generic") {
    for (const char* flag : {"--m", "--gens"}) {
      if (given(flag)) throw UsageError(std::string(flag) + " does not apply to --kind generic");
    }
    if (!given("--r")) throw UsageError("--kind generic requires --r");
    ring.r = o.r;
    ring.prime = o.prime;
    ring.seed = o.seed;
    PrimeFieldContext check(o.prime);
    generic = GenericIdealSpec::random(o.n, o.r, o.prime, o.seed);
  } else {
    for (const char* flag : {"--m", "--r", "--seed"}) {
      if (given(flag)) throw UsageError(std::string(flag) + " does not apply to --kind explicit");
    }
    if (!given("--gens")) throw UsageError("--kind explicit requires --gens");
    const PrimeFieldContext field(o.prime);
    std::vector<QuadraticForm> forms;
    for (const auto& g : split(o.gens, ';')) {
      if (strip(g).empty()) continue;
      try {
        forms.push_back(parse_form(o.n, g, field));
      } catch (const FormParseError& e) {
        throw UsageError("--gens '" + g + "': " + e.what());
      }
    }
    if (forms.empty()) throw UsageError("--gens lists no forms");
    for (const auto& f : forms) ring.generators.push_back(f.to_string());
    ring.prime = o.prime;
    generic = GenericIdealSpec::with_forms(o.n, forms, o.prime);
  }

  unsigned s_lo = o.s, s_hi = o.s;
  if (!o.s_range.empty()) std::tie(s_lo, s_hi) = parse_range(o.s_range);
  if (o.s_range.empty() && !given("--s")) throw UsageError("one of --s or --s-range is required");
  if (s_lo < 1) throw UsageError("--s must be >= 1");

  std::optional<ResultCache> cache;
  if (!o.no_cache) cache.emplace(o.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(o.cache_dir));

  std::vector<ResultRecord> records(s_hi - s_lo + 1);
  parallel_for(records.size(), o.jobs, [&](std::size_t i) {
    const unsigned s = s_lo + static_cast<unsigned>(i);
    const auto key = cache_key(ring, s);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if (cache) {
      if (auto hit = cache->load(key)) {
        records[i] = record_from_json(*hit);
        records[i].cached = true;
        records[i].seconds = elapsed();
        return;
      }
    }
    const HilbertData h = monomial ? hilbert_data(*monomial, s) : hilbert_data_generic(*generic, s);
    ResultRecord& r = records[i];
    r.ring = ring;
    r.s = s;
    r.dims = h.dims();
    r.length = h.length();
    r.seconds = elapsed();
    if (cache) cache->store(key, to_json(r, false));
  });

  if (o.with_fit) {
    LengthSamples samples;
    for (const auto& r : records) samples[r.s] = r.length;
    const auto f = fit(samples, o.n);
    const FitSummary summary{f.integer_coefficients(), f.s_onset};
    for (auto& r : records) r.fit = summary;
  }

  if (o.format == "table") {
    for (const auto& r : records) {
      out << "s=" << r.s << "  length=" << to_decimal(r.length) << "  dims=" << join_dims(r.dims)
          << (r.cached ? "  (cached)" : "") << "\n";
    }
    if (o.with_fit) {
      out << "e=" << join_dims(records.front().fit->e) << "  s_onset=" << records.front().fit->s_onset << "\n";
    }
  } else {
    ojson arr = ojson::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  }
  if (cache) err << "cache: " << cache->hits() << " hit(s), " << cache->misses() << " miss(es)\n";
  return kExitOk;
}

// ---- coeffs ----------------------------------------------------------------

struct CoeffsOptions {
  std::string from;
  bool pipe = false;
  unsigned n = 0;
  std::string format = "json";
};

int run_coeffs(const CoeffsOptions& o, const CLI::App& sub, std::istream& in, std::ostream& out) {
  if (o.from.empty() == !o.pipe) throw UsageError("give exactly one of --from FILE or --pipe");
  std::string text;
  if (o.pipe) {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.from);
    if (!file) throw UsageError("cannot read '" + o.from + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const auto input = json::parse(text, nullptr, false);
  if (input.is_discarded()) throw UsageError("input is not valid JSON");

  LengthSamples samples;
  std::optional<unsigned> n;
  if (sub.count("--n")) n = o.n;
  auto take_records = [&](const json& arr) {
    std::optional<RingSpec> ring;
    for (const auto& item : arr) {
      const auto r = record_from_json(item);
      if (ring && !(r.ring == *ring)) throw UsageError("records describe different rings");
      ring = r.ring;
      if (samples.count(r.s) && samples[r.s] != r.length) {
        throw UsageError("conflicting lengths for s=" + std::to_string(r.s));
      }
      samples[r.s] = r.length;
    }
    if (ring && !n) n = ring->n;
  };
  if (input.is_array()) {
    take_records(input);
  } else if (input.is_object() && input.contains("schema_version")) {
    take_records(json::array({input}));
  } else if (input.is_object()) {
    for (const auto& [key, value] : input.items()) {
      const std::int64_t s = parse_unsigned(key, "sample key");
      if (value.is_string()) {
        samples[s] = parse_decimal(value.get<std::string>());
      } else if (value.is_number_integer()) {
        samples[s] = BigInt(value.get<std::int64_t>());
      } else {
        throw UsageError("sample for s=" + key + " must be a decimal string");
      }
    }
  } else {
    throw UsageError("expected a {\"s\": \"length\"} map or hilbert output");
  }
  if (!n) throw UsageError("--n is required for a plain sample map");

  const auto f = fit(samples, *n);
  if (o.format == "table") {
    out << "e=(";
    for (std::size_t i = 0; i < f.e.size(); ++i) out << (i ? "," : "") << to_string(f.e[i]);
    out << ")  s_onset=" << f.s_onset << "\n";
    return kExitOk;
  }
  ojson result;
  result["n"] = *n;
  ojson e = ojson::array();
  for (const auto& q : f.e) e.push_back(to_string(q));
  result["e"] = e;
  result["integral"] = f.integral;
  result["s_onset"] = f.s_onset;
  if (f.residual_witness) {
    result["residual_witness"] = {{"s", f.residual_witness->s},
                                  {"expected", to_string(f.residual_witness->expected)},
                                  {"actual", to_decimal(f.residual_witness->actual)}};
  } else {
    result["residual_witness"] = nullptr;
  }
  out << result.dump(2) << "\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  bool all = false;
  bool list = false;
  std::vector<std::string> checks;
  unsigned s_max = 0, n_max = 0, trials = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "json";
};

int run_verify(const VerifyOptions& o, const CLI::App& sub, std::ostream& out) {
  if (o.list) {
    if (o.format == "table") {
      for (const auto& c : claim_catalog()) {
        out << c.id << "  [" << to_string(c.status) << "]  " << c.summary << "\n";
      }
    } else {
      ojson arr = ojson::array();
      for (const auto& c : claim_catalog()) {
        arr.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"summary", c.summary}});
      }
      out << arr.dump(2) << "\n";
    }
    return kExitOk;
  }
  if (o.all == !o.checks.empty()) throw UsageError("give exactly one of --all, --check ID, or --list");
  CheckBounds bounds;
  if (sub.count("--s-max")) bounds.s_max = o.s_max;
  if (sub.count("--n-max")) bounds.n_max = o.n_max;
  if (sub.count("--trials")) bounds.trials = o.trials;
  if (!o.primes.empty()) {
    for (auto p : o.primes) PrimeFieldContext check(p);
    bounds.primes = o.primes;
  }
  bounds.seed_base = o.seed;

  std::vector<VerificationReport> reports;
  if (o.all) {
    reports = run_all(bounds, o.jobs);
  } else {
    const auto& catalog = claim_catalog();
    for (const auto& id : o.checks) {
      if (std::none_of(catalog.begin(), catalog.end(), [&](const ClaimInfo& c) { return c.id == id; })) {
        run_check(id, bounds);  // throws, listing the valid ids
      }
    }
    reports.resize(o.checks.size());
    parallel_for(o.checks.size(), o.jobs, [&](std::size_t i) { reports[i] = run_check(o.checks[i], bounds); });
  }
  if (o.format == "table") {
    out << render_table(reports);
  } else {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  }
  return theorem_refuted(reports) ? kExitRefuted : kExitOk;
}

// ---- phi -------------------------------------------------------------------

struct PhiOptions {
  unsigned n = 0, r_min = 0, r_max = 0, s_max = 5, trials = 2;
  std::uint64_t prime = PrimeFieldContext::kDefaultPrime;
  std::uint64_t seed = 1;
  std::string format = "table";
};

int run_phi(const PhiOptions& o, const CLI::App& sub, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const unsigned r_min = sub.count("--r-min") ? o.r_min : o.n;
  const unsigned r_max = sub.count("--r-max") ? o.r_max : 2 * o.n - 1;
  if (r_min < o.n || r_max < r_min) throw UsageError("need n <= r-min <= r-max");
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  std::vector<unsigned> rs;
  for (unsigned r = r_min; r <= r_max; ++r) rs.push_back(r);
  const auto t = phi_probe(o.n, rs, o.s_max, o.trials, o.prime, o.seed);
  if (o.format == "table") {
    out << "n=" << t.n << "  s_max=" << t.s_max << "  prime=" << t.prime << "  seeds=";
    for (std::size_t i = 0; i < t.seeds.size(); ++i) out << (i ? "," : "") << t.seeds[i];
    out << "\n";
    for (const auto& row : t.rows) {
      out << "r=" << row.r << ": " << (row.min_s ? std::to_string(*row.min_s) : std::string("none"));
      if (!row.trials_agree) out << "  (trials disagree)";
      out << "\n";
    }
    out << "minimal r = " << (t.minimal_r ? std::to_string(*t.minimal_r) : std::string("none"))
        << "  (2n-1 = " << 2 * o.n - 1 << ")\n";
    for (const auto& w : t.warnings) out << "warning: " << w << "\n";
    return kExitOk;
  }
  ojson rows = ojson::array();
  for (const auto& row : t.rows) {
    ojson per = ojson::array();
    for (const auto& v : row.per_trial) per.push_back(v ? ojson(*v) : ojson(nullptr));
    rows.push_back({{"r", row.r},
                    {"min_s", row.min_s ? ojson(*row.min_s) : ojson(nullptr)},
                    {"per_trial", per},
                    {"trials_agree", row.trials_agree}});
  }
  ojson result;
  result["n"] = t.n;
  result["s_max"] = t.s_max;
  result["prime"] = t.prime;
  result["seeds"] = t.seeds;
  result["rows"] = rows;
  result["minimal_r"] = t.minimal_r ? ojson(*t.minimal_r) : ojson(nullptr);
  result["two_n_minus_1"] = 2 * o.n - 1;
  result["warnings"] = t.warnings;
  out << result.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series and Hilbert coefficients of powers of quadratic ideals", "quadpow"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "table"});

  HilbertOptions h;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S_n/I^s");
  hilbert->add_option("--kind", h.kind, "monomial | generic | explicit")
      ->required()
      ->check(CLI::IsMember({"monomial", "generic", "explicit"}));
  hilbert->add_option("--n", h.n, "number of variables")->required();
  hilbert->add_option("--m", h.m, "squarefree generators x_i x_j as \"i,j;k,l\", or \"all\"");
  hilbert->add_option("--r", h.r, "number of random quadrics");
  auto* s_opt = hilbert->add_option("--s", h.s, "power");
  auto* range_opt = hilbert->add_option("--s-range", h.s_range, "powers a..b");
  s_opt->excludes(range_opt);
  hilbert->add_option("--prime", h.prime, "field characteristic");
  hilbert->add_option("--seed", h.seed, "seed for random forms");
  hilbert->add_option("--gens", h.gens, "quadrics separated by ';', e.g. \"x^2;y^2;x*y+2*y*z\"");
  hilbert->add_option("--format", h.format)->check(formats);
  hilbert->add_option("--cache-dir", h.cache_dir, "cache directory (default $QUADPOW_CACHE_DIR or ./.quadpow-cache)");
  hilbert->add_flag("--no-cache", h.no_cache);
  hilbert->add_flag("--fit", h.with_fit, "fit Hilbert coefficients over the range");
  hilbert->add_option("--jobs", h.jobs)->check(CLI::PositiveNumber);

  CoeffsOptions c;
  auto* coeffs = app.add_subcommand("coeffs", "Hilbert coefficients from length samples");
  coeffs->add_option("--from", c.from, "JSON file: {\"s\": \"length\"} or hilbert output");
  coeffs->add_flag("--pipe", c.pipe, "read the JSON from stdin");
  coeffs->add_option("--n", c.n, "number of variables");
  coeffs->add_option("--format", c.format)->check(formats);

  VerifyOptions v;
  auto* verify = app.add_subcommand("verify", "check the claim catalog");
  verify->add_flag("--all", v.all);
  verify->add_flag("--list", v.list);
  verify->add_option("--check", v.checks, "claim id (repeatable)");
  verify->add_option("--s-max", v.s_max);
  verify->add_option("--n-max", v.n_max);
  verify->add_option("--trials", v.trials);
  verify->add_option("--primes", v.primes, "comma-separated primes")->delimiter(',');
  verify->add_option("--seed", v.seed, "first seed");
  verify->add_option("--jobs", v.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", v.format)->check(formats);

  PhiOptions p;
  auto* phi = app.add_subcommand("phi", "least s with I^s = m^(2s) for r random quadrics");
  phi->add_option("--n", p.n)->required();
  phi->add_option("--r-min", p.r_min);
  phi->add_option("--r-max", p.r_max);
  phi->add_option("--s-max", p.s_max);
  phi->add_option("--trials", p.trials);
  phi->add_option("--prime", p.prime);
  phi->add_option("--seed", p.seed);
  phi->add_option("--format", p.format)->check(formats);

  std::vector<const char*> argv{"quadpow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*hilbert) return run_hilbert(h, *hilbert, out, err);
    if (*coeffs) return run_coeffs(c, *coeffs, in, out);
    if (*verify) return run_verify(v, *verify, out);
    return run_phi(p, *phi, out);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace quadpow::cli
