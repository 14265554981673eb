#include "quadpow/generic_forms.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#include "quadpow/bigint.hpp"
#include "quadpow/monomial.hpp"

namespace quadpow {

namespace {

using Poly = std::vector<std::uint64_t>;  // dense over one degree slice

void require_artinian_count(const GenericIdealSpec& spec) {
  if (spec.r < spec.n) {
    throw PreconditionError("need r >= n quadrics for an Artinian quotient, got r=" +
                            std::to_string(spec.r) + " < n=" + std::to_string(spec.n));
  }
}

// product_index[u * slice2 + v] = rank of u*v in degree D+2, for u of degree
// D and v of degree 2.
const std::vector<std::uint32_t>& quadric_product_table(unsigned n, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, degree});
  if (inserted) {
    const auto lower = enumerate_degree(n, degree);
    const auto quadrics = enumerate_degree(n, 2);
    it->second.reserve(lower.size() * quadrics.size());
    for (const auto& u : lower) {
      for (const auto& v : quadrics) {
        it->second.push_back(static_cast<std::uint32_t>(rank_in_degree(u * v)));
      }
    }
  }
  return it->second;
}

Poly multiply_by_form(const Poly& p, unsigned degree, const QuadraticForm& f,
                      const PrimeFieldContext& field) {
  const auto& table = quadric_product_table(f.n, degree);
  const std::size_t width = f.coeffs.size();
  Poly out(monomial_count(f.n, degree + 2), 0);
  for (std::size_t u = 0; u < p.size(); ++u) {
    if (p[u] == 0) continue;
    for (std::size_t v = 0; v < width; ++v) {
      if (f.coeffs[v] == 0) continue;
      const std::uint32_t target = table[u * width + v];
      out[target] = field.add(out[target], field.mul(p[u], f.coeffs[v]));
    }
  }
  return out;
}

// All products of s generators (multisets, lexicographic in generator index)
// of one ideal, with the column maps needed to stream its degree slices.
class PowerSlices {
 public:
  PowerSlices(const GenericIdealSpec& spec, unsigned s)
      : n_(spec.n), s_(s), field_(spec.prime), forms_(generators_of(spec)) {
    require_artinian_count(spec);
    if (s == 0) throw UsageError("power exponent must be >= 1");
    Poly one(1, 1);
    expand(0, 0, one);
  }

  std::size_t product_count() const { return products_.size(); }

  std::uint64_t slice_dim(unsigned d) const {
    if (d < 2 * s_) return 0;
    const unsigned shift_degree = d - 2 * s_;
    const auto multipliers = enumerate_degree(n_, shift_degree);
    const auto base = enumerate_degree(n_, 2 * s_);
    // shift[m * base.size() + u] = column of (multiplier m) * (monomial u).
    auto shift = std::make_shared<std::vector<std::uint32_t>>();
    shift->reserve(multipliers.size() * base.size());
    for (const auto& m : multipliers) {
      for (const auto& u : base) shift->push_back(static_cast<std::uint32_t>(rank_in_degree(u * m)));
    }
    const std::size_t mult_count = multipliers.size();
    const std::size_t base_size = base.size();
    SliceMatrix matrix{field_, monomial_count(n_, d), products_.size() * mult_count,
                       [this, shift, mult_count, base_size](std::size_t i,
                                                            std::span<std::uint64_t> row) {
                         const Poly& g = products_[i / mult_count];
                         const std::uint32_t* cols = shift->data() + (i % mult_count) * base_size;
                         for (std::size_t u = 0; u < base_size; ++u) {
                           if (g[u] != 0) row[cols[u]] = g[u];
                         }
                       }};
    return rank_with_early_exit(matrix, matrix.ncols);
  }

 private:
  void expand(unsigned depth, std::size_t first, const Poly& partial) {
    if (depth == s_) {
      products_.push_back(partial);
      return;
    }
    for (std::size_t j = first; j < forms_.size(); ++j) {
      expand(depth + 1, j, multiply_by_form(partial, 2 * depth, forms_[j], field_));
    }
  }

  unsigned n_;
  unsigned s_;
  PrimeFieldContext field_;
  std::vector<QuadraticForm> forms_;
  std::vector<Poly> products_;
};

class FormParser {
 public:
  FormParser(unsigned n, std::string_view text, const PrimeFieldContext& field)
      : n_(n), text_(text), field_(field) {}

  QuadraticForm parse() {
    QuadraticForm form{n_, std::vector<std::uint64_t>(monomial_count(n_, 2), 0)};
    skip_space();
    if (at_end()) fail("empty form");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      const std::size_t term_start = pos_;
      auto [coeff, mono] = parse_term();
      if (mono.degree() != 2) {
        throw FormParseError(term_start, "non-quadratic term '" +
                                             std::string(text_.substr(term_start, pos_ - term_start)) +
                                             "' (degree " + std::to_string(mono.degree()) + ")");
      }
      const std::uint64_t value = negative ? field_.sub(0, coeff) : coeff;
      auto& slot = form.coeffs[rank_in_degree(mono)];
      slot = field_.add(slot, value);
      skip_space();
    }
    return form;
  }

 private:
  std::pair<std::uint64_t, Monomial> parse_term() {
    std::uint64_t coeff = 1;
    Monomial mono(n_);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
      have_factor = true;
    }
    bool need_variable = !have_factor;
    while (!at_end() && is_variable_start(peek())) {
      mono = mono * parse_power();
      need_variable = false;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        need_variable = true;
      }
    }
    if (need_variable) fail("expected a variable");
    return {coeff, mono};
  }

  std::uint64_t parse_coefficient() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const BigInt value = parse_decimal(text_.substr(start, pos_ - start));
    return static_cast<std::uint64_t>(value % field_.prime());
  }

  Monomial parse_power() {
    const unsigned var = parse_variable();
    unsigned exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      exponent = parse_small("exponent");
    }
    return Monomial::variable_power(n_, var, exponent);
  }

  unsigned parse_variable() {
    const std::size_t start = pos_;
    const char c = peek();
    ++pos_;
    if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const unsigned index = parse_small("variable index");
      if (index < 1 || index > n_) {
        throw FormParseError(start, "variable x" + std::to_string(index) + " outside x1..x" +
                                        std::to_string(n_));
      }
      return index - 1;
    }
    static constexpr std::string_view kAliases = "xyzw";
    const auto alias = kAliases.find(c);
    if (alias == std::string_view::npos) throw FormParseError(start, "expected a variable");
    if (n_ > 4) {
      throw FormParseError(start, std::string("alias '") + c + "' only allowed for n <= 4; use x1..x" +
                                      std::to_string(n_));
    }
    if (alias >= n_) {
      throw FormParseError(start, std::string("variable '") + c + "' not in a ring with " +
                                      std::to_string(n_) + " variables");
    }
    return static_cast<unsigned>(alias);
  }

  unsigned parse_small(const char* what) {
    const std::size_t start = pos_;
    unsigned value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > 255) throw FormParseError(start, std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;
  }

  static bool is_variable_start(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw FormParseError(pos_, what); }

  unsigned n_;
  std::string_view text_;
  const PrimeFieldContext& field_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string QuadraticForm::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs[k] != 1) out += std::to_string(coeffs[k]) + "*";
    out += unrank_in_degree(n, 2, k).to_string();
  }
  return out.empty() ? "0" : out;
}

GenericIdealSpec GenericIdealSpec::random(unsigned n, unsigned r, std::uint64_t prime,
                                          std::uint64_t seed) {
  return GenericIdealSpec{n, r, prime, seed, std::nullopt};
}

GenericIdealSpec GenericIdealSpec::with_forms(unsigned n, std::vector<QuadraticForm> forms,
                                              std::uint64_t prime) {
  for (const auto& f : forms) {
    if (f.n != n || f.coeffs.size() != monomial_count(n, 2)) {
      throw UsageError("explicit form does not live in a ring with " + std::to_string(n) +
                       " variables");
    }
  }
  const auto r = static_cast<unsigned>(forms.size());
  return GenericIdealSpec{n, r, prime, 0, std::move(forms)};
}

FormParseError::FormParseError(std::size_t position, const std::string& what)
    : UsageError("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

std::vector<QuadraticForm> sample_forms(const GenericIdealSpec& spec) {
  if (!spec.is_random()) throw UsageError("sample_forms needs a random spec");
  require_artinian_count(spec);
  const PrimeFieldContext field(spec.prime);
  std::seed_seq seq{static_cast<std::uint32_t>(spec.n),
                    static_cast<std::uint32_t>(spec.prime), static_cast<std::uint32_t>(spec.prime >> 32),
                    static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32)};
  std::mt19937_64 gen(seq);
  constexpr std::uint64_t kTop = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kTop - kTop % field.prime();
  const std::size_t width = monomial_count(spec.n, 2);
  std::vector<QuadraticForm> forms;
  forms.reserve(spec.r);
  for (unsigned i = 0; i < spec.r; ++i) {
    QuadraticForm f{spec.n, std::vector<std::uint64_t>(width)};
    for (auto& c : f.coeffs) {
      std::uint64_t x = gen();
      while (x >= limit) x = gen();
      c = x % field.prime();
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<QuadraticForm> generators_of(const GenericIdealSpec& spec) {
  return spec.is_random() ? sample_forms(spec) : *spec.forms;
}

QuadraticForm parse_form(unsigned n, std::string_view text, const PrimeFieldContext& field) {
  if (n == 0 || n > Monomial::kMaxVariables) throw UsageError("bad number of variables");
  return FormParser(n, text, field).parse();
}

std::uint64_t power_slice_dim(const GenericIdealSpec& spec, unsigned s, unsigned d) {
  if (d < 2 * s) throw UsageError("power_slice_dim needs d >= 2s");
  return PowerSlices(spec, s).slice_dim(d);
}

HilbertData hilbert_data_generic(const GenericIdealSpec& spec, unsigned s) {
  const PowerSlices slices(spec, s);
  const unsigned n = spec.n;
  const unsigned top = 2 * s + n - 2;
  std::vector<BigInt> dims(top + 1, 0);
  for (unsigned d = 0; d < 2 * s; ++d) dims[d] = monomial_count(n, d);
  for (unsigned d = 2 * s; d <= top; ++d) {
    const std::uint64_t standard = monomial_count(n, d) - slices.slice_dim(d);
    dims[d] = standard;
    if (standard == 0) break;
  }
  if (top >= 2 * s && dims[top] != 0 && slices.slice_dim(top + 1) != monomial_count(n, top + 1)) {
    throw PreconditionError("S/I^s does not vanish in degree 2s+n-1=" + std::to_string(top + 1) +
                            "; the generators contain no regular sequence");
  }
  return HilbertData(n, s, std::move(dims));
}

bool is_power_full(const GenericIdealSpec& spec, unsigned s) {
  const PowerSlices slices(spec, s);
  const std::uint64_t full = monomial_count(spec.n, 2 * s);
  if (slices.product_count() < full) return false;
  return slices.slice_dim(2 * s) == full;
}

PhiTable phi_probe(unsigned n, const std::vector<unsigned>& r_values, unsigned s_max,
                   unsigned trials, std::uint64_t prime, std::uint64_t seed_base) {
  if (trials == 0) throw UsageError("phi probe needs at least one trial");
  PhiTable table;
  table.n = n;
  table.s_max = s_max;
  table.prime = prime;
  for (unsigned t = 0; t < trials; ++t) table.seeds.push_back(seed_base + t);
  std::vector<unsigned> sorted_r = r_values;
  std::sort(sorted_r.begin(), sorted_r.end());
  sorted_r.erase(std::unique(sorted_r.begin(), sorted_r.end()), sorted_r.end());
  for (unsigned r : sorted_r) {
    if (r < n) throw PreconditionError("phi probe needs r >= n");
    PhiRow row;
    row.r = r;
    for (std::uint64_t seed : table.seeds) {
      std::optional<unsigned> found;
      const auto spec = GenericIdealSpec::random(n, r, prime, seed);
      for (unsigned s = 1; s <= s_max && !found; ++s) {
        if (is_power_full(spec, s)) found = s;
      }
      row.per_trial.push_back(found);
    }
    row.trials_agree = std::all_of(row.per_trial.begin(), row.per_trial.end(),
                                   [&](const auto& v) { return v == row.per_trial.front(); });
    for (const auto& v : row.per_trial) {
      if (v && (!row.min_s || *v < *row.min_s)) row.min_s = v;
    }
    if (!row.trials_agree) {
      table.warnings.push_back("r=" + std::to_string(r) + ": trials disagree on the minimal s");
    }
    if (row.min_s && !table.minimal_r) table.minimal_r = r;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace quadpow
