#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadpow/bigint.hpp"
#include "quadpow/hilbert_data.hpp"
#include "quadpow/monomial_ideal.hpp"

namespace quadpow {

// Hilbert function of S/Q^s for Q a complete intersection of forms of the
// given degrees, as a sum over lattice points a with |a| <= s-1 of the
// shifted Hilbert function of S/Q: H(i) = sum_a H_{S/Q}(i - sum a_k d_k).
// dims span degrees 0..sum(d_k - 1) + (s-1) max d_k.
HilbertData ci_series_general(const std::vector<unsigned>& degrees, unsigned s);

// Quadric complete intersection in n variables, closed form:
//   sum_{i<2s} C(i+n-1, n-1) t^i
//   + sum_{i=2s}^{2s+n-2} sum_{j<=s-1} C(n+j-1, n-1) C(n, i-2j) t^i.
HilbertData ci_quadric_series(unsigned n, unsigned s);

// The explicit rows printed for n = 2..5 (the n = 2 row verbatim, with its
// constant (s+1) coefficient below degree 2s).
HilbertData ci_printed_example(unsigned n, unsigned s);

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

// The four length identities for quadric complete intersections, k = 1..4
// (n = k + 1 variables), e.g. k = 1: C(2s+1,2) + s = 4 C(s+1,2).
IdentityCheck ci_length_identity(unsigned k, unsigned s);

// C(n+2s-1+offset, n) + (degree >= 2s part of ci_quadric_series) versus
// 2^n C(s+n-1, n). offset 0 is the consistent form; offset 1 is the form
// with C(n+2s, n) as printed.
IdentityCheck ci_length_identity_general(unsigned n, unsigned s, unsigned offset);

struct MaximalSquareIdentity {
  BigInt lhs;            // C(2s-1+n, n)
  BigInt printed_rhs;    // sum_j (-1)^j 2^(n-2j) C(n-j,j) C(s+n-j, n-j)
  BigInt corrected_rhs;  // same with C(s+n-j-1, n-j)
  bool printed_holds() const { return lhs == printed_rhs; }
  bool corrected_holds() const { return lhs == corrected_rhs; }
};

MaximalSquareIdentity maximal_square_identity(unsigned n, unsigned s);

enum class FormulaFamily { kGeneric, kMonomial };

// One displayed series formula together with what is needed to recompute it.
struct FormulaCase {
  std::string id;
  FormulaFamily family = FormulaFamily::kMonomial;
  unsigned n = 0;
  unsigned r = 0;                    // generic cases
  std::vector<VariablePair> pairs;   // monomial cases (I_{n,M})
  unsigned s_min = 1;                // stated validity threshold
  bool conjecture = false;
  std::vector<BigInt> printed_coefficients;  // as printed; may omit trailing terms
  std::string formula;                       // human-readable rendering
};

const std::vector<FormulaCase>& formula_catalog();
// Throws UsageError for unknown ids.
const FormulaCase& formula_case(std::string_view id);

struct KnownSeries {
  unsigned n = 0;
  unsigned s = 0;
  std::vector<BigInt> lower;        // degrees 0..2s-1
  std::vector<BigInt> interesting;  // degrees 2s, 2s+1, ... (when degree_resolved)
  BigInt interesting_total;
  // false when the formula only states the total of the degree >= 2s part.
  bool degree_resolved = true;

  BigInt length() const;
};

// Evaluates the printed formula at s; below the validity threshold the value
// is still computed (comparisons there are informational).
KnownSeries known_series(const FormulaCase& formula, unsigned s);
KnownSeries known_series(std::string_view id, unsigned s);

}  // namespace quadpow
