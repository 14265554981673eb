#include "quadpow/verifier.hpp"

#include <set>

#include <gtest/gtest.h>

#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

const VerificationReport& find(const std::vector<VerificationReport>& all, const std::string& id) {
  for (const auto& r : all) {
    if (r.claim == id) return r;
  }
  throw std::runtime_error("missing " + id);
}

const std::vector<VerificationReport>& everything() {
  static const auto reports = run_all(CheckBounds{}, 2);
  return reports;
}

TEST(ClaimCatalog, SortedUniqueAndComplete) {
  const auto& cat = claim_catalog();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_TRUE(ids.insert(cat[i].id).second) << cat[i].id;
    if (i) EXPECT_LT(cat[i - 1].id, cat[i].id);
  }
  for (const char* id : {"ci-length", "ci-series", "cor27", "ex2.8-n2", "ex2.8-n5", "thm-R34", "thm-R35",
                         "thm-R35-witness", "phi", "conj-R45", "conj-R59", "conj31", "conj31-identity", "ex3.2",
                         "thm33-case1", "thm33-case1-coefficients", "conj34-case9", "conj1.1-positivity"}) {
    EXPECT_EQ(ids.count(id), 1u) << id;
  }
  for (int k = 1; k <= 9; ++k) {
    EXPECT_EQ(ids.count("conj34-case" + std::to_string(k)), 1u);
    EXPECT_EQ(ids.count("conj34-case" + std::to_string(k) + "-coefficients"), 1u);
  }
}

TEST(RunCheck, UnknownIdListsValidIds) {
  try {
    run_check("no-such-claim", CheckBounds{});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("valid ids: ci-length"), std::string::npos);
  }
}

TEST(RunCheck, R34SeriesAcrossSeedsAndPrimes) {
  CheckBounds b;
  b.s_max = 4;
  b.trials = 3;
  const auto r = run_check("thm-R34", b);
  EXPECT_EQ(r.verdict, Verdict::kConfirmed);
  EXPECT_EQ(r.provenance.seeds, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(r.provenance.primes.size(), 2u);
  EXPECT_EQ(r.sweep["s"], nlohmann::ordered_json({1, 4}));
}

TEST(RunCheck, TupleVerdicts) {
  const auto case1 = run_check("thm33-case1-coefficients", CheckBounds{});
  EXPECT_EQ(case1.verdict, Verdict::kDiscrepancy);
  ASSERT_TRUE(case1.witness);
  EXPECT_EQ(case1.witness->expected, "(8,6)");
  EXPECT_EQ(case1.witness->actual, "(8,2,0,0)");
  EXPECT_EQ(run_check("thm33-case2-coefficients", CheckBounds{}).verdict, Verdict::kConfirmed);
  const auto r34 = run_check("thm-R34-coefficients", CheckBounds{});
  EXPECT_EQ(r34.verdict, Verdict::kDiscrepancy);
  EXPECT_EQ(r34.witness->actual, "(8,4,3,1)");
}

TEST(RunCheck, FourVariableFits) {
  const std::vector<std::string> expected = {"(16,4,0,0,0)",    "(16,8,2,0,0)",    "(16,8,1,0,0)",
                                             "(16,8,0,0,0)",    "(16,12,6,1,0)",   "(16,12,5,1,0)",
                                             "(16,12,1,-2,0)",  "(16,12,3,0,0)",   "(16,12,1,-1,0)"};
  for (int k = 1; k <= 9; ++k) {
    const auto& r = find(everything(), "conj34-case" + std::to_string(k) + "-coefficients");
    std::string fitted = "(";
    for (const auto& v : r.details["fitted"]) fitted += (fitted.size() > 1 ? "," : "") + v.get<std::string>();
    EXPECT_EQ(fitted + ")", expected[k - 1]) << k;
    const bool printed_agrees = (k == 1 || k == 4 || k == 8);
    EXPECT_EQ(r.verdict, printed_agrees ? Verdict::kConjectureConsistent : Verdict::kDiscrepancy) << k;
    EXPECT_EQ(find(everything(), "conj34-case" + std::to_string(k)).verdict, Verdict::kConjectureConsistent);
  }
}

TEST(RunCheck, PositivityNamesTheCycle) {
  const auto& r = find(everything(), "conj1.1-positivity");
  EXPECT_EQ(r.status, ClaimStatus::kConjecture);
  EXPECT_EQ(r.verdict, Verdict::kRefuted);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(r.witness->actual.find("I_{4,{12,23,34,14}}"), std::string::npos);
  EXPECT_NE(r.witness->actual.find("-2"), std::string::npos);
  EXPECT_NE(r.note.find("sign"), std::string::npos);
}

TEST(RunCheck, PrintedMisprintsAreDiscrepancies) {
  const auto& n2 = find(everything(), "ex2.8-n2");
  EXPECT_EQ(n2.verdict, Verdict::kDiscrepancy);
  EXPECT_FALSE(n2.details["printed_matches_engine"].get<bool>());
  EXPECT_TRUE(n2.details["general_formula_matches_engine"].get<bool>());
  for (const char* id : {"ex2.8-n3", "ex2.8-n4", "ex2.8-n5", "ex3.2", "cor27", "ci-series", "thm-R35",
                         "thm-R35-witness"}) {
    EXPECT_EQ(find(everything(), id).verdict, Verdict::kConfirmed) << id;
  }
  for (const char* id : {"thm-R35-series", "conj31-identity", "ci-length-identity", "conj-R46-coefficients"}) {
    EXPECT_EQ(find(everything(), id).verdict, Verdict::kDiscrepancy) << id;
  }
}

TEST(RunAll, VerdictInvariants) {
  for (const auto& r : everything()) {
    if (r.verdict == Verdict::kRefuted || r.verdict == Verdict::kDiscrepancy) {
      EXPECT_TRUE(r.witness.has_value()) << r.claim;
    }
    if (r.verdict == Verdict::kConfirmed || r.verdict == Verdict::kConjectureConsistent) {
      EXPECT_FALSE(r.sweep.empty()) << r.claim;
    }
    if (r.status == ClaimStatus::kConjecture || r.status == ClaimStatus::kQuestion) {
      EXPECT_NE(r.verdict, Verdict::kConfirmed) << r.claim;
    }
    EXPECT_NE(r.verdict, Verdict::kSkipped) << r.claim;
  }
  EXPECT_FALSE(theorem_refuted(everything()));
  EXPECT_EQ(everything().size(), claim_catalog().size());
}

TEST(RunAll, ReproducibleAndOrderIndependent) {
  const auto serial = run_all(CheckBounds{}, 1);
  ASSERT_EQ(serial.size(), everything().size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(to_json(serial[i]).dump(), to_json(everything()[i]).dump());
  }
  EXPECT_EQ(to_json(run_check("phi", CheckBounds{})).dump(), to_json(find(serial, "phi")).dump());
}

TEST(RunCheck, PhiTables) {
  const auto& r = find(everything(), "phi");
  EXPECT_EQ(r.verdict, Verdict::kConjectureConsistent);
  EXPECT_EQ(r.details["tables"]["3"]["minimal_r"], 5);
  EXPECT_EQ(r.details["tables"]["4"]["minimal_r"], 7);
}

TEST(TheoremRefuted, OnlyTheoremsCount) {
  VerificationReport conj;
  conj.status = ClaimStatus::kConjecture;
  conj.verdict = Verdict::kRefuted;
  EXPECT_FALSE(theorem_refuted({conj}));
  VerificationReport thm;
  thm.verdict = Verdict::kRefuted;
  EXPECT_TRUE(theorem_refuted({conj, thm}));
  thm.verdict = Verdict::kDiscrepancy;
  EXPECT_FALSE(theorem_refuted({thm}));
}

TEST(Rendering, JsonAndTable) {
  const auto r = run_check("cor27", CheckBounds{});
  const auto j = to_json(r);
  EXPECT_EQ(j["claim"], "cor27");
  EXPECT_EQ(j["verdict"], "CONFIRMED");
  EXPECT_TRUE(j["witness"].is_null());
  const auto table = render_table(everything());
  for (const auto& c : claim_catalog()) EXPECT_NE(table.find(c.id), std::string::npos);
}

}  // namespace
}  // namespace quadpow
