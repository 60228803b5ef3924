#pragma once

// Generic necessary tests on restricted data, the composite classifier and
// the regression against the published classification lists.

#include <string>
#include <vector>

#include "families.hpp"

namespace realspher {

enum class Outcome { Pass, Fail, NotApplicable };
const char* outcome_name(Outcome o);

struct TestReport {
  std::string test_id;
  Outcome outcome = Outcome::NotApplicable;
  std::string witness;
  int count = 0;  // #Delta(n^-sigma) for the rank test, otherwise 0
  int bound = 0;  // rank_aH for the rank test, otherwise 0
};

// Pass iff Delta(n^-sigma) is linearly independent. Fail disproves QP.
TestReport test_qp_rank(const RestrictedDatum& d);
// n(G) - n(H) <= m(G) rank, only when rank_aG == rank_aH.
TestReport test_qp_ineq(const DerivedInvariants& inv);
// Every lambda in Delta(n^-sigma) needs #(W_H lambda) <= 2 rank_aH.
TestReport test_weyl_orbit(const RestrictedDatum& d, const RootSystem& rs);
TestReport test_weyl_orbit(const RestrictedDatum& d);  // NotApplicable without h_root_system

struct Provenance {
  std::string flag;  // "QP", "PP", "BB", "FM", "BM" or "test"
  std::string rule_id;
  std::string citation;
};

struct Verdict {
  Tri qp = Tri::Unknown;
  Tri pp = Tri::Unknown;
  Tri bb = Tri::Unknown;
  bool fm = false;  // finite multiplicities, same as pp == Yes
  bool bm = false;  // bounded multiplicities, same as bb == Yes
  std::vector<Provenance> provenance;
  std::vector<TestReport> tests;
};

// Family rule decides; every applicable generic test corroborates. A failing
// test on a rule-Yes pair throws ContradictionDetected.
Verdict classify(const PairSpec& s);

// Expected verdicts transcribed from the classification lists, phrased as
// list membership (up to the recorded low-rank isomorphisms).
struct ListExpectation {
  bool covered = false;  // the family appears in the lists
  bool pp = false;       // in the PP list
  bool qp_not_pp = false;  // in the QP-but-not-PP list
  bool bb = false;       // a sum of the trivial, abelian and strong Gelfand items
  std::string item;      // list label(s) matched, informational
};
ListExpectation list_expectation(const PairSpec& s);

struct ListCheck {
  PairSpec spec;
  std::string flag;  // "PP", "QPnotPP", "BB"
  bool expected = false;
  bool computed = false;
  TestReport report;
};

// Specs of every list-covered family with parameters <= bound, classified and
// compared with list_expectation. Deterministic canonical order.
std::vector<ListCheck> verify_theorem_lists(int bound);

std::vector<PairSpec> list_covered_specs(int bound);

}  // namespace realspher
