#include "criteria.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace realspher {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    default: return "n/a";
  }
}

namespace {

std::string weight_list(const std::vector<Weight>& ws) {
  std::string out = "{";
  for (size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + format_weight(ws[i]);
  return out + "}";
}

}  // namespace

TestReport test_qp_rank(const RestrictedDatum& d) {
  TestReport r;
  r.test_id = "qp_rank";
  auto delta = delta_n_minus(d);
  r.count = static_cast<int>(delta.size());
  r.bound = d.rank_aH;
  auto dep = minimal_dependent_subset(delta);
  std::ostringstream os;
  os << "#Delta=" << r.count << (r.count > r.bound ? " > " : " <= ") << "rank " << r.bound;
  if (dep.empty()) {
    r.outcome = Outcome::Pass;
    os << "; independent";
  } else {
    r.outcome = Outcome::Fail;
    std::vector<Weight> sub;
    for (int i : dep) sub.push_back(delta[i]);
    os << "; dependent subset " << weight_list(sub);
  }
  r.witness = os.str();
  return r;
}

TestReport test_qp_ineq(const DerivedInvariants& inv) {
  TestReport r;
  r.test_id = "qp_ineq";
  if (!inv.rank_equal) {
    r.witness = "rank_aG " + std::to_string(inv.rank_aG) + " != rank_aH " + std::to_string(inv.rank_aH);
    return r;
  }
  int gap = inv.nG - inv.nH;
  int bound = inv.mG * inv.rank_aH;
  r.outcome = gap <= bound ? Outcome::Pass : Outcome::Fail;
  std::ostringstream os;
  os << "n(G)-n(H)=" << inv.nG << "-" << inv.nH << "=" << gap << ", m(G)*rank=" << inv.mG << "*"
     << inv.rank_aH << "=" << bound;
  r.witness = os.str();
  return r;
}

TestReport test_weyl_orbit(const RestrictedDatum& d, const RootSystem& rs) {
  TestReport r;
  r.test_id = "weyl_orbit";
  auto delta = delta_n_minus(d);
  const int limit = 2 * d.rank_aH;
  if (!is_classical(rs.spec.family) && !delta.empty()) {
    r.outcome = Outcome::Fail;
    r.witness = to_string(rs.spec) + " is exceptional: c=" + min_orbit_size(rs).get_str() + " > " +
                std::to_string(limit);
    return r;
  }
  auto rays = minimal_orbit_rays(rs);
  std::ostringstream os;
  r.outcome = Outcome::Pass;
  for (const auto& w : delta) {
    mpz_class n = orbit_size(rs, w);
    os << format_weight(w) << ":" << n.get_str();
    if (n > limit) {
      r.outcome = Outcome::Fail;
      os << ">" << limit;
    } else {
      // which fundamental ray, if any, holds the dominant representative
      Weight dom = dominant_representative(rs, w);
      std::vector<int> support;
      for (size_t i = 0; i < rs.simple_roots.size(); ++i)
        if (sgn(coroot_pairing(dom, rs.simple_roots[i])) != 0) support.push_back(static_cast<int>(i) + 1);
      bool on_ray = support.size() == 1 &&
                    std::find(rays.begin(), rays.end(), support[0]) != rays.end();
      os << (on_ray ? " on ray w" + std::to_string(support[0]) : " off minimal rays");
    }
    os << "; ";
  }
  os << "bound " << limit << " in " << to_string(rs.spec);
  r.witness = os.str();
  return r;
}

TestReport test_weyl_orbit(const RestrictedDatum& d) {
  if (!d.h_root_system) return {"weyl_orbit", Outcome::NotApplicable, "no irreducible h root system declared", 0, 0};
  return test_weyl_orbit(d, build(*d.h_root_system));
}

Verdict classify(const PairSpec& in) {
  PairSpec s = canonical(in);
  FamilyRule rule = rule_of(s);
  Verdict v;
  v.qp = rule.qp;
  v.pp = rule.pp;
  v.bb = rule.bb;
  v.provenance.push_back({"QP", rule.rule_id, rule.source});
  v.provenance.push_back({"PP", rule.rule_id, rule.source});
  v.provenance.push_back({"BB", rule.rule_id == "riem" || rule.rule_id == "group" ? rule.rule_id : "bb",
                          "complexification is a sum of trivial, abelian and strong Gelfand pairs"});

  if (has_datum(s)) {
    RestrictedDatum d = datum_of(s);
    v.tests.push_back(test_qp_rank(d));
    v.tests.push_back(test_weyl_orbit(d));
    v.tests.push_back(test_qp_ineq(derive(d)));
  } else if (auto inv = invariants_of(s)) {
    v.tests.push_back(test_qp_ineq(*inv));
  }

  for (const auto& t : v.tests) {
    if (t.outcome != Outcome::Fail) continue;
    if (v.qp == Tri::Yes)
      throw Error(Errc::ContradictionDetected,
                  to_string(s) + ": rule says QP but " + t.test_id + " fails (" + t.witness + ")");
    if (v.qp == Tri::Unknown) {
      v.qp = v.pp = v.bb = Tri::No;
      v.provenance.push_back({"QP", t.test_id, "necessary condition fails: " + t.witness});
    }
  }
  for (const auto& t : v.tests)
    v.provenance.push_back({"test", t.test_id, std::string(outcome_name(t.outcome)) + ": " + t.witness});

  bool broken = (v.bb == Tri::Yes && v.pp == Tri::No) || (v.pp == Tri::Yes && v.qp == Tri::No);
  if (broken) throw Error(Errc::ContradictionDetected, to_string(s) + ": BB => PP => QP violated");

  v.fm = v.pp == Tri::Yes;
  v.bm = v.bb == Tri::Yes;
  v.provenance.push_back({"FM", "fm", "finite multiplicities iff PP"});
  v.provenance.push_back({"BM", "bm", "bounded multiplicities iff BB"});
  return v;
}

// ---------------------------------------------------------------- lists

ListExpectation list_expectation(const PairSpec& in) {
  PairSpec s = canonical(in);
  const auto& P = s.params;
  ListExpectation e;
  std::vector<std::string> items;
  auto mark = [&](bool cond, const char* item) {
    if (cond) items.push_back(item);
    return cond;
  };
  switch (s.kind) {
    case Kind::Upq: {
      // g = U(i+j, k+l), h = U(i,k) + U(j,l); with l = 0 the second factor is compact
      int i = P[0], j = P[1], k = P[2], l = P[3];
      e.covered = true;
      bool eF = s.field == Field::R, cF = s.field == Field::C;
      if (l == 0) {
        bool pp = false;
        pp |= mark(i == 0, "D");
        pp |= mark(k == 0, "C");
        pp |= mark(k == 1, eF ? "E1" : cF ? "E2" : "E3");
        pp |= mark(j == 1, eF ? "F5" : cF ? "F4" : "H4");
        e.pp = pp;
        e.qp_not_pp = mark(i == 1 && j >= 2 && k >= 2, eF ? "I_R" : cF ? "I_C" : "I_H");
        if (eF) e.bb = j == 1 || i + k == 1 || (i + k == 2 && j == 2);
        if (cF) e.bb = j == 1 || i + k == 1;
        if (s.field == Field::H) e.bb = i + k == 1 && j == 1;
      }
      break;
    }
    case Kind::Glgl: {
      e.covered = true;
      const char* it = s.field == Field::R ? "F3" : s.field == Field::C ? "F1" : "H2";
      e.pp = mark(P[1] == 1, it);
      e.bb = e.pp && s.field != Field::H;
      break;
    }
    case Kind::Somn:
      e.covered = true;
      e.pp = mark(P[1] == 1 || (P[0] == 2 && P[1] == 2), "F2");
      e.bb = e.pp;
      break;
    case Kind::Sostar:
      e.covered = true;
      e.pp = mark(P[1] == 1, "H3");
      e.bb = P[0] == 1 && P[1] == 1;
      break;
    case Kind::Oustar: {
      // (o*(2n+2), u(n,1)); n = 2 is (su(3,1), u(2,1)), n = 3 is H1 by triality
      e.covered = true;
      int p = P[0], q = P[1];
      e.pp = mark(q == 1 && p <= 3, p == 1 ? "A+C" : p == 2 ? "F4" : "H1");
      e.qp_not_pp = mark(q == 1 && p >= 4, "III");
      e.bb = q == 1 && p <= 2;
      break;
    }
    case Kind::Rank1: {
      e.covered = true;
      std::string base = s.tag.substr(0, s.tag.find('^'));
      bool dual = s.tag != base;
      if (base == "I_R" || base == "I_C" || base == "I_H") {
        int p = P[0], q = P[1];
        const char* E = base == "I_R" ? "E1" : base == "I_C" ? "E2" : "E3";
        const char* F = base == "I_R" ? "F5" : base == "I_C" ? "F4" : "H4";
        if (dual) {
          e.pp = mark(true, E);
        } else {
          e.pp = mark(p == 0, E) | mark(q == 1, F);
          e.qp_not_pp = mark(p >= 1 && q >= 2, base.c_str());
        }
        if (base == "I_R") e.bb = q == 1 || (p == 0 && q == 2);
        if (base == "I_C") e.bb = q == 1;
      } else if (base == "I_O") {
        e.pp = mark(true, "E4");
      } else if (base == "II") {
        int m = P[0];
        if (dual) {
          e.pp = mark(true, "G2");
        } else {
          e.pp = mark(m == 1, "F5") | mark(m == 2, "F2");
          e.qp_not_pp = mark(m >= 3, "II");
        }
        e.bb = m <= 2;
      } else if (base == "III") {
        int m = P[0];
        if (dual) {
          e.pp = mark(true, "H1");
        } else {
          e.pp = mark(m == 1, "F4") | mark(m == 2, "H1");
          e.qp_not_pp = mark(m >= 3, "III");
        }
        e.bb = m == 1;
      }
      break;
    }
    case Kind::Exc7:
      e.covered = true;
      e.pp = mark(s.tag == "f420_so81", "E4") | mark(s.tag == "e626_so91", "H5");
      break;
    case Kind::E6so91:
      e.covered = true;
      e.pp = mark(true, "H5");
      break;
    case Kind::Group:
      e.covered = true;
      if (s.tag == "o") {
        e.pp = mark(true, "G2");
        e.bb = P[0] <= 3;
      } else if (s.tag == "compact") {
        e.pp = mark(true, "G1");
        e.bb = s.name == "A1";
      }
      break;
    case Kind::Riem:
      if (s.tag == "named") break;
      e.covered = true;
      e.pp = mark(true, "D");
      if (s.tag == "o") e.bb = P[1] == 1 || (P[0] == 2 && P[1] == 2);
      if (s.tag == "su") e.bb = P[1] == 1;
      if (s.tag == "sp") e.bb = P[0] == 1 && P[1] == 1;
      break;
    case Kind::Trivial:
      e.covered = true;
      e.pp = e.bb = mark(true, "A");
      break;
    case Kind::Abelian:
      e.covered = true;
      e.pp = e.bb = mark(true, "B");
      break;
    default:
      break;
  }
  for (size_t i = 0; i < items.size(); ++i) e.item += (i ? "," : "") + items[i];
  return e;
}

std::vector<PairSpec> list_covered_specs(int bound) {
  std::vector<PairSpec> out;
  for (Kind k : {Kind::Upq, Kind::Glgl, Kind::Somn, Kind::Sostar, Kind::Oustar, Kind::Rank1, Kind::Exc7,
                 Kind::E6so91, Kind::Group, Kind::Riem, Kind::Trivial, Kind::Abelian})
    for (auto& s : enumerate(k, bound))
      if (list_expectation(s).covered) out.push_back(s);
  for (const char* t : {"A1", "A2", "B2", "G2", "F4"})
    out.push_back(canonical(PairSpec{Kind::Group, Field::None, "compact", t, {}}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ListCheck> verify_theorem_lists(int bound) {
  std::vector<ListCheck> out;
  for (const auto& s : list_covered_specs(bound)) {
    ListExpectation e = list_expectation(s);
    Verdict v = classify(s);
    auto add = [&](const char* flag, bool expected, bool computed) {
      ListCheck c;
      c.spec = s;
      c.flag = flag;
      c.expected = expected;
      c.computed = computed;
      c.report.test_id = std::string("list_") + flag;
      c.report.outcome = expected == computed ? Outcome::Pass : Outcome::Fail;
      c.report.witness = pair_name(s) + (e.item.empty() ? "" : " [" + e.item + "]");
      out.push_back(std::move(c));
    };
    add("PP", e.pp, v.pp == Tri::Yes);
    add("QPnotPP", e.qp_not_pp, v.qp == Tri::Yes && v.pp == Tri::No);
    add("BB", e.bb, v.bb == Tri::Yes);
  }
  return out;
}

}  // namespace realspher
