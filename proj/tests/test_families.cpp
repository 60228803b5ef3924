#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "criteria.hpp"

using namespace realspher;

namespace {

const Kind kAllKinds[] = {Kind::Upq,  Kind::Glgl,  Kind::Somn, Kind::Sostar, Kind::Ugl,     Kind::Oustar,
                          Kind::Sp,   Kind::Rank1, Kind::Exc7, Kind::E6so91, Kind::Group,   Kind::Riem,
                          Kind::Nonke, Kind::Trivial, Kind::Abelian};

std::vector<PairSpec> everything(int bound) {
  std::vector<PairSpec> out;
  for (Kind k : kAllKinds)
    for (auto& s : enumerate(k, bound)) out.push_back(s);
  return out;
}

Errc error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return Errc::Io;
}

std::string pq(const char* head, int a, int b) {
  return std::string(head) + " " + std::to_string(a) + " " + std::to_string(b);
}

}  // namespace

TEST_CASE("print and parse are inverse on canonical specs") {
  auto all = everything(4);
  CHECK(all.size() > 500);
  std::set<PairSpec> seen;
  for (const auto& s : all) {
    CAPTURE(to_string(s));
    CHECK(parse_spec(to_string(s)) == s);
    CHECK(canonical(s) == s);
    CHECK(seen.insert(s).second);
  }
}

TEST_CASE("parse errors carry token and column") {
  try {
    parse_spec("upq R 2 x 3 0");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    std::string m = e.what();
    CHECK(m.find("token 4") != std::string::npos);
    CHECK(m.find("column 9") != std::string::npos);
  }
  CHECK(error_of("") == Errc::Parse);
  CHECK(error_of("frobnicate 1 2") == Errc::Parse);
  CHECK(error_of("upq R 1 2 3") == Errc::Parse);
  CHECK(error_of("upq R 1 2 3 0 7") == Errc::Parse);
  CHECK(error_of("upq Q 1 2 3 0") == Errc::Parse);
  CHECK(error_of("rank1 nosuchrow") == Errc::Parse);
  CHECK(error_of("somn 0 1") == Errc::InvalidSpec);
  CHECK(error_of("upq R 0 1 0 1") == Errc::InvalidSpec);
  CHECK(error_of("group o 1") == Errc::InvalidSpec);
}

TEST_CASE("aliases of row names") {
  CHECK(to_string(parse_spec("rank1 Iw_O")) == "rank1 I_O");
  CHECK(to_string(parse_spec("rank1 I_O^c")) == "rank1 I_O");
  CHECK(to_string(parse_spec("sostar 1 3")) == "sostar 3 1");
  CHECK(to_string(parse_spec("  glgl   R 1 2 ")) == "glgl R 2 1");
}

TEST_CASE("UPQ canonical form is invariant under the Klein four-group") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (i + k < 1 || j + l < 1) continue;
          std::array<std::array<int, 4>, 4> imgs = {{{i, j, k, l}, {j, i, l, k}, {k, l, i, j}, {l, k, j, i}}};
          std::set<std::string> forms;
          for (auto [a, b, c, d] : imgs) {
            PairSpec s = parse_spec("upq C " + std::to_string(a) + " " + std::to_string(b) + " " +
                                    std::to_string(c) + " " + std::to_string(d));
            forms.insert(to_string(s));
            CHECK(s.params[3] <= std::min({s.params[0], s.params[1], s.params[2]}));
          }
          CHECK(forms.size() == 1);
        }
}

TEST_CASE("enumeration counts") {
  // brute force: smallest image of each orbit, nondegenerate tuples only
  std::set<std::array<int, 4>> orbits;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
          if (i + k < 1 || j + l < 1) continue;
          std::array<std::array<int, 4>, 4> imgs = {{{i, j, k, l}, {j, i, l, k}, {k, l, i, j}, {l, k, j, i}}};
          orbits.insert(*std::min_element(imgs.begin(), imgs.end()));
        }
  CHECK(enumerate(Kind::Upq, 2, Field::R).size() == orbits.size());
  CHECK(orbits.size() == 21);
  auto somn = enumerate(Kind::Somn, 1);
  REQUIRE(somn.size() == 1);
  CHECK(to_string(somn[0]) == "somn 1 1");
  std::set<std::string> rows;
  for (const auto& s : enumerate(Kind::Rank1, 3)) rows.insert(s.tag);
  for (const auto& r : rank1_rows()) CHECK(rows.count(r.id) == 1);
  CHECK(rank1_rows().size() == 32);
  CHECK(rank1_table_ids().size() == 17);
  CHECK(exc7_rows().size() == 22);
  CHECK(nonke_rows().size() == 5);
}

TEST_CASE("family rules respect BB => PP => QP") {
  for (const auto& s : everything(6)) {
    CAPTURE(to_string(s));
    FamilyRule r = rule_of(s);
    if (r.bb == Tri::Yes) CHECK(r.pp == Tri::Yes);
    if (r.pp == Tri::Yes) CHECK(r.qp == Tri::Yes);
    if (r.qp == Tri::No) CHECK(r.pp == Tri::No);
    if (r.pp == Tri::No) CHECK(r.bb == Tri::No);
    CHECK_FALSE(r.rule_id.empty());
  }
}

TEST_CASE("rule examples") {
  auto r = rule_of(parse_spec("upq R 2 1 3 0"));
  CHECK(r.pp == Tri::Yes);
  r = rule_of(parse_spec("oustar 4 1"));
  CHECK(r.qp == Tri::Yes);
  CHECK(r.pp == Tri::No);
  for (int p = 1; p <= 3; ++p) CHECK(rule_of(parse_spec(pq("oustar", p, 1))).pp == Tri::Yes);
  CHECK(rule_of(parse_spec("oustar 3 2")).qp == Tri::No);
  CHECK(rule_of(parse_spec("sp R 1 1")).pp == Tri::Yes);
  CHECK(rule_of(parse_spec("sp R 2 1")).qp == Tri::No);
  CHECK(rule_of(parse_spec("upq R 2 2 2 1")).qp == Tri::No);
  CHECK(rule_of(parse_spec("glgl H 3 1")).pp == Tri::Yes);
  CHECK(rule_of(parse_spec("glgl H 3 2")).qp == Tri::No);
  CHECK(rule_of(parse_spec("sostar 4 1")).pp == Tri::Yes);
  CHECK(rule_of(parse_spec("sostar 2 2")).qp == Tri::No);
  CHECK(rule_of(parse_spec("ugl C 1")).pp == Tri::Yes);
  CHECK(rule_of(parse_spec("ugl C 2")).qp == Tri::No);
  for (int n = 2; n <= 6; ++n) {
    bool ok = n == 2 || n == 3;
    CHECK(rule_of(parse_spec("ugl R " + std::to_string(n))).pp == tri(ok));
  }
  CHECK(rule_of(parse_spec("riem named foo")).bb == Tri::Unknown);
}

TEST_CASE("so(m+n,C): rank bound, closed form and rule agree") {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      PairSpec s = parse_spec(pq("somn", m, n));
      CAPTURE(to_string(s));
      RestrictedDatum d = datum_of(s);
      bool rank_ok = d.rank_aH >= static_cast<int>(delta_n_minus(d).size());
      bool closed = m == 1 || n == 1 || (m == 2 && n == 2);
      CHECK(rank_ok == closed);
      CHECK(rule_of(s).qp == tri(closed));
    }
}

TEST_CASE("isomorphic presentations classify alike") {
  int pairs = 0;
  for (const auto& s : everything(5))
    for (const auto& t : isomorphic_reductions(s)) {
      CAPTURE(to_string(s));
      CAPTURE(to_string(t));
      Verdict a = classify(s), b = classify(t);
      CHECK(a.qp == b.qp);
      CHECK(a.pp == b.pp);
      ++pairs;
    }
  CHECK(pairs > 30);
  auto red = isomorphic_reductions(parse_spec("sp R 1 1"));
  CHECK(std::find(red.begin(), red.end(), parse_spec("upq R 2 1 2 0")) != red.end());
  red = isomorphic_reductions(parse_spec("sostar 2 2"));
  CHECK(std::find(red.begin(), red.end(), parse_spec("upq R 2 4 2 0")) != red.end());
  CHECK(isomorphic_reductions(parse_spec("somn 7 5")).empty());
}

TEST_CASE("c-duality preserves QP") {
  int pairs = 0, pp_split = 0;
  for (const auto& s : everything(6)) {
    auto d = c_dual_spec(s);
    if (!d) continue;
    CAPTURE(to_string(s));
    CAPTURE(to_string(*d));
    Verdict a = classify(s), b = classify(*d);
    CHECK(a.qp == b.qp);
    if (a.pp != b.pp) ++pp_split;
    ++pairs;
    // involution up to the recorded low-rank isomorphisms
    auto dd = c_dual_spec(*d);
    REQUIRE(dd.has_value());
    if (*dd != s) {
      auto red = isomorphic_reductions(s);
      CHECK(std::find(red.begin(), red.end(), *dd) != red.end());
    }
  }
  CHECK(pairs > 50);
  CHECK(pp_split > 0);
  for (const char* f : {"I_R", "I_C", "I_H"})
    for (int p = 1; p <= 4; ++p)
      for (int q = 2; q <= 4; ++q) {
        PairSpec s = parse_spec(pq((std::string("rank1 ") + f).c_str(), p, q));
        Verdict a = classify(s), b = classify(*c_dual_spec(s));
        CHECK(a.qp == b.qp);
        CHECK(a.pp == Tri::No);
        CHECK(b.pp == Tri::Yes);
      }
}

TEST_CASE("PP equals QP when the real ranks agree") {
  int n = 0;
  for (const auto& s : everything(6)) {
    auto inv = invariants_of(s);
    if (!inv || !inv->rank_equal) continue;
    CAPTURE(to_string(s));
    FamilyRule r = rule_of(s);
    CHECK(r.pp == r.qp);
    ++n;
  }
  CHECK(n > 100);
}

TEST_CASE("a QP rule implies the independence test passes") {
  for (const auto& s : everything(6)) {
    if (!has_datum(s) || rule_of(s).qp != Tri::Yes) continue;
    CAPTURE(to_string(s));
    CHECK(check_independence(datum_of(s)));
  }
}

TEST_CASE("rank-one count test selects the listed rows") {
  std::set<std::string> picked;
  for (const auto& r : rank1_rows())
    if (rank1_minus_count(r) <= 1) picked.insert(r.id);
  std::set<std::string> expect = {"I_R", "I_R^c", "I_C", "I_C^c", "I_H", "I_H^c", "I_O",
                                  "II",  "II^c",  "III", "III^c"};
  CHECK(picked == expect);
}

TEST_CASE("pair names") {
  CHECK(pair_name(parse_spec("rank1 I_O")) == "(f4(-20), so(8,1))");
  CHECK(pair_name(parse_spec("exc7 e626_so91")) == "(e6(-26), so(9,1)+R)");
  CHECK(pair_name(parse_spec("upq R 2 1 3 0")).find("o(3,3)") != std::string::npos);
}

TEST_CASE("invariants of aggregate-only families") {
  auto inv = invariants_of(parse_spec("upq R 2 1 3 0"));
  REQUIRE(inv);
  CHECK_FALSE(inv->has_roots);
  CHECK(inv->rank_aG == 3);
  CHECK(inv->rank_aH == 2);
  auto e = invariants_of(parse_spec("exc7 e66_sl6sl2"));
  REQUIRE(e);
  CHECK(e->nG == 36);
  CHECK(e->nH == 16);
  CHECK_THROWS_AS(datum_of(parse_spec("glgl R 3 1")), Error);
}
