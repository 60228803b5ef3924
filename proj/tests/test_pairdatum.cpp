#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "families.hpp"

using namespace realspher;

namespace {

Weight w2(int a, int b) { return {Q(a), Q(b)}; }

RestrictedDatum mk(int rank, std::vector<MultRoot> roots, int rank_aG = -1) {
  RestrictedDatum d;
  d.rank_aH = rank;
  d.rank_aG = rank_aG < 0 ? rank : rank_aG;
  d.positive_roots = std::move(roots);
  return d;
}

Errc code_of(const RestrictedDatum& d) {
  try {
    validate(d);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::Io;
}

}  // namespace

TEST_CASE("independence examples") {
  CHECK(check_independence(mk(2, {{w2(1, 0), 0, 1}, {w2(0, 1), 0, 1}})));
  CHECK(check_independence(mk(2, {{w2(1, 1), 0, 1}, {w2(1, -1), 0, 1}})));
  auto eso = mk(2, {{w2(2, 0), 0, 1}, {w2(0, 2), 0, 1}, {w2(1, 1), 0, 1}, {w2(1, -1), 0, 1}});
  CHECK_FALSE(check_independence(eso));
  auto three = mk(2, {{w2(1, 1), 0, 1}, {w2(1, -1), 0, 1}, {w2(1, 0), 0, 1}});
  CHECK(delta_n_minus(three).size() == 3);
  CHECK_FALSE(check_independence(three));
  // roots with m- = 0 do not enter
  CHECK(check_independence(mk(2, {{w2(1, 1), 3, 0}, {w2(1, -1), 0, 1}, {w2(1, 0), 0, 2}})));
}

TEST_CASE("validate rejects broken data") {
  CHECK(code_of(mk(2, {{w2(0, 0), 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{w2(1, 0), 0, 0}, {w2(0, 1), 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{w2(1, 0), -1, 2}, {w2(0, 1), 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{w2(-1, 0), 1, 0}, {w2(0, 1), 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{w2(1, 0), 1, 0}, {w2(1, 0), 0, 1}, {w2(0, 1), 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{{Q(1)}, 1, 0}})) == Errc::InvalidDatum);
  CHECK(code_of(mk(2, {{w2(1, 0), 1, 0}})) == Errc::InvalidDatum);  // does not span
  CHECK(code_of(mk(2, {{w2(1, 0), 1, 0}, {w2(0, 1), 1, 0}}, 1)) == Errc::InvalidDatum);
  CHECK_NOTHROW(validate(mk(2, {{w2(1, 0), 1, 0}, {w2(0, 1), 1, 0}})));
}

TEST_CASE("derived invariants of a rank-equal datum") {
  auto d = mk(2, {{w2(1, -1), 2, 1}, {w2(1, 1), 0, 3}, {w2(1, 0), 1, 0}, {w2(0, 1), 1, 1}});
  DerivedInvariants inv = derive(d);
  CHECK(inv.rank_equal);
  CHECK(inv.delta_n_minus_count == 3);
  CHECK(inv.dim_n_minus == 5);
  CHECK(inv.nH == 4);
  CHECK(inv.nG == 9);
  CHECK(inv.nG - inv.nH == inv.dim_n_minus);
  CHECK(inv.mG == 3);
  CHECK(inv.delta_n_minus_count <= inv.dim_n_minus);
}

TEST_CASE("rank-deficient data need the a_G aggregates") {
  auto d = mk(1, {{{Q(1)}, 1, 1}}, 2);
  CHECK_THROWS_AS(derive(d), Error);
  try {
    derive(d);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompleteDatum);
  }
  d.mG_value = 2;
  d.nG_value = 5;
  DerivedInvariants inv = derive(d);
  CHECK_FALSE(inv.rank_equal);
  CHECK(inv.nG == 5);
  CHECK(inv.mG == 2);
}

TEST_CASE("c_dual keeps the root content") {
  auto d = mk(2, {{w2(1, -1), 2, 1}, {w2(1, 1), 0, 3}, {w2(1, 0), 1, 0}, {w2(0, 1), 1, 1}});
  d.name = "base";
  RestrictedDatum c = c_dual(d, 3, 4, 12, "dual");
  CHECK(c.positive_roots == d.positive_roots);
  CHECK(c.rank_aG == 3);
  RestrictedDatum back = c_dual(c, d.rank_aG, d.mG_value, d.nG_value, d.name);
  CHECK(back == d);
  DerivedInvariants a = derive(d), b = derive(c);
  CHECK(a.delta_n_minus == b.delta_n_minus);
  CHECK(a.dim_n_minus == b.dim_n_minus);
  CHECK(a.nH == b.nH);
}

TEST_CASE("format_weight") {
  CHECK(format_weight(w2(1, -1)) == "e1-e2");
  CHECK(format_weight(w2(2, 0)) == "2e1");
  CHECK(format_weight(w2(0, 0)) == "0");
  CHECK(format_weight({Q(1, 2), Q(-1, 2)}) == "1/2e1-1/2e2");
}

TEST_CASE("generated data from the tables") {
  SUBCASE("o*(4n) with gl(n,H), n = 3") {
    auto d = datum_of(parse_spec("ugl sostar 3"));
    CHECK(delta_n_minus(d).size() == 6);
  }
  SUBCASE("(C_n, A_n) count n(n+1)/2") {
    for (const char* v : {"C", "H", "spR", "sostar"})
      for (int n = 1; n <= 6; ++n) {
        auto d = datum_of(parse_spec(std::string("ugl ") + v + " " + std::to_string(n)));
        CHECK(static_cast<int>(delta_n_minus(d).size()) == n * (n + 1) / 2);
      }
  }
  SUBCASE("f4(-20) / so(8,1) multiplicities") {
    auto d = datum_of(parse_spec("rank1 I_O"));
    REQUIRE(d.positive_roots.size() == 2);
    for (const auto& r : d.positive_roots) {
      if (r.weight == Weight{Q(1)}) {
        CHECK(r.m_plus == 0);
        CHECK(r.m_minus == 8);
      } else {
        CHECK(r.weight == Weight{Q(2)});
        CHECK(r.m_plus == 7);
        CHECK(r.m_minus == 0);
      }
    }
  }
  SUBCASE("so(2p+2q,C) with so(2p,C)+so(2q,C)") {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= p; ++q) {
        auto d = datum_of(parse_spec("somn " + std::to_string(2 * p) + " " + std::to_string(2 * q)));
        CHECK(d.rank_aH == p + q);
        CHECK(static_cast<int>(delta_n_minus(d).size()) == 2 * p * q);
      }
  }
  SUBCASE("e6(-14) / so(8,2)") {
    auto d = datum_of(parse_spec("exc7 e614_so82"));
    CHECK(delta_n_minus(d).size() == 4);
    CHECK_FALSE(check_independence(d));
  }
}

namespace {

// rank-one real forms: n(G) of so(N,1), su(N,1), sp(N,1)
int rank_one_n(int d, int N) { return d * (N - 1) + (d - 1); }

}  // namespace

TEST_CASE("n(G) of the rank-equal rank-one rows") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      int d = 1;
      for (const char* id : {"I_R^c", "I_C^c", "I_H^c"}) {
        auto s = parse_spec(std::string("rank1 ") + id + " " + std::to_string(p) + " " + std::to_string(q));
        DerivedInvariants inv = derive(datum_of(s));
        CAPTURE(to_string(s));
        CHECK(inv.rank_equal);
        CHECK(inv.nG == rank_one_n(d, p + q + 1));
        d *= 2;
      }
    }
}

TEST_CASE("every generated datum is valid and closed under its h Weyl group") {
  std::vector<PairSpec> specs;
  for (Kind k : {Kind::Ugl, Kind::Rank1, Kind::Oustar, Kind::Somn, Kind::Sostar, Kind::Sp, Kind::Exc7,
                 Kind::E6so91, Kind::Group, Kind::Riem, Kind::Nonke})
    for (auto& s : enumerate(k, 4))
      if (has_datum(s)) specs.push_back(s);
  CHECK(specs.size() > 100);
  int closed_checked = 0;
  for (const auto& s : specs) {
    CAPTURE(to_string(s));
    RestrictedDatum d = datum_of(s);
    CHECK_NOTHROW(validate(d));
    DerivedInvariants inv = derive(d);
    CHECK(inv.delta_n_minus_count <= inv.dim_n_minus);
    if (inv.rank_equal) CHECK(inv.nG - inv.nH == inv.dim_n_minus);
    if (check_independence(d)) CHECK(inv.delta_n_minus_count <= d.rank_aH);
    if (!d.h_root_system) continue;
    RootSystem h = build(*d.h_root_system);
    if (h.ambient_dim != d.rank_aH) continue;
    std::set<Weight> plus;
    for (const auto& r : d.positive_roots)
      if (r.m_plus > 0) {
        plus.insert(r.weight);
        plus.insert(scale(Q(-1), r.weight));
      }
    for (const auto& w : plus)
      for (const auto& a : h.simple_roots) CHECK(plus.count(reflect(w, a)) == 1);
    ++closed_checked;
  }
  CHECK(closed_checked > 20);
}
