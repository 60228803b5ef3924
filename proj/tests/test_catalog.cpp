#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "catalog.hpp"

using namespace realspher;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kShipped = RS_SOURCE_DIR "/data/catalog.json";

std::string schema_error(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Schema);
    return e.what();
  }
  FAIL("accepted: " << text);
  return {};
}

std::string one(const std::string& entry) { return R"({"version": 1, "entries": [)" + entry + "]}"; }

const char* kGood =
    R"({"id": "x", "spec": "somn 3 1", "expected": {"qp": "yes", "pp": "yes", "bb": "yes"}, "source": "s", "aliases": []})";

}  // namespace

TEST_CASE("shipped catalog round-trips byte for byte") {
  std::string text = slurp(kShipped);
  REQUIRE_FALSE(text.empty());
  Catalog c = parse_catalog(text);
  CHECK(c.entries.size() > 120);
  CHECK(dump_catalog(c) == text);
  CHECK(parse_catalog(dump_catalog(c)) == c);
  CHECK(load_catalog(kShipped) == c);
}

TEST_CASE("shipped catalog respects the chain and collapse") {
  Catalog c = load_catalog(kShipped);
  std::set<std::string> ids;
  for (const auto& e : c.entries) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    const auto& x = e.expected;
    if (x.bb == Tri::Yes) CHECK(x.pp == Tri::Yes);
    if (x.pp == Tri::Yes) CHECK(x.qp == Tri::Yes);
    Verdict v = classify(e.spec);
    auto inv = invariants_of(e.spec);
    if (inv && inv->rank_equal) CHECK(v.pp == v.qp);
  }
}

TEST_CASE("shipped catalog verifies clean and deterministically") {
  Catalog c = load_catalog(kShipped);
  Report a = verify(c, 6), b = verify(c, 6);
  CHECK(a.mismatches == 0);
  CHECK(to_tsv(a) == to_tsv(b));
  CHECK(to_json(a) == to_json(b));
  std::string tsv = to_tsv(a);
  CHECK(tsv.rfind("id\tflag\tcomputed\texpected\toutcome\twitness\n", 0) == 0);
  size_t lines = std::count(tsv.begin(), tsv.end(), '\n');
  CHECK(lines == a.lines.size() + 1);
  for (const auto& l : a.lines) {
    CHECK(l.id.find('\t') == std::string::npos);
    CHECK((l.outcome == "OK" || l.outcome == "UNKNOWN"));
  }
  auto j = nlohmann::json::parse(to_json(a));
  CHECK(j["lines"].size() == a.lines.size());
  CHECK(j["mismatches"] == 0);
}

TEST_CASE("an injected wrong verdict gives exactly one mismatch") {
  Catalog c = load_catalog(kShipped);
  bool found = false;
  for (auto& e : c.entries)
    if (e.id == "I_R.p2q2") {
      e.expected.pp = Tri::Yes;
      found = true;
    }
  REQUIRE(found);
  Report r = verify(c, 3);
  CHECK(r.mismatches == 1);
  for (const auto& l : r.lines)
    if (l.outcome == "MISMATCH") {
      CHECK(l.id == "I_R.p2q2");
      CHECK(l.flag == "PP");
      CHECK(l.computed == "no");
      CHECK(l.expected == "yes");
    }
}

TEST_CASE("schema violations name the entry") {
  CHECK_NOTHROW(parse_catalog(one(kGood)));
  CHECK(schema_error("[]").find("top level") != std::string::npos);
  CHECK(schema_error("{").find("JSON") != std::string::npos);
  CHECK(schema_error(R"({"version": 2, "entries": []})").find("version") != std::string::npos);
  CHECK(schema_error(R"({"version": 1})").find("entries") != std::string::npos);
  CHECK(schema_error(R"({"version": 1, "entries": [], "x": 1})").find("unknown field") != std::string::npos);
  std::string g = kGood;
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = g;
    s.replace(s.find(from), from.size(), to);
    return one(s);
  };
  CHECK(schema_error(one(g + ", " + g)).find("duplicate id") != std::string::npos);
  std::string m = schema_error(with("somn 3 1", "somn 1 3"));
  CHECK(m.find("entry 'x'") != std::string::npos);
  CHECK(m.find("somn 3 1") != std::string::npos);
  CHECK(schema_error(with("somn 3 1", "somn 3 x")).find("entry 'x'") != std::string::npos);
  CHECK(schema_error(with(R"("qp": "yes")", R"("qp": "no")")).find("BB => PP => QP") != std::string::npos);
  CHECK(schema_error(with(R"("qp": "yes")", R"("qp": "maybe")")).find("entry 'x'") != std::string::npos);
  CHECK(schema_error(with(R"("source": "s", )", "")).find("source") != std::string::npos);
  CHECK(schema_error(with(R"("aliases": [])", R"("aliases": ["somn 1 3"])")).find("entry 'x'") != std::string::npos);
  CHECK(schema_error(with(R"("id": "x", )", R"("id": "x", "extra": 1, )")).find("extra") != std::string::npos);
}

TEST_CASE("missing catalog file") {
  try {
    load_catalog("/nonexistent/catalog.json");
    FAIL("loaded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
}

TEST_CASE("table report") {
  Report r = table_report(4);
  CHECK(r.mismatches == 0);
  int t1 = 0, t41 = 0, t51 = 0, t71 = 0;
  for (const auto& l : r.lines) {
    if (l.id.rfind("minorbit/", 0) == 0) ++t1;
    if (l.id.rfind("cnan/", 0) == 0) ++t41;
    if (l.id.rfind("rankone/", 0) == 0) ++t51;
    if (l.id.rfind("exceptional/", 0) == 0) ++t71;
    if (l.id == "exceptional/e626_so91") CHECK(l.witness.find("recomputed 16=16, printed 16>8") != std::string::npos);
  }
  CHECK(t1 == 31);
  CHECK(t41 == 4 * 4 + 3);
  CHECK(t51 == 17);
  CHECK(t71 == 22);
}

TEST_CASE("verdict formatting") {
  PairSpec s = parse_spec("upq R 2 1 3 0");
  Verdict v = classify(s);
  std::string text = format_verdict(s, v);
  CHECK(text.find("QP\tyes\n") != std::string::npos);
  CHECK(text.find("BB\tyes\n") != std::string::npos);
  auto j = nlohmann::json::parse(verdict_json(s, v));
  CHECK(j["spec"] == "upq R 2 1 3 0");
  CHECK(j["pp"] == "yes");
  CHECK(j["provenance"].size() == v.provenance.size());
}
