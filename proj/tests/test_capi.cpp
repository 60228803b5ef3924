#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "realspher/realspher.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rs_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("root systems through the C API") {
  rs_rootsys* rs = nullptr;
  REQUIRE(rs_rootsys_new("E8", &rs) == RS_OK);
  char* s = nullptr;
  REQUIRE(rs_rootsys_min_orbit(rs, &s) == RS_OK);
  CHECK(take(s) == "240");
  REQUIRE(rs_rootsys_weyl_order(rs, &s) == RS_OK);
  CHECK(take(s) == "696729600");
  int rank = 0, dim = 0;
  CHECK(rs_rootsys_rank(rs, &rank) == RS_OK);
  CHECK(rs_rootsys_ambient_dim(rs, &dim) == RS_OK);
  CHECK(rank == 8);
  CHECK(dim == 8);
  rs_rootsys_free(rs);

  REQUIRE(rs_rootsys_new("A3", &rs) == RS_OK);
  REQUIRE(rs_rootsys_orbit_size(rs, "1,0,0,0", &s) == RS_OK);
  CHECK(take(s) == "4");
  REQUIRE(rs_rootsys_orbit_size(rs, "1/2, 1/2, -1/2, -1/2", &s) == RS_OK);
  CHECK(take(s) == "6");
  CHECK(rs_rootsys_orbit_size(rs, "1,0", &s) == RS_AMBIENT_MISMATCH);
  CHECK(std::string(rs_last_error()).find("coordinates") != std::string::npos);
  CHECK(rs_rootsys_orbit_size(rs, "1,x,0,0", &s) == RS_PARSE);
  CHECK(rs_rootsys_orbit_size(rs, "1,,0,0", &s) == RS_PARSE);
  CHECK(rs_rootsys_orbit_size(rs, "1/0,0,0,0", &s) == RS_PARSE);
  REQUIRE(rs_rootsys_minimal_rays(rs, &s) == RS_OK);
  CHECK(take(s) == "1,2,3");
  rs_rootsys_free(rs);

  REQUIRE(rs_rootsys_new("B2", &rs) == RS_OK);
  REQUIRE(rs_rootsys_orbit_size(rs, "0,0", &s) == RS_OK);
  CHECK(take(s) == "1");
  rs_rootsys_free(rs);

  rs = reinterpret_cast<rs_rootsys*>(0x1);
  CHECK(rs_rootsys_new("Q3", &rs) != RS_OK);
  CHECK(rs == nullptr);
  CHECK(std::string(rs_last_error()).size() > 0);
}

TEST_CASE("null arguments") {
  char* s = nullptr;
  CHECK(rs_rootsys_new(nullptr, nullptr) == RS_ARGUMENT);
  CHECK(rs_classify(nullptr, nullptr) == RS_ARGUMENT);
  CHECK(rs_spec_canonical("somn 1 1", nullptr) == RS_ARGUMENT);
  CHECK(rs_report_format(nullptr, RS_FORMAT_TSV, &s) == RS_ARGUMENT);
  CHECK(rs_verify(nullptr, 3, nullptr) == RS_ARGUMENT);
  CHECK(rs_table_report(0, nullptr) == RS_ARGUMENT);
  rs_rootsys_free(nullptr);
  rs_verdict_free(nullptr);
  rs_catalog_free(nullptr);
  rs_report_free(nullptr);
  rs_string_free(nullptr);
}

TEST_CASE("classify and canonical specs") {
  char* s = nullptr;
  REQUIRE(rs_spec_canonical("rank1 Iw_O", &s) == RS_OK);
  CHECK(take(s) == "rank1 I_O");
  CHECK(rs_spec_canonical("upq R 2 x", &s) == RS_PARSE);
  CHECK(std::string(rs_last_error()).find("column") != std::string::npos);
  CHECK(rs_spec_canonical("somn 0 0", &s) == RS_INVALID_SPEC);

  rs_verdict* v = nullptr;
  REQUIRE(rs_classify("upq R 2 2 2 1", &v) == RS_OK);
  rs_tri qp, pp, bb;
  REQUIRE(rs_verdict_flags(v, &qp, &pp, &bb) == RS_OK);
  CHECK(qp == RS_NO);
  CHECK(pp == RS_NO);
  CHECK(bb == RS_NO);
  REQUIRE(rs_verdict_format(v, RS_FORMAT_JSON, &s) == RS_OK);
  CHECK(take(s).find("\"qp\": \"no\"") != std::string::npos);
  CHECK(rs_verdict_format(v, static_cast<rs_format>(9), &s) == RS_ARGUMENT);
  rs_verdict_free(v);

  REQUIRE(rs_classify("rank1 I_R 1 2", &v) == RS_OK);
  rs_verdict_flags(v, &qp, &pp, nullptr);
  CHECK(qp == RS_YES);
  CHECK(pp == RS_NO);
  rs_verdict_free(v);

  REQUIRE(rs_classify("riem named e7(-25)", &v) == RS_OK);
  rs_verdict_flags(v, nullptr, nullptr, &bb);
  CHECK(bb == RS_UNKNOWN);
  rs_verdict_free(v);
}

TEST_CASE("enumerate") {
  char* s = nullptr;
  REQUIRE(rs_enumerate("somn", 1, nullptr, &s) == RS_OK);
  CHECK(take(s) == "somn 1 1\n");
  REQUIRE(rs_enumerate("ugl", 2, "H", &s) == RS_OK);
  CHECK(take(s) == "ugl H 1\nugl H 2\n");
  REQUIRE(rs_enumerate("upq", 2, "R", &s) == RS_OK);
  std::string upq = take(s);
  CHECK(std::count(upq.begin(), upq.end(), '\n') == 21);
  CHECK(rs_enumerate("nope", 2, nullptr, &s) == RS_PARSE);
  CHECK(rs_enumerate("upq", -1, nullptr, &s) == RS_ARGUMENT);
}

TEST_CASE("catalog and reports") {
  const char* text =
      R"({"version": 1, "entries": [{"id": "f2", "spec": "somn 3 1", "expected": {"qp": "yes", "pp": "yes", "bb": "yes"}, "source": "F2", "aliases": ["somn 3 1"]}]})";
  rs_catalog* c = nullptr;
  REQUIRE(rs_catalog_parse(text, &c) == RS_OK);
  int n = 0;
  CHECK(rs_catalog_size(c, &n) == RS_OK);
  CHECK(n == 1);
  char* s = nullptr;
  REQUIRE(rs_catalog_dump(c, &s) == RS_OK);
  std::string dumped = take(s);
  rs_catalog* c2 = nullptr;
  REQUIRE(rs_catalog_parse(dumped.c_str(), &c2) == RS_OK);
  REQUIRE(rs_catalog_dump(c2, &s) == RS_OK);
  CHECK(take(s) == dumped);
  rs_catalog_free(c2);

  rs_report* r = nullptr;
  REQUIRE(rs_verify(c, 2, &r) == RS_OK);
  int lines = 0, mism = -1, unk = -1;
  rs_report_counts(r, &lines, &mism, &unk);
  CHECK(lines > 10);
  CHECK(mism == 0);
  REQUIRE(rs_report_format(r, RS_FORMAT_TSV, &s) == RS_OK);
  CHECK(take(s).rfind("id\tflag\tcomputed\texpected\toutcome\twitness\n", 0) == 0);
  rs_report_free(r);
  rs_catalog_free(c);

  CHECK(rs_catalog_parse("{\"version\": 1, \"entries\": [{}]}", &c) == RS_SCHEMA);
  CHECK(c == nullptr);
  CHECK(rs_catalog_load("/nonexistent.json", &c) == RS_IO);

  REQUIRE(rs_table_report(3, &r) == RS_OK);
  rs_report_counts(r, nullptr, &mism, nullptr);
  CHECK(mism == 0);
  rs_report_free(r);
}

TEST_CASE("status names") {
  CHECK(std::string(rs_status_name(RS_OK)) == "ok");
  CHECK(std::string(rs_status_name(RS_SCHEMA)) == "Schema");
  CHECK(std::string(rs_status_name(RS_INVALID_SPEC)) == "InvalidSpec");
  CHECK(std::string(rs_status_name(RS_IO)) == "Io");
  CHECK(std::string(rs_status_name(RS_ARGUMENT)) == "argument");
  CHECK(std::string(rs_version()) == "0.1.0");
}
