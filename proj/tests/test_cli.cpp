#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " RS_CLI " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const std::string kCatalog = RS_SOURCE_DIR "/data/catalog.json";

}  // namespace

TEST_CASE("classify exit codes") {
  Run r = run("classify upq R 2 1 3 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("PP\tyes") != std::string::npos);
  CHECK(r.out.find("BB\tyes") != std::string::npos);
  r = run("classify rank1 Iw_O");
  CHECK(r.code == 0);
  CHECK(r.out.find("QP\tyes") != std::string::npos);
  CHECK(r.out.find("PP\tyes") != std::string::npos);
  r = run("classify upq R 2 2 2 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("QP\tno") != std::string::npos);
  CHECK(run("classify riem named foo").code == 3);
  CHECK(run("classify compact E8").code == 3);
  CHECK(run("classify upq R 2 x").code == 2);
  CHECK(run("classify").code == 2);
  r = run("classify somn 3 1 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"bb\": \"yes\"") != std::string::npos);
}

TEST_CASE("orbit") {
  Run r = run("orbit E8 --min");
  CHECK(r.code == 0);
  CHECK(r.out == "240\n");
  r = run("orbit A3 1,0,0,0");
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(run("orbit B2 0,0").out == "1\n");
  CHECK(run("orbit A3 1,0").code == 2);
  CHECK(run("orbit Q3 1").code == 2);
  CHECK(run("orbit A3").code == 2);
}

TEST_CASE("verify") {
  Run a = run("verify", "REALSPHER_CATALOG=" + kCatalog);
  CHECK(a.code == 0);
  CHECK(a.out.rfind("id\tflag\tcomputed\texpected\toutcome\twitness\n", 0) == 0);
  CHECK(a.out.find("MISMATCH") == std::string::npos);
  Run b = run("verify --catalog " + kCatalog);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("verify --catalog " + kCatalog + " --format json").code == 0);

  std::string text = slurp(kCatalog);
  std::string tmp = "cli_injected.json";
  auto at = text.find("\"id\": \"I_R.p2q2\"");
  REQUIRE(at != std::string::npos);
  auto pp = text.find("\"pp\": \"no\"", at);
  std::string bad = text;
  bad.replace(pp, 10, "\"pp\": \"yes\"");
  spit(tmp, bad);
  Run m = run("verify --bounds 3 --catalog " + tmp);
  CHECK(m.code == 1);
  CHECK(m.out.find("I_R.p2q2\tPP\tno\tyes\tMISMATCH") != std::string::npos);

  std::string broken = text;
  broken.replace(broken.find("\"spec\": \"trivial\""), 17, "\"spec\": \"somn 1 3\"");
  spit(tmp, broken);
  CHECK(run("verify --catalog " + tmp).code == 2);
  CHECK(run("verify --catalog /nonexistent.json").code == 2);
  CHECK(run("verify --bounds 0").code == 2);
  std::remove(tmp.c_str());
}

TEST_CASE("enumerate and report") {
  Run r = run("enumerate somn --bounds 1");
  CHECK(r.code == 0);
  CHECK(r.out == "somn 1 1\n");
  CHECK(run("enumerate nope").code == 2);
  r = run("report");
  CHECK(r.code == 0);
  CHECK(r.out.find("exceptional/e626_so91") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("--help").out.find("upq F i j k l") != std::string::npos);
}
