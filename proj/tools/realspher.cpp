// realspher command line. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "realspher/realspher.h"

#ifndef REALSPHER_DEFAULT_CATALOG
#define REALSPHER_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kUnknown = 3 };

const char* kGrammar = R"(Pair spec grammar (whitespace separated, family keyword first):
  upq F i j k l        glgl F p q          somn m n           sostar p q
  oustar p q           sp F p q            ugl V n            e6so91
  rank1 ROW [p q | m]  exc7 ROW            nonke ROW
  group o|su|sp n      group f4            group compact TYPE  group rank K
  riem o|su|sp p q     riem named NAME     trivial  abelian   compact NAME
  F in {R,C,H}; V in {C,H,R,spR,sostar}.
Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 undecidable.)";

// Input problems map to 2; a classifier contradiction is a mismatch.
int report_error(rs_status s) {
  std::cerr << "error: " << rs_status_name(s) << ": " << rs_last_error() << "\n";
  if (s == RS_CONTRADICTION) return kMismatch;
  return kInput;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rs_string_free(s);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& t : v) s += (s.empty() ? "" : " ") + t;
  return s;
}

rs_format fmt_of(const std::string& f) { return f == "json" ? RS_FORMAT_JSON : RS_FORMAT_TSV; }

std::string catalog_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("REALSPHER_CATALOG"); env && *env) return env;
  return REALSPHER_DEFAULT_CATALOG;
}

int emit_report(rs_report* r, const std::string& fmt) {
  char* text = nullptr;
  rs_status s = rs_report_format(r, fmt_of(fmt), &text);
  if (s != RS_OK) {
    rs_report_free(r);
    return report_error(s);
  }
  std::cout << take(text);
  int mism = 0;
  rs_report_counts(r, nullptr, &mism, nullptr);
  rs_report_free(r);
  return mism ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real sphericity and bounded multiplicity of symmetric pairs"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string format = "tsv";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "Classify one pair spec");
  std::vector<std::string> spec_tokens;
  classify->add_option("spec", spec_tokens, "Pair spec tokens")->required()->expected(1, -1);
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "Run every regression suite against a catalog");
  std::string catalog;
  int bounds = 6;
  verify->add_option("--catalog", catalog, "Catalog JSON (default $REALSPHER_CATALOG)");
  verify->add_option("--bounds", bounds, "Parameter bound for enumerated families")->check(CLI::Range(1, 64));
  add_format(verify);

  auto* orbit = app.add_subcommand("orbit", "W-orbit size of a weight, or c(Delta) with --min");
  std::string system, weight;
  bool min = false;
  orbit->add_option("system", system, "Root system, e.g. A3, BC2, E8")->required();
  orbit->add_option("weight", weight, "Comma separated rational coordinates");
  orbit->add_flag("--min", min, "Print the minimal nonzero orbit size");

  auto* enumerate = app.add_subcommand("enumerate", "List canonical specs of a family");
  std::string family, field;
  int ebounds = 4;
  enumerate->add_option("family", family, "Family keyword")->required();
  enumerate->add_option("--bounds", ebounds, "Largest integer parameter")->check(CLI::Range(0, 64));
  enumerate->add_option("--field", field, "Restrict to one field letter or ugl variant");

  auto* report = app.add_subcommand("report", "Reproduce the fixed tables");
  report->add_option("--bounds", bounds, "Parameter bound")->check(CLI::Range(1, 64));
  add_format(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  if (*classify) {
    rs_verdict* v = nullptr;
    rs_status s = rs_classify(join(spec_tokens).c_str(), &v);
    if (s != RS_OK) return report_error(s);
    char* text = nullptr;
    s = rs_verdict_format(v, fmt_of(format), &text);
    rs_tri qp, pp, bb;
    rs_verdict_flags(v, &qp, &pp, &bb);
    rs_verdict_free(v);
    if (s != RS_OK) return report_error(s);
    std::cout << take(text);
    return (qp == RS_UNKNOWN || pp == RS_UNKNOWN || bb == RS_UNKNOWN) ? kUnknown : kOk;
  }

  if (*verify) {
    rs_catalog* c = nullptr;
    rs_status s = rs_catalog_load(catalog_path(catalog).c_str(), &c);
    if (s != RS_OK) return report_error(s);
    rs_report* r = nullptr;
    s = rs_verify(c, bounds, &r);
    rs_catalog_free(c);
    if (s != RS_OK) return report_error(s);
    return emit_report(r, format);
  }

  if (*orbit) {
    rs_rootsys* rs = nullptr;
    rs_status s = rs_rootsys_new(system.c_str(), &rs);
    if (s != RS_OK) return report_error(s);
    char* out = nullptr;
    if (min)
      s = rs_rootsys_min_orbit(rs, &out);
    else if (weight.empty()) {
      rs_rootsys_free(rs);
      std::cerr << "error: orbit needs a weight or --min\n";
      return kInput;
    } else
      s = rs_rootsys_orbit_size(rs, weight.c_str(), &out);
    rs_rootsys_free(rs);
    if (s != RS_OK) return report_error(s);
    std::cout << take(out) << "\n";
    return kOk;
  }

  if (*enumerate) {
    char* out = nullptr;
    rs_status s = rs_enumerate(family.c_str(), ebounds, field.empty() ? nullptr : field.c_str(), &out);
    if (s != RS_OK) return report_error(s);
    std::cout << take(out);
    return kOk;
  }

  if (*report) {
    rs_report* r = nullptr;
    rs_status s = rs_table_report(bounds, &r);
    if (s != RS_OK) return report_error(s);
    return emit_report(r, format);
  }
  return kInput;
}
