#pragma once

// Catalog persistence (JSON) and the verification report stream.

#include <string>
#include <vector>

#include "criteria.hpp"

namespace realspher {

struct Expected {
  Tri qp = Tri::Unknown;
  Tri pp = Tri::Unknown;
  Tri bb = Tri::Unknown;
  bool operator==(const Expected&) const = default;
};

struct CatalogEntry {
  std::string id;
  PairSpec spec;
  Expected expected;
  std::string source;
  std::vector<PairSpec> aliases;
  bool operator==(const CatalogEntry&) const = default;
};

struct Catalog {
  int version = 1;
  std::vector<CatalogEntry> entries;
  bool operator==(const Catalog&) const = default;
};

// Throws Schema naming the offending entry. Spec strings must already be in
// canonical form so that dump(parse(x)) == x.
Catalog parse_catalog(const std::string& json_text);
std::string dump_catalog(const Catalog& c);  // indent 2, trailing newline
Catalog load_catalog(const std::string& path);  // Io on read failure

struct ReportLine {
  std::string id;
  std::string flag;
  std::string computed;
  std::string expected;
  std::string outcome;  // OK, MISMATCH, UNKNOWN
  std::string witness;
};

struct Report {
  std::vector<ReportLine> lines;
  int mismatches = 0;
  int unknowns = 0;
  void add(ReportLine l);
};

std::string to_tsv(const Report& r);
std::string to_json(const Report& r);

// Table regressions only (no catalog).
Report table_report(int bound);
// Catalog entries, aliases, theorem lists, reductions, c-duals and tables.
Report verify(const Catalog& c, int bound);

// Text rendering of a verdict (used by the classify command).
std::string format_verdict(const PairSpec& s, const Verdict& v);
std::string verdict_json(const PairSpec& s, const Verdict& v);

}  // namespace realspher
