#include "catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace realspher {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  throw Error(Errc::Schema, where + ": " + msg);
}

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string str_field(const ojson& obj, const char* key, const std::string& where) {
  const ojson& v = field(obj, key, where);
  if (!v.is_string()) schema(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

PairSpec canonical_spec_text(const std::string& text, const std::string& where) {
  PairSpec s;
  try {
    s = parse_spec(text);
  } catch (const Error& e) {
    schema(where, std::string("bad spec '") + text + "': " + e.what());
  }
  if (to_string(s) != text) schema(where, "spec '" + text + "' is not canonical, write '" + to_string(s) + "'");
  return s;
}

void only_keys(const ojson& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known |= it.key() == k;
    if (!known) schema(where, "unknown field '" + it.key() + "'");
  }
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
  ojson root;
  try {
    root = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Schema, std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) schema("catalog", "top level must be an object");
  only_keys(root, {"version", "entries"}, "catalog");
  const ojson& ver = field(root, "version", "catalog");
  if (!ver.is_number_integer() || ver.get<int>() != 1) schema("catalog", "version must be 1");
  const ojson& arr = field(root, "entries", "catalog");
  if (!arr.is_array()) schema("catalog", "entries must be an array");
  Catalog c;
  std::set<std::string> ids;
  size_t idx = 0;
  for (const auto& e : arr) {
    std::string where = "entry #" + std::to_string(idx++);
    if (!e.is_object()) schema(where, "must be an object");
    CatalogEntry ce;
    ce.id = str_field(e, "id", where);
    where = "entry '" + ce.id + "'";
    if (ce.id.empty()) schema(where, "empty id");
    if (!ids.insert(ce.id).second) schema(where, "duplicate id");
    only_keys(e, {"id", "spec", "expected", "source", "aliases"}, where);
    ce.spec = canonical_spec_text(str_field(e, "spec", where), where);
    const ojson& ex = field(e, "expected", where);
    if (!ex.is_object()) schema(where, "expected must be an object");
    only_keys(ex, {"qp", "pp", "bb"}, where);
    try {
      ce.expected.qp = parse_tri(str_field(ex, "qp", where));
      ce.expected.pp = parse_tri(str_field(ex, "pp", where));
      ce.expected.bb = parse_tri(str_field(ex, "bb", where));
    } catch (const Error& err) {
      if (err.code() == Errc::Schema && std::string(err.what()).rfind("entry", 0) == 0) throw;
      schema(where, err.what());
    }
    const Expected& x = ce.expected;
    if ((x.bb == Tri::Yes && x.pp == Tri::No) || (x.pp == Tri::Yes && x.qp == Tri::No))
      schema(where, "expected verdicts break BB => PP => QP");
    ce.source = str_field(e, "source", where);
    const ojson& al = field(e, "aliases", where);
    if (!al.is_array()) schema(where, "aliases must be an array");
    for (const auto& a : al) {
      if (!a.is_string()) schema(where, "aliases must be strings");
      ce.aliases.push_back(canonical_spec_text(a.get<std::string>(), where));
    }
    c.entries.push_back(std::move(ce));
  }
  return c;
}

std::string dump_catalog(const Catalog& c) {
  ojson root;
  root["version"] = c.version;
  root["entries"] = ojson::array();
  for (const auto& e : c.entries) {
    ojson j;
    j["id"] = e.id;
    j["spec"] = to_string(e.spec);
    j["expected"]["qp"] = tri_name(e.expected.qp);
    j["expected"]["pp"] = tri_name(e.expected.pp);
    j["expected"]["bb"] = tri_name(e.expected.bb);
    j["source"] = e.source;
    j["aliases"] = ojson::array();
    for (const auto& a : e.aliases) j["aliases"].push_back(to_string(a));
    root["entries"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read catalog '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

// ---------------------------------------------------------------- reports

void Report::add(ReportLine l) {
  if (l.outcome == "MISMATCH") ++mismatches;
  if (l.outcome == "UNKNOWN") ++unknowns;
  lines.push_back(std::move(l));
}

namespace {

std::string clean(std::string s) {
  for (auto& ch : s)
    if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

std::string judge(const std::string& computed, const std::string& expected) {
  if (computed == "unknown" || expected == "unknown") return computed == expected ? "OK" : "UNKNOWN";
  return computed == expected ? "OK" : "MISMATCH";
}

void compare(Report& r, const std::string& id, const std::string& flag, const std::string& computed,
             const std::string& expected, const std::string& witness) {
  r.add({id, flag, computed, expected, judge(computed, expected), witness});
}

std::string yn(bool b) { return b ? "yes" : "no"; }

struct MinOrbitRow {
  Family f;
  int lo, hi;
  int (*c)(int);
};

void min_orbit_suite(Report& r) {
  const MinOrbitRow rows[] = {
      {Family::A, 1, 8, [](int n) { return n + 1; }}, {Family::B, 2, 8, [](int n) { return 2 * n; }},
      {Family::C, 3, 8, [](int n) { return 2 * n; }}, {Family::D, 4, 8, [](int n) { return 2 * n; }},
      {Family::E, 6, 6, [](int) { return 27; }},      {Family::E, 7, 7, [](int) { return 56; }},
      {Family::E, 8, 8, [](int) { return 240; }},     {Family::F, 4, 4, [](int) { return 24; }},
      {Family::G, 2, 2, [](int) { return 6; }},
  };
  for (const auto& row : rows)
    for (int n = row.lo; n <= row.hi; ++n) {
      RootSystemSpec spec{row.f, n};
      RootSystem rs = build(spec);
      std::string got = min_orbit_size(rs).get_str();
      compare(r, "minorbit/" + to_string(spec), "c", got, std::to_string(row.c(n)),
              "#W=" + rs.weyl_order.get_str());
    }
}

void cnan_suite(Report& r, int bound) {
  for (const char* v : {"C", "H", "spR", "sostar", "R"})
    for (int n = 1; n <= bound; ++n) {
      if (std::string(v) == "R" && n < 2) continue;
      PairSpec s = canonical(PairSpec{Kind::Ugl, Field::None, v, "", {n}});
      RestrictedDatum d = datum_of(s);
      // C_n minus A_n roots; o(n,n) has no 2e_l
      int expect = std::string(v) == "R" ? n * (n - 1) / 2 : n * (n + 1) / 2;
      compare(r, "cnan/" + to_string(s), "count", std::to_string(delta_n_minus(d).size()),
              std::to_string(expect), pair_name(s));
    }
}

void rank_one_suite(Report& r) {
  // rows satisfying m-(lambda)+m-(2lambda) <= 1 as a weight count
  static const std::set<std::string> selected = {"I_R", "I_C", "I_H", "I_O", "II", "III"};
  for (const auto& id : rank1_table_ids()) {
    const Rank1Row& row = rank1_row(id);
    bool got = rank1_minus_count(row) <= 1;
    compare(r, "rankone/" + id, "count_test", got ? "selected" : "rejected",
            selected.count(id) ? "selected" : "rejected",
            "(" + row.g + ", " + row.h + ") #{mu: m-(mu)>0}=" + std::to_string(rank1_minus_count(row)));
  }
}

std::string relation(int a, int b) { return std::to_string(a) + (a < b ? "<" : a == b ? "=" : ">") + std::to_string(b); }

void exceptional_suite(Report& r) {
  for (const auto& row : exc7_rows()) {
    int lhs = row.mG * row.rank, rhs = row.nG - row.nH;
    std::string recomputed = relation(lhs, rhs);
    char printed_op = row.printed[row.printed.find_first_of("<=>")];
    bool expected = printed_op != '<';
    compare(r, "exceptional/" + row.id, "ineq", yn(lhs >= rhs), yn(expected),
            "(" + row.g + ", " + row.h + ") recomputed " + recomputed + ", printed " + row.printed);
  }
}

void verdict_lines(Report& r, const std::string& id, const std::string& prefix, const Verdict& v,
                   const Expected& x, const std::string& witness) {
  compare(r, id, prefix + "QP", tri_name(v.qp), tri_name(x.qp), witness);
  compare(r, id, prefix + "PP", tri_name(v.pp), tri_name(x.pp), witness);
  compare(r, id, prefix + "BB", tri_name(v.bb), tri_name(x.bb), witness);
}

Expected as_expected(const Verdict& v) { return {v.qp, v.pp, v.bb}; }

bool classify_into(Report& r, const std::string& id, const PairSpec& s, Verdict& out) {
  try {
    out = classify(s);
    return true;
  } catch (const Error& e) {
    r.add({id, "classify", errc_name(e.code()), "verdict", "MISMATCH", e.what()});
    return false;
  }
}

}  // namespace

Report table_report(int bound) {
  Report r;
  min_orbit_suite(r);
  cnan_suite(r, bound);
  rank_one_suite(r);
  exceptional_suite(r);
  return r;
}

Report verify(const Catalog& c, int bound) {
  Report r;
  for (const auto& e : c.entries) {
    Verdict v;
    if (!classify_into(r, e.id, e.spec, v)) continue;
    std::string w = to_string(e.spec) + " " + pair_name(e.spec) + "; " + e.source;
    verdict_lines(r, e.id, "", v, e.expected, w);
    for (const auto& a : e.aliases) {
      Verdict va;
      if (!classify_into(r, e.id, a, va)) continue;
      verdict_lines(r, e.id, "alias:", va, as_expected(v), to_string(a) + " vs " + to_string(e.spec));
    }
    for (const auto& t : isomorphic_reductions(e.spec)) {
      Verdict vt;
      if (!classify_into(r, e.id, t, vt)) continue;
      compare(r, e.id, "iso:QP", tri_name(vt.qp), tri_name(v.qp), to_string(t) + " vs " + to_string(e.spec));
      compare(r, e.id, "iso:PP", tri_name(vt.pp), tri_name(v.pp), to_string(t) + " vs " + to_string(e.spec));
    }
    if (auto d = c_dual_spec(e.spec)) {
      Verdict vd;
      if (classify_into(r, e.id, *d, vd))
        compare(r, e.id, "cdual:QP", tri_name(vd.qp), tri_name(v.qp), to_string(*d) + " is the c-dual");
    }
  }
  for (const auto& chk : verify_theorem_lists(bound))
    compare(r, "lists/" + to_string(chk.spec), chk.flag, yn(chk.computed), yn(chk.expected), chk.report.witness);
  Report t = table_report(bound);
  for (auto& l : t.lines) r.add(std::move(l));
  return r;
}

std::string to_tsv(const Report& r) {
  std::string out = "id\tflag\tcomputed\texpected\toutcome\twitness\n";
  for (const auto& l : r.lines)
    out += clean(l.id) + "\t" + clean(l.flag) + "\t" + clean(l.computed) + "\t" + clean(l.expected) + "\t" +
           l.outcome + "\t" + clean(l.witness) + "\n";
  return out;
}

std::string to_json(const Report& r) {
  ojson j;
  j["lines"] = ojson::array();
  for (const auto& l : r.lines)
    j["lines"].push_back({{"id", l.id},
                          {"flag", l.flag},
                          {"computed", l.computed},
                          {"expected", l.expected},
                          {"outcome", l.outcome},
                          {"witness", l.witness}});
  j["mismatches"] = r.mismatches;
  j["unknowns"] = r.unknowns;
  return j.dump(2) + "\n";
}

std::string format_verdict(const PairSpec& s, const Verdict& v) {
  std::ostringstream os;
  os << "spec\t" << to_string(s) << "\n"
     << "pair\t" << pair_name(s) << "\n"
     << "QP\t" << tri_name(v.qp) << "\n"
     << "PP\t" << tri_name(v.pp) << "\n"
     << "BB\t" << tri_name(v.bb) << "\n"
     << "FM\t" << tri_name(v.pp) << "\n"
     << "BM\t" << tri_name(v.bb) << "\n";
  for (const auto& p : v.provenance) os << "why\t" << p.flag << "\t" << p.rule_id << "\t" << clean(p.citation) << "\n";
  return os.str();
}

std::string verdict_json(const PairSpec& s, const Verdict& v) {
  ojson j;
  j["spec"] = to_string(s);
  j["pair"] = pair_name(s);
  j["qp"] = tri_name(v.qp);
  j["pp"] = tri_name(v.pp);
  j["bb"] = tri_name(v.bb);
  j["fm"] = tri_name(v.pp);
  j["bm"] = tri_name(v.bb);
  j["provenance"] = ojson::array();
  for (const auto& p : v.provenance)
    j["provenance"].push_back({{"flag", p.flag}, {"rule", p.rule_id}, {"citation", p.citation}});
  j["tests"] = ojson::array();
  for (const auto& t : v.tests)
    j["tests"].push_back({{"test", t.test_id}, {"outcome", outcome_name(t.outcome)}, {"witness", t.witness}});
  return j.dump(2) + "\n";
}

}  // namespace realspher
