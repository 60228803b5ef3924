#include "realspher/realspher.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "catalog.hpp"

using namespace realspher;

struct rs_rootsys {
  RootSystem rs;
};
struct rs_verdict {
  PairSpec spec;
  Verdict v;
};
struct rs_catalog {
  Catalog c;
};
struct rs_report {
  Report r;
};

namespace {

thread_local std::string last_error;

rs_status from_errc(Errc c) {
  switch (c) {
    case Errc::InvalidSpec: return RS_INVALID_SPEC;
    case Errc::AmbientMismatch: return RS_AMBIENT_MISMATCH;
    case Errc::NotIrreducible: return RS_NOT_IRREDUCIBLE;
    case Errc::NotApplicable: return RS_NOT_APPLICABLE;
    case Errc::InvalidDatum: return RS_INVALID_DATUM;
    case Errc::IncompleteDatum: return RS_INCOMPLETE_DATUM;
    case Errc::DatumUnavailable: return RS_DATUM_UNAVAILABLE;
    case Errc::ContradictionDetected: return RS_CONTRADICTION;
    case Errc::Parse: return RS_PARSE;
    case Errc::Schema: return RS_SCHEMA;
    case Errc::Io: return RS_IO;
  }
  return RS_INTERNAL;
}

rs_status fail(rs_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
rs_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return RS_OK;
  } catch (const Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RS_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define RS_NEED(p) \
  if (!(p)) return fail(RS_ARGUMENT, "null argument: " #p)

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::Parse, "empty coordinate in weight '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    Q q;
    if (q.set_str(tok, 10) != 0) throw Error(Errc::Parse, "bad coordinate '" + tok + "'");
    if (q.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + tok + "'");
    q.canonicalize();
    w.push_back(q);
  }
  if (w.empty()) throw Error(Errc::Parse, "empty weight");
  return w;
}

Kind parse_kind(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(Kind::Compact); ++k)
    if (s == kind_name(static_cast<Kind>(k))) return static_cast<Kind>(k);
  throw Error(Errc::Parse, "unknown family '" + s + "'");
}

}  // namespace

extern "C" {

const char* rs_version(void) { return "0.1.0"; }

const char* rs_status_name(rs_status s) {
  switch (s) {
    case RS_OK: return "ok";
    case RS_ARGUMENT: return "argument";
    case RS_INTERNAL: return "internal";
    default: break;
  }
  if (s > RS_OK && s < RS_ARGUMENT) return errc_name(static_cast<Errc>(s - 1));
  return "unknown";
}

const char* rs_last_error(void) { return last_error.c_str(); }

void rs_string_free(char* s) { std::free(s); }

rs_status rs_rootsys_new(const char* text, rs_rootsys** out) {
  RS_NEED(text);
  RS_NEED(out);
  *out = nullptr;
  return guard([&] { *out = new rs_rootsys{build(parse_root_system(text))}; });
}

void rs_rootsys_free(rs_rootsys* rs) { delete rs; }

rs_status rs_rootsys_rank(const rs_rootsys* rs, int* out) {
  RS_NEED(rs);
  RS_NEED(out);
  *out = rs->rs.spec.rank;
  return RS_OK;
}

rs_status rs_rootsys_ambient_dim(const rs_rootsys* rs, int* out) {
  RS_NEED(rs);
  RS_NEED(out);
  *out = rs->rs.ambient_dim;
  return RS_OK;
}

rs_status rs_rootsys_weyl_order(const rs_rootsys* rs, char** out) {
  RS_NEED(rs);
  RS_NEED(out);
  return guard([&] { *out = dup(rs->rs.weyl_order.get_str()); });
}

rs_status rs_rootsys_min_orbit(const rs_rootsys* rs, char** out) {
  RS_NEED(rs);
  RS_NEED(out);
  return guard([&] { *out = dup(min_orbit_size(rs->rs).get_str()); });
}

rs_status rs_rootsys_orbit_size(const rs_rootsys* rs, const char* weight, char** out) {
  RS_NEED(rs);
  RS_NEED(weight);
  RS_NEED(out);
  return guard([&] {
    Weight w = canonicalize(rs->rs, parse_weight(weight));
    *out = dup(orbit_size(rs->rs, w).get_str());
  });
}

rs_status rs_rootsys_minimal_rays(const rs_rootsys* rs, char** out) {
  RS_NEED(rs);
  RS_NEED(out);
  return guard([&] {
    std::string s;
    for (int i : minimal_orbit_rays(rs->rs)) s += (s.empty() ? "" : ",") + std::to_string(i);
    *out = dup(s);
  });
}

rs_status rs_spec_canonical(const char* text, char** out) {
  RS_NEED(text);
  RS_NEED(out);
  return guard([&] { *out = dup(to_string(parse_spec(text))); });
}

rs_status rs_enumerate(const char* family, int bound, const char* field, char** out) {
  RS_NEED(family);
  RS_NEED(out);
  if (bound < 0) return fail(RS_ARGUMENT, "bound must be >= 0");
  return guard([&] {
    Kind k = parse_kind(family);
    std::string want = field ? field : "";
    std::string s;
    for (const auto& p : enumerate(k, bound)) {
      if (!want.empty()) {
        // field letter or variant tag
        std::string txt = to_string(p);
        auto sp = txt.find(' ');
        std::string second = sp == std::string::npos ? "" : txt.substr(sp + 1, txt.find(' ', sp + 1) - sp - 1);
        if (second != want) continue;
      }
      s += to_string(p) + "\n";
    }
    *out = dup(s);
  });
}

rs_status rs_classify(const char* spec, rs_verdict** out) {
  RS_NEED(spec);
  RS_NEED(out);
  *out = nullptr;
  return guard([&] {
    PairSpec s = parse_spec(spec);
    *out = new rs_verdict{s, classify(s)};
  });
}

void rs_verdict_free(rs_verdict* v) { delete v; }

rs_status rs_verdict_flags(const rs_verdict* v, rs_tri* qp, rs_tri* pp, rs_tri* bb) {
  RS_NEED(v);
  auto conv = [](Tri t) { return t == Tri::Yes ? RS_YES : t == Tri::No ? RS_NO : RS_UNKNOWN; };
  if (qp) *qp = conv(v->v.qp);
  if (pp) *pp = conv(v->v.pp);
  if (bb) *bb = conv(v->v.bb);
  return RS_OK;
}

rs_status rs_verdict_format(const rs_verdict* v, rs_format fmt, char** out) {
  RS_NEED(v);
  RS_NEED(out);
  if (fmt != RS_FORMAT_TSV && fmt != RS_FORMAT_JSON) return fail(RS_ARGUMENT, "bad format");
  return guard([&] {
    *out = dup(fmt == RS_FORMAT_TSV ? format_verdict(v->spec, v->v) : verdict_json(v->spec, v->v));
  });
}

rs_status rs_catalog_load(const char* path, rs_catalog** out) {
  RS_NEED(path);
  RS_NEED(out);
  *out = nullptr;
  return guard([&] { *out = new rs_catalog{load_catalog(path)}; });
}

rs_status rs_catalog_parse(const char* json, rs_catalog** out) {
  RS_NEED(json);
  RS_NEED(out);
  *out = nullptr;
  return guard([&] { *out = new rs_catalog{parse_catalog(json)}; });
}

void rs_catalog_free(rs_catalog* c) { delete c; }

rs_status rs_catalog_size(const rs_catalog* c, int* out) {
  RS_NEED(c);
  RS_NEED(out);
  *out = static_cast<int>(c->c.entries.size());
  return RS_OK;
}

rs_status rs_catalog_dump(const rs_catalog* c, char** out) {
  RS_NEED(c);
  RS_NEED(out);
  return guard([&] { *out = dup(dump_catalog(c->c)); });
}

rs_status rs_verify(const rs_catalog* c, int bound, rs_report** out) {
  RS_NEED(c);
  RS_NEED(out);
  *out = nullptr;
  if (bound < 1) return fail(RS_ARGUMENT, "bound must be >= 1");
  return guard([&] { *out = new rs_report{verify(c->c, bound)}; });
}

rs_status rs_table_report(int bound, rs_report** out) {
  RS_NEED(out);
  *out = nullptr;
  if (bound < 1) return fail(RS_ARGUMENT, "bound must be >= 1");
  return guard([&] { *out = new rs_report{table_report(bound)}; });
}

void rs_report_free(rs_report* r) { delete r; }

rs_status rs_report_counts(const rs_report* r, int* lines, int* mismatches, int* unknowns) {
  RS_NEED(r);
  if (lines) *lines = static_cast<int>(r->r.lines.size());
  if (mismatches) *mismatches = r->r.mismatches;
  if (unknowns) *unknowns = r->r.unknowns;
  return RS_OK;
}

rs_status rs_report_format(const rs_report* r, rs_format fmt, char** out) {
  RS_NEED(r);
  RS_NEED(out);
  if (fmt != RS_FORMAT_TSV && fmt != RS_FORMAT_JSON) return fail(RS_ARGUMENT, "bad format");
  return guard([&] { *out = dup(fmt == RS_FORMAT_TSV ? to_tsv(r->r) : to_json(r->r)); });
}

}  // extern "C"
