#include "families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace realspher {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::InvalidSpec, msg); }

int fdim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    case Field::O: return 8;
    default: return 0;
  }
}

const char* field_letter(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O: return "O";
    default: return "";
  }
}

std::optional<Field> field_from(std::string_view t) {
  if (t == "R") return Field::R;
  if (t == "C") return Field::C;
  if (t == "H") return Field::H;
  if (t == "O") return Field::O;
  return std::nullopt;
}

std::string num(int v) { return std::to_string(v); }

Weight e(int dim, int i) {
  Weight w(dim, Q(0));
  w[i] = 1;
  return w;
}

Weight comb(int dim, std::initializer_list<std::pair<int, int>> terms) {
  Weight w(dim, Q(0));
  for (auto [i, c] : terms) w[i] += c;
  return w;
}

void push(RestrictedDatum& d, Weight w, int mp, int mm) {
  if (mp + mm == 0) return;
  d.positive_roots.push_back({std::move(w), mp, mm});
}

}  // namespace

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

Tri parse_tri(std::string_view s) {
  if (s == "yes") return Tri::Yes;
  if (s == "no") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  throw Error(Errc::Schema, "expected yes/no/unknown, got '" + std::string(s) + "'");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Upq: return "upq";
    case Kind::Glgl: return "glgl";
    case Kind::Somn: return "somn";
    case Kind::Sostar: return "sostar";
    case Kind::Ugl: return "ugl";
    case Kind::Oustar: return "oustar";
    case Kind::Sp: return "sp";
    case Kind::Rank1: return "rank1";
    case Kind::Exc7: return "exc7";
    case Kind::E6so91: return "e6so91";
    case Kind::Group: return "group";
    case Kind::Riem: return "riem";
    case Kind::Nonke: return "nonke";
    case Kind::Trivial: return "trivial";
    case Kind::Abelian: return "abelian";
    case Kind::Compact: return "compact";
  }
  return "?";
}

// ---------------------------------------------------------------- tables

const std::vector<Rank1Row>& rank1_rows() {
  static const std::vector<Rank1Row> rows = {
      {"I_R", "so(p+1,q+1)", "so(q)+so(p+1,1)", 0, 0, 0, 0, 2, false},
      {"I_R^c", "so(p+q+1,1)", "so(q)+so(p+1,1)", 0, 0, 0, 0, 2, true},
      {"I_C", "u(p+1,q+1)", "u(q)+u(p+1,1)", 0, 1, 0, 0, 2, false},
      {"I_C^c", "u(p+q+1,1)", "u(q)+u(p+1,1)", 0, 1, 0, 0, 2, true},
      {"I_H", "sp(p+1,q+1)", "sp(q)+sp(p+1,1)", 0, 3, 0, 0, 2, false},
      {"I_H^c", "sp(p+q+1,1)", "sp(q)+sp(p+1,1)", 0, 3, 0, 0, 2, true},
      {"I_O", "f4(-20)", "so(8,1)", 0, 7, 8, 0, 0, false},
      {"slR", "sl(m+2,R)", "so(m+1,1)", 0, 0, 0, 1, 1, false},
      {"slR^c", "su(m+1,1)", "so(m+1,1)", 0, 0, 0, 1, 1, true},
      {"spR", "sp(m+2,R)", "u(m+1,1)", 0, 1, 0, 2, 1, false},
      {"spR^c", "sp(m+1,1)", "u(m+1,1)", 0, 1, 0, 2, 1, true},
      {"f44", "f4(4)", "sp(2,1)+su(2)", 4, 3, 4, 4, 0, false},
      {"f44^c", "f4(-20)", "sp(2,1)+su(2)", 4, 3, 4, 4, 0, true},
      {"II", "so(m+2,C)", "so(m+1,1)", 0, 0, 0, 0, 1, false},
      {"II^c", "so(m+1,1)+so(m+1,1)", "so(m+1,1)", 0, 0, 0, 0, 1, true},
      {"slC", "sl(m+2,C)", "su(m+1,1)", 0, 1, 0, 1, 1, false},
      {"slC^c", "su(m+1,1)+su(m+1,1)", "su(m+1,1)", 0, 1, 0, 1, 1, true},
      {"spC", "sp(m+2,C)", "sp(m+1,1)", 0, 3, 0, 3, 1, false},
      {"spC^c", "sp(m+1,1)+sp(m+1,1)", "sp(m+1,1)", 0, 3, 0, 3, 1, true},
      {"f4C", "f4(C)", "f4(-20)", 8, 7, 8, 7, 0, false},
      {"f4C^c", "f4(-20)+f4(-20)", "f4(-20)", 8, 7, 8, 7, 0, true},
      {"III", "so*(2m+4)", "u(m+1,1)", 0, 1, 0, 0, 1, false},
      {"III^c", "so(2m+2,2)", "u(m+1,1)", 0, 1, 0, 0, 1, true},
      {"sustar", "su*(2m+4)", "sp(m+1,1)", 0, 3, 0, 1, 1, false},
      {"sustar^c", "su(2m+2,2)", "sp(m+1,1)", 0, 3, 0, 1, 1, true},
      {"e626", "e6(-26)", "f4(-20)", 8, 7, 8, 1, 0, false},
      {"e626^c", "e6(-14)", "f4(-20)", 8, 7, 8, 1, 0, true},
      {"sl3C", "sl(3,C)", "so(3,C)", 2, 0, 2, 2, 0, false},
      {"su33", "su(3,3)", "so*(6)", 4, 1, 4, 3, 0, false},
      {"su33^c", "su*(6)", "so*(6)", 4, 1, 4, 3, 0, true},
      {"e62", "e6(2)", "sp(3,1)", 8, 3, 8, 5, 0, false},
      {"e62^c", "e6(-26)", "sp(3,1)", 8, 3, 8, 5, 0, true},
  };
  return rows;
}

const Rank1Row& rank1_row(const std::string& id) {
  for (const auto& r : rank1_rows())
    if (r.id == id) return r;
  invalid("unknown rank1 row '" + id + "'");
}

std::vector<std::string> rank1_table_ids() {
  std::vector<std::string> ids;
  for (const auto& r : rank1_rows())
    if (!r.dual) ids.push_back(r.id);
  return ids;
}

namespace {

// Multiplicity matrix of a rank-one row at given parameters. Entries that
// depend on p, q or m are filled here; rows store the constant part.
std::array<int, 4> rank1_matrix(const Rank1Row& r, const std::vector<int>& prm) {
  std::string base = r.id.substr(0, r.id.find('^'));
  int p = 0, q = 0, m = 0;
  if (r.nparams == 2) p = prm[0], q = prm[1];
  if (r.nparams == 1) m = prm[0];
  if (base == "I_R") return {p, 0, q, 0};
  if (base == "I_C") return {2 * p, 1, 2 * q, 0};
  if (base == "I_H") return {4 * p, 3, 4 * q, 0};
  if (base == "slR") return {m, 0, m, 1};
  if (base == "spR") return {2 * m, 1, 2 * m, 2};
  if (base == "II") return {m, 0, m, 0};
  if (base == "slC") return {2 * m, 1, 2 * m, 1};
  if (base == "spC") return {4 * m, 3, 4 * m, 3};
  if (base == "III") return {2 * m, 1, 2 * m, 0};
  if (base == "sustar") return {4 * m, 3, 4 * m, 1};
  return {r.mp1, r.mp2, r.mm1, r.mm2};
}

}  // namespace

int rank1_minus_count(const Rank1Row& r) {
  // Generic parameters (all >= 1) so that parameter-dependent entries are
  // nonzero; the count is then a property of the row.
  std::vector<int> prm(r.nparams, 1);
  auto mx = rank1_matrix(r, prm);
  return (mx[2] > 0) + (mx[3] > 0);
}

const std::vector<Exc7Row>& exc7_rows() {
  static const std::vector<Exc7Row> rows = {
      {"e66_sl6sl2", "e6(6)", "sl(6,R)+sl(2,R)", 6, 1, 36, 16, "6<20"},
      {"e66_so55", "e6(6)", "so(5,5)+R", 6, 1, 36, 20, "6<16"},
      {"e62_so64", "e6(2)", "so(6,4)+iR", 4, 2, 36, 20, "8<16"},
      {"e62_su33", "e6(2)", "su(3,3)+sl(2,R)", 4, 2, 36, 16, "8<20"},
      {"e614_su51", "e6(-14)", "su(5,1)+sl(2,R)", 2, 8, 30, 10, "16<20"},
      {"e614_so82", "e6(-14)", "so(8,2)+iR", 2, 8, 30, 14, "16=16"},
      {"e626_so91", "e6(-26)", "so(9,1)+R", 2, 8, 24, 8, "16>8"},
      {"e77_sl8", "e7(7)", "sl(8,R)", 7, 1, 63, 28, "7<35"},
      {"e77_so66", "e7(7)", "so(6,6)+sl(2,R)", 7, 1, 63, 31, "7<32"},
      {"e77_e66", "e7(7)", "e6(6)+R", 7, 1, 63, 36, "7<27"},
      {"e75_so84", "e7(-5)", "so(8,4)+su(2)", 4, 4, 60, 28, "16<32"},
      {"e75_sostar12", "e7(-5)", "so*(12)+sl(2,R)", 4, 4, 60, 28, "16<32"},
      {"e725_e626", "e7(-25)", "e6(-26)+R", 3, 8, 51, 24, "24<27"},
      {"e725_so102", "e7(-25)", "so(10,2)+sl(2,R)", 3, 8, 51, 19, "24<32"},
      {"e88_so88", "e8(8)", "so(8,8)", 8, 1, 120, 56, "8<64"},
      {"e88_e77", "e8(8)", "e7(7)+sl(2,R)", 8, 1, 120, 64, "8<56"},
      {"e824_so124", "e8(-24)", "so(12,4)", 4, 8, 108, 44, "32<64"},
      {"e824_e725", "e8(-24)", "e7(-25)+sl(2,R)", 4, 8, 108, 52, "32<56"},
      {"f44_so54", "f4(4)", "so(5,4)", 4, 1, 24, 16, "4<8"},
      {"f44_sp3", "f4(4)", "sp(3,R)+sl(2,R)", 4, 1, 24, 10, "4<14"},
      {"f420_so81", "f4(-20)", "so(8,1)", 1, 8, 15, 7, "8=8"},
      {"g22_sl2sl2", "g2(2)", "sl(2,R)+sl(2,R)", 2, 1, 6, 2, "2<4"},
  };
  return rows;
}

const Exc7Row& exc7_row(const std::string& id) {
  for (const auto& r : exc7_rows())
    if (r.id == id) return r;
  invalid("unknown exc7 row '" + id + "'");
}

const std::vector<NonkeRow>& nonke_rows() {
  static const std::vector<NonkeRow> rows = [] {
    auto upq = [](int i, int j, int k, int l) {
      return canonical(PairSpec{Kind::Upq, Field::R, "", "", {i, j, k, l}});
    };
    return std::vector<NonkeRow>{
        {"sl4R_sp2R", "(sl(4,R), sp(2,R))", "(so(3,3), so(3,2))", upq(3, 0, 2, 1)},
        {"su22_sp2R", "(su(2,2), sp(2,R))", "(so(4,2), so(3,2))", upq(3, 1, 2, 0)},
        {"sostar8_u22", "(so*(8), u(2,2))", "(so(6,2), so(4,2)+so(2))", upq(4, 2, 2, 0)},
        {"so44_u22", "(so(4,4), u(2,2))", "(so(4,4), so(4,2)+so(2))", upq(2, 2, 4, 0)},
        {"sl4C_sp2C", "(sl(4,C), sp(2,C))", "(so(6,C), so(5,C))",
         PairSpec{Kind::Somn, Field::None, "", "", {5, 1}}},
    };
  }();
  return rows;
}

namespace {

const NonkeRow& nonke_row(const std::string& id) {
  for (const auto& r : nonke_rows())
    if (r.id == id) return r;
  invalid("unknown nonke row '" + id + "'");
}

const std::set<std::string> kUglVariants = {"C", "H", "R", "spR", "sostar"};

// ---------------------------------------------------------------- parsing

struct Token {
  std::string text;
  size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

class Cursor {
public:
  Cursor(const std::string& text) : text_(text), toks_(tokenize(text)) {}

  [[noreturn]] void fail(size_t idx, const std::string& msg) const {
    std::ostringstream os;
    if (idx < toks_.size())
      os << "parse error at token " << idx + 1 << " (column " << toks_[idx].column
         << ", '" << toks_[idx].text << "'): " << msg;
    else
      os << "parse error at token " << idx + 1 << " (column " << text_.size() + 1
         << ", end of input): " << msg;
    throw Error(Errc::Parse, os.str());
  }

  bool done() const { return pos_ >= toks_.size(); }
  size_t pos() const { return pos_; }

  std::string word(const char* what) {
    if (done()) fail(pos_, std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  int integer(const char* what) {
    if (done()) fail(pos_, std::string("expected integer ") + what);
    const std::string& t = toks_[pos_].text;
    bool ok = !t.empty() && t.size() <= 6 &&
              std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!ok) fail(pos_, std::string("expected nonnegative integer ") + what);
    ++pos_;
    return std::stoi(t);
  }

  Field field(std::initializer_list<Field> allowed) {
    size_t at = pos_;
    std::string t = word("field letter");
    auto f = field_from(t);
    if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end()) {
      std::string list;
      for (Field a : allowed) list += std::string(list.empty() ? "" : ",") + field_letter(a);
      fail(at, "expected field letter in {" + list + "}");
    }
    return *f;
  }

  void end() {
    if (!done()) fail(pos_, "unexpected trailing token");
  }

private:
  std::string text_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

std::string rank1_alias(std::string id) {
  if (id == "Iw_O" || id == "I_O^c" || id == "Iw_O^c") return "I_O";
  if (id.size() >= 3 && id[0] == 'I' && id[1] == 'w' && id[2] == '_') id.erase(1, 1);
  return id;
}

}  // namespace

PairSpec parse_spec(const std::string& text) {
  Cursor c(text);
  if (c.done()) c.fail(0, "empty pair spec");
  size_t kw_at = c.pos();
  std::string kw = c.word("family keyword");
  PairSpec s;
  auto ints = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) s.params.push_back(c.integer(n));
  };
  if (kw == "upq") {
    s.kind = Kind::Upq;
    s.field = c.field({Field::R, Field::C, Field::H});
    ints({"i", "j", "k", "l"});
  } else if (kw == "glgl") {
    s.kind = Kind::Glgl;
    s.field = c.field({Field::R, Field::C, Field::H});
    ints({"p", "q"});
  } else if (kw == "somn") {
    s.kind = Kind::Somn;
    ints({"m", "n"});
  } else if (kw == "sostar") {
    s.kind = Kind::Sostar;
    ints({"p", "q"});
  } else if (kw == "oustar") {
    s.kind = Kind::Oustar;
    ints({"p", "q"});
  } else if (kw == "ugl") {
    s.kind = Kind::Ugl;
    size_t at = c.pos();
    s.tag = c.word("variant");
    if (!kUglVariants.count(s.tag)) c.fail(at, "expected variant in {C,H,R,spR,sostar}");
    ints({"n"});
  } else if (kw == "sp") {
    s.kind = Kind::Sp;
    s.field = c.field({Field::R, Field::C});
    ints({"p", "q"});
  } else if (kw == "rank1") {
    s.kind = Kind::Rank1;
    size_t at = c.pos();
    std::string row = c.word("row id");
    if (row == "I" || row == "I^c") {
      Field f = c.field({Field::R, Field::C, Field::H, Field::O});
      row = std::string("I_") + field_letter(f) + (row == "I^c" ? "^c" : "");
    }
    row = rank1_alias(row);
    auto it = std::find_if(rank1_rows().begin(), rank1_rows().end(),
                           [&](const Rank1Row& r) { return r.id == row; });
    if (it == rank1_rows().end()) c.fail(at, "unknown rank1 row");
    s.tag = row;
    if (it->nparams == 2) ints({"p", "q"});
    if (it->nparams == 1) ints({"m"});
  } else if (kw == "exc7") {
    s.kind = Kind::Exc7;
    size_t at = c.pos();
    s.tag = c.word("row id");
    bool known = std::any_of(exc7_rows().begin(), exc7_rows().end(),
                             [&](const Exc7Row& r) { return r.id == s.tag; });
    if (!known) c.fail(at, "unknown exc7 row");
  } else if (kw == "e6so91") {
    s.kind = Kind::E6so91;
  } else if (kw == "group") {
    s.kind = Kind::Group;
    size_t at = c.pos();
    s.tag = c.word("group sub-kind");
    if (s.tag == "o" || s.tag == "su" || s.tag == "sp") {
      ints({"n"});
    } else if (s.tag == "rank") {
      ints({"K"});
    } else if (s.tag == "compact") {
      size_t tat = c.pos();
      std::string t = c.word("root system type");
      try {
        s.name = to_string(parse_root_system(t));
      } catch (const Error& err) {
        c.fail(tat, err.what());
      }
    } else if (s.tag != "f4") {
      c.fail(at, "expected one of o, su, sp, f4, compact, rank");
    }
  } else if (kw == "riem") {
    s.kind = Kind::Riem;
    size_t at = c.pos();
    s.tag = c.word("Riemannian sub-kind");
    if (s.tag == "o" || s.tag == "su" || s.tag == "sp") {
      ints({"p", "q"});
    } else if (s.tag == "named") {
      s.name = c.word("name");
    } else {
      c.fail(at, "expected one of o, su, sp, named");
    }
  } else if (kw == "nonke") {
    s.kind = Kind::Nonke;
    size_t at = c.pos();
    s.tag = c.word("row id");
    bool known = std::any_of(nonke_rows().begin(), nonke_rows().end(),
                             [&](const NonkeRow& r) { return r.id == s.tag; });
    if (!known) c.fail(at, "unknown nonke row");
  } else if (kw == "trivial") {
    s.kind = Kind::Trivial;
  } else if (kw == "abelian") {
    s.kind = Kind::Abelian;
  } else if (kw == "compact") {
    s.kind = Kind::Compact;
    s.name = c.word("name");
  } else {
    c.fail(kw_at, "unknown family keyword");
  }
  c.end();
  return canonical(s);
}

std::string to_string(const PairSpec& s) {
  std::string out = kind_name(s.kind);
  if (s.field != Field::None) out += std::string(" ") + field_letter(s.field);
  if (!s.tag.empty()) out += " " + s.tag;
  if (!s.name.empty()) out += " " + s.name;
  for (int p : s.params) out += " " + num(p);
  return out;
}

// ---------------------------------------------------------------- canonical

namespace {

std::array<int, 4> upq_canonical(std::array<int, 4> v) {
  auto [i, j, k, l] = v;
  std::array<std::array<int, 4>, 4> imgs = {{{i, j, k, l}, {j, i, l, k}, {k, l, i, j}, {l, k, j, i}}};
  int mn = std::min({i, j, k, l});
  std::array<int, 4> best{};
  bool have = false;
  for (const auto& im : imgs) {
    if (im[3] != mn) continue;
    if (!have || im < best) best = im, have = true;
  }
  return best;
}

void need(bool ok, const PairSpec& s, const std::string& why) {
  if (!ok) invalid("out of range: " + to_string(s) + " (" + why + ")");
}

void need_params(const PairSpec& s, size_t n) {
  if (s.params.size() != n)
    invalid(std::string(kind_name(s.kind)) + " expects " + num(static_cast<int>(n)) + " parameters");
  for (int p : s.params) need(p >= 0, s, "negative parameter");
}

}  // namespace

PairSpec canonical(const PairSpec& in) {
  PairSpec s = in;
  auto sort2 = [&] {
    if (s.params[0] < s.params[1]) std::swap(s.params[0], s.params[1]);
  };
  switch (s.kind) {
    case Kind::Upq: {
      need_params(s, 4);
      need(s.field == Field::R || s.field == Field::C || s.field == Field::H, s, "field");
      auto v = upq_canonical({s.params[0], s.params[1], s.params[2], s.params[3]});
      s.params.assign(v.begin(), v.end());
      need(v[0] + v[2] >= 1 && v[1] + v[3] >= 1, s, "both factors nonzero");
      break;
    }
    case Kind::Glgl:
      need_params(s, 2);
      need(s.field == Field::R || s.field == Field::C || s.field == Field::H, s, "field");
      sort2();
      need(s.params[1] >= 1, s, "p,q >= 1");
      break;
    case Kind::Somn:
    case Kind::Sostar:
    case Kind::Oustar:
      need_params(s, 2);
      s.field = Field::None;
      sort2();
      need(s.params[1] >= 1, s, "p,q >= 1");
      break;
    case Kind::Sp:
      need_params(s, 2);
      need(s.field == Field::R || s.field == Field::C, s, "field");
      sort2();
      need(s.params[1] >= 1, s, "p,q >= 1");
      break;
    case Kind::Ugl:
      need_params(s, 1);
      need(kUglVariants.count(s.tag) > 0, s, "variant");
      need(s.params[0] >= (s.tag == "R" ? 2 : 1), s, s.tag == "R" ? "n >= 2" : "n >= 1");
      break;
    case Kind::Rank1: {
      s.tag = rank1_alias(s.tag);
      const Rank1Row& r = rank1_row(s.tag);
      need_params(s, static_cast<size_t>(r.nparams));
      if (r.nparams == 2) need(s.params[1] >= 1, s, "p >= 0, q >= 1");
      if (r.nparams == 1) need(s.params[0] >= 1, s, "m >= 1");
      break;
    }
    case Kind::Exc7:
      need_params(s, 0);
      exc7_row(s.tag);
      break;
    case Kind::Nonke:
      need_params(s, 0);
      nonke_row(s.tag);
      break;
    case Kind::Group:
      if (s.tag == "o" || s.tag == "su" || s.tag == "sp") {
        need_params(s, 1);
        need(s.params[0] >= 2, s, "n >= 2");
      } else if (s.tag == "rank") {
        need_params(s, 1);
        need(s.params[0] >= 2, s, "K >= 2");
      } else if (s.tag == "f4") {
        need_params(s, 0);
      } else if (s.tag == "compact") {
        need_params(s, 0);
        s.name = to_string(parse_root_system(s.name));
      } else {
        invalid("unknown group sub-kind '" + s.tag + "'");
      }
      break;
    case Kind::Riem:
      if (s.tag == "named") {
        need_params(s, 0);
        need(!s.name.empty(), s, "name");
      } else if (s.tag == "o" || s.tag == "su" || s.tag == "sp") {
        need_params(s, 2);
        sort2();
        need(s.params[1] >= 1, s, "p,q >= 1");
        if (s.tag == "o") need(s.params[0] + s.params[1] >= 3, s, "p+q >= 3");
      } else {
        invalid("unknown riem sub-kind '" + s.tag + "'");
      }
      break;
    case Kind::E6so91:
    case Kind::Trivial:
    case Kind::Abelian:
      need_params(s, 0);
      break;
    case Kind::Compact:
      need_params(s, 0);
      need(!s.name.empty(), s, "name");
      break;
  }
  return s;
}

// ---------------------------------------------------------------- rules

namespace {

// (BB) is a property of the complexification. For U(a+b;F) over U(a)xU(b)
// this is (so, so+so), (sl, s(gl+gl)) or (sp, sp+sp).
bool complex_bb_upq(Field f, int a, int b) {
  int lo = std::min(a, b), hi = std::max(a, b);
  if (lo == 0) return true;
  switch (f) {
    case Field::R: return lo == 1 || (lo == 2 && hi == 2);
    case Field::C: return lo == 1;
    case Field::H: return lo == 1 && hi == 1;
    default: return false;
  }
}

FamilyRule rank1_rule(const std::string& id, const std::vector<int>& prm) {
  std::string base = id.substr(0, id.find('^'));
  bool dual = id.find("^c") != std::string::npos;
  bool qp = base == "I_R" || base == "I_C" || base == "I_H" || base == "I_O" ||
            base == "II" || base == "III";
  bool pp = false, bb = false;
  if (qp) {
    if (dual || base == "I_O") {
      pp = true;
    } else if (base[0] == 'I' && base[1] == '_') {
      pp = prm[0] == 0 || prm[1] == 1;
    } else {
      pp = prm[0] == 1 || prm[0] == 2;
    }
    if (base == "I_R") bb = prm[1] == 1 || (prm[0] == 0 && prm[1] == 2);
    if (base == "I_C") bb = prm[1] == 1;
    if (base == "II") bb = prm[0] == 1 || prm[0] == 2;
    if (base == "III") bb = prm[0] == 1;
  }
  return {tri(qp), tri(pp), tri(bb), "rank1",
          "rank-one rows: QP iff I_F, II, III or a c-dual; PP adds p=0 or q=1 (I_F), m<=2 (II, III)"};
}

}  // namespace

FamilyRule rule_of(const PairSpec& in) {
  PairSpec s = canonical(in);
  const auto& P = s.params;
  switch (s.kind) {
    case Kind::Upq: {
      int i = P[0], j = P[1], k = P[2], l = P[3];
      bool qp = l == 0 && std::min({i, j, k}) <= 1;
      bool pp = l == 0 && (i == 0 || std::min(j, k) <= 1);
      bool bb = pp && complex_bb_upq(s.field, i + k, j + l);
      return {tri(qp), tri(pp), tri(bb), "upq",
              "QP iff l=0 and min(i,j,k)=1; PP iff l=0 and min(j,k)=1"};
    }
    case Kind::Glgl: {
      bool ok = P[1] == 1;
      bool bb = ok && s.field != Field::H;
      return {tri(ok), tri(ok), tri(bb), "glgl", "QP iff PP iff min(p,q)=1"};
    }
    case Kind::Somn: {
      bool ok = P[0] == 1 || P[1] == 1 || (P[0] == 2 && P[1] == 2);
      return {tri(ok), tri(ok), tri(ok), "somn", "QP iff PP iff m=1, n=1 or (m,n)=(2,2)"};
    }
    case Kind::Sostar: {
      bool ok = P[1] == 1;
      bool bb = P[0] == 1 && P[1] == 1;
      return {tri(ok), tri(ok), tri(bb), "sostar", "QP iff PP iff min(p,q)=1"};
    }
    case Kind::Ugl: {
      int n = P[0];
      bool ok = s.tag == "R" ? (n == 2 || n == 3) : n == 1;
      bool bb = ok && !(s.tag == "H" && n == 1);
      return {tri(ok), tri(ok), tri(bb), s.tag == "R" ? "ug2" : "ugl",
              s.tag == "R" ? "QP iff PP iff n=2 or 3" : "QP iff PP iff n=1"};
    }
    case Kind::Oustar: {
      int p = P[0], q = P[1];
      bool qp = q == 1;
      bool pp = q == 1 && p <= 3;
      bool bb = q == 1 && p <= 2;
      return {tri(qp), tri(pp), tri(bb), "oustar",
              "QP iff q=1; PP iff (p,q)=(3,1), (2,1) or (1,1)"};
    }
    case Kind::Sp: {
      bool ok = P[0] == 1 && P[1] == 1;
      return {tri(ok), tri(ok), tri(ok), "sp", "QP iff PP iff (p,q)=(1,1)"};
    }
    case Kind::Rank1:
      return rank1_rule(s.tag, P);
    case Kind::Exc7: {
      bool ok = s.tag == "e626_so91" || s.tag == "f420_so81";
      return {tri(ok), tri(ok), Tri::No, "exc7",
              "exceptional rows: only (e6(-26), so(9,1)+R) and (f4(-20), so(8,1)) survive"};
    }
    case Kind::E6so91:
      return {Tri::Yes, Tri::Yes, Tri::No, "e6", "(e6(-26), so(9,1)+R) satisfies PP and QP"};
    case Kind::Group: {
      if (s.tag == "o") {
        bool bb = P[0] == 2 || P[0] == 3;
        return {Tri::Yes, Tri::Yes, tri(bb), "group",
                "group case of o(n,1) satisfies PP; BB iff g' is sl(2) or sl(2)+sl(2) after complexification"};
      }
      if (s.tag == "compact")
        return {Tri::Yes, Tri::Yes, tri(s.name == "A1"), "group",
                "compact group case satisfies PP; BB iff g' = su(2)"};
      return {Tri::No, Tri::No, Tri::No, "group",
              "group case: PP only for compact g' or o(n,1)"};
    }
    case Kind::Riem: {
      bool bb = false;
      int p = s.tag == "named" ? 0 : P[0], q = s.tag == "named" ? 0 : P[1];
      if (s.tag == "o") bb = q == 1 || (p == 2 && q == 2);
      if (s.tag == "su") bb = q == 1;
      if (s.tag == "sp") bb = p == 1 && q == 1;
      return {Tri::Yes, Tri::Yes, s.tag == "named" ? Tri::Unknown : tri(bb), "riem",
              "Riemannian pairs satisfy PP (Iwasawa decomposition)"};
    }
    case Kind::Nonke: {
      FamilyRule r = rule_of(nonke_row(s.tag).target);
      r.rule_id = "nonke/" + r.rule_id;
      return r;
    }
    case Kind::Trivial:
      return {Tri::Yes, Tri::Yes, Tri::Yes, "trivial", "g = h"};
    case Kind::Abelian:
      return {Tri::Yes, Tri::Yes, Tri::Yes, "abelian", "(R, 0)"};
    case Kind::Compact:
      return {Tri::Yes, Tri::Yes, Tri::Unknown, "compact",
              "compact pairs satisfy PP; BB depends on h"};
  }
  return {};
}

// ---------------------------------------------------------------- data

namespace {

RealForm rank1_real_form(const std::string& id, const std::vector<int>& P) {
  std::string base = id.substr(0, id.find('^'));
  bool dual = id.find("^c") != std::string::npos;
  int p = 0, q = 0, m = 0;
  if (P.size() == 2) p = P[0], q = P[1];
  if (P.size() == 1) m = P[0];
  if (base == "I_R") return dual ? so_pq(p + q + 1, 1) : so_pq(p + 1, q + 1);
  if (base == "I_C") return dual ? su_pq(p + q + 1, 1) : su_pq(p + 1, q + 1);
  if (base == "I_H") return dual ? sp_pq(p + q + 1, 1) : sp_pq(p + 1, q + 1);
  if (base == "I_O") return f4_20();
  if (base == "slR") return dual ? su_pq(m + 1, 1) : gl_F(m + 2, 1);
  if (base == "spR") return dual ? sp_pq(m + 1, 1) : sp_R(m + 2);
  if (base == "f44") return dual ? f4_20() : f4_4();
  if (base == "II") return dual ? group_case(so_pq(m + 1, 1)) : complex_so(m + 2);
  if (base == "slC") return dual ? group_case(su_pq(m + 1, 1)) : complex_sl(m + 2);
  if (base == "spC") return dual ? group_case(sp_pq(m + 1, 1)) : complex_sp(m + 2);
  if (base == "f4C") return dual ? group_case(f4_20()) : complex_f4();
  if (base == "III") return dual ? so_pq(2 * m + 2, 2) : so_star(m + 2);
  if (base == "sustar") return dual ? su_pq(2 * m + 2, 2) : gl_F(m + 2, 4);
  if (base == "e626") return dual ? e6_14() : e6_26();
  if (base == "sl3C") return complex_sl(3);
  if (base == "su33") return dual ? gl_F(3, 4) : su_pq(3, 3);
  if (base == "e62") return dual ? e6_26() : e6_2();
  invalid("no real form for rank1 row " + id);
}

void set_ambient(RestrictedDatum& d, const RealForm& g) {
  d.rank_aG = g.rank;
  if (g.rank != d.rank_aH) {
    d.mG_value = g.mG;
    d.nG_value = g.nG;
  }
}

RestrictedDatum rank1_datum(const PairSpec& s) {
  const Rank1Row& r = rank1_row(s.tag);
  auto mx = rank1_matrix(r, s.params);
  RestrictedDatum d;
  d.rank_aH = 1;
  push(d, e(1, 0), mx[0], mx[2]);
  push(d, comb(1, {{0, 2}}), mx[1], mx[3]);
  d.h_root_system = RootSystemSpec{Family::BC, 1};
  d.h_label = r.h;
  set_ambient(d, rank1_real_form(s.tag, s.params));
  return d;
}

RestrictedDatum ugl_datum(const std::string& v, int n) {
  // e_i - e_j, e_i + e_j, 2e_l
  int dm = 0, dp = 0, d2 = 0;
  if (v == "C") dm = 2, dp = 2, d2 = 1;
  if (v == "H") dm = 4, dp = 4, d2 = 3;
  if (v == "spR") dm = 1, dp = 1, d2 = 1;
  if (v == "sostar") dm = 4, dp = 4, d2 = 1;
  if (v == "R") dm = 1, dp = 1, d2 = 0;
  RestrictedDatum d;
  d.rank_aH = n;
  d.rank_aG = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      push(d, comb(n, {{i, 1}, {j, -1}}), dm, 0);
      push(d, comb(n, {{i, 1}, {j, 1}}), 0, dp);
    }
  for (int l = 0; l < n; ++l) push(d, comb(n, {{l, 2}}), 0, d2);
  if (n >= 2) d.h_root_system = RootSystemSpec{Family::A, n - 1};
  d.h_label = "gl(" + num(n) + ")";
  return d;
}

RestrictedDatum oustar_datum(int p, int q) {
  RestrictedDatum d;
  d.rank_aH = q;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      push(d, comb(q, {{i, 1}, {j, -1}}), 2, 2);
      push(d, comb(q, {{i, 1}, {j, 1}}), 2, 2);
    }
  for (int l = 0; l < q; ++l) {
    if (p > q) push(d, e(q, l), 2 * (p - q), 2 * (p - q));
    push(d, comb(q, {{l, 2}}), 1, 0);
  }
  if (p > q) d.h_root_system = RootSystemSpec{Family::BC, q};
  else if (q >= 3) d.h_root_system = RootSystemSpec{Family::C, q};
  else if (q == 2) d.h_root_system = RootSystemSpec{Family::B, 2};
  else d.h_root_system = RootSystemSpec{Family::BC, 1};
  d.h_label = "u(" + num(p) + "," + num(q) + ")";
  set_ambient(d, so_star(p + q));
  return d;
}

RestrictedDatum sp_datum(Field f, int p, int q) {
  int dd = f == Field::C ? 2 : 1;
  int n = p + q;
  RestrictedDatum d;
  d.rank_aH = n;
  d.rank_aG = n;
  auto block = [&](int i) { return i < p ? 0 : 1; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool same = block(i) == block(j);
      push(d, comb(n, {{i, 1}, {j, -1}}), same ? dd : 0, same ? 0 : dd);
      push(d, comb(n, {{i, 1}, {j, 1}}), same ? dd : 0, same ? 0 : dd);
    }
  for (int i = 0; i < n; ++i) push(d, comb(n, {{i, 2}}), dd, 0);
  d.h_label = std::string("sp(") + num(p) + ")+sp(" + num(q) + ")";
  return d;
}

// so(m+n,C) over so(m,C)+so(n,C): e-block of size floor(m/2), f-block of
// size floor(n/2).
RestrictedDatum somn_datum(int m, int n) {
  int a = m / 2, b = n / 2, r = a + b;
  RestrictedDatum d;
  d.rank_aH = r;
  auto within = [&](int off, int cnt) {
    for (int i = 0; i < cnt; ++i)
      for (int j = i + 1; j < cnt; ++j) {
        push(d, comb(r, {{off + i, 1}, {off + j, -1}}), 2, 0);
        push(d, comb(r, {{off + i, 1}, {off + j, 1}}), 2, 0);
      }
  };
  within(0, a);
  within(a, b);
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < b; ++k) {
      push(d, comb(r, {{i, 1}, {a + k, -1}}), 0, 2);
      push(d, comb(r, {{i, 1}, {a + k, 1}}), 0, 2);
    }
  for (int i = 0; i < a; ++i) push(d, e(r, i), m % 2 ? 2 : 0, n % 2 ? 2 : 0);
  for (int k = 0; k < b; ++k) push(d, e(r, a + k), n % 2 ? 2 : 0, m % 2 ? 2 : 0);
  d.h_label = "so(" + num(m) + ",C)+so(" + num(n) + ",C)";
  set_ambient(d, complex_so(m + n));
  return d;
}

// so*(2p+2q) over so*(2p)+so*(2q).
RestrictedDatum sostar_datum(int p, int q) {
  int a = p / 2, b = q / 2, r = a + b;
  RestrictedDatum d;
  d.rank_aH = r;
  auto within = [&](int off, int cnt) {
    for (int i = 0; i < cnt; ++i)
      for (int j = i + 1; j < cnt; ++j) {
        push(d, comb(r, {{off + i, 1}, {off + j, -1}}), 4, 0);
        push(d, comb(r, {{off + i, 1}, {off + j, 1}}), 4, 0);
      }
    for (int i = 0; i < cnt; ++i) push(d, comb(r, {{off + i, 2}}), 1, 0);
  };
  within(0, a);
  within(a, b);
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < b; ++k) {
      push(d, comb(r, {{i, 1}, {a + k, -1}}), 0, 4);
      push(d, comb(r, {{i, 1}, {a + k, 1}}), 0, 4);
    }
  for (int i = 0; i < a; ++i) push(d, e(r, i), p % 2 ? 4 : 0, q % 2 ? 4 : 0);
  for (int k = 0; k < b; ++k) push(d, e(r, a + k), q % 2 ? 4 : 0, p % 2 ? 4 : 0);
  d.h_label = "so*(" + num(2 * p) + ")+so*(" + num(2 * q) + ")";
  set_ambient(d, so_star(p + q));
  return d;
}

RestrictedDatum e6so91_datum() {
  RestrictedDatum d;
  d.rank_aH = 2;
  d.rank_aG = 2;
  push(d, comb(2, {{0, 1}, {1, 1}}), 8, 0);
  push(d, e(2, 0), 0, 8);
  push(d, e(2, 1), 0, 8);
  d.h_label = "so(9,1)+R";
  return d;
}

RestrictedDatum eso82_datum() {
  RestrictedDatum d;
  d.rank_aH = 2;
  d.rank_aG = 2;
  push(d, comb(2, {{0, 1}, {1, -1}}), 1, 7);
  push(d, comb(2, {{0, 1}, {1, 1}}), 1, 7);
  push(d, e(2, 0), 6, 0);
  push(d, e(2, 1), 6, 0);
  push(d, comb(2, {{0, 2}}), 0, 1);
  push(d, comb(2, {{1, 2}}), 0, 1);
  d.h_root_system = RootSystemSpec{Family::B, 2};
  d.h_label = "so(8,2)+iR";
  return d;
}

RestrictedDatum riem_datum(const PairSpec& s) {
  RestrictedDatum d;
  d.rank_aH = 0;
  int p = s.params[0], q = s.params[1];
  RealForm g = s.tag == "o" ? so_pq(p, q) : s.tag == "su" ? su_pq(p, q) : sp_pq(p, q);
  d.h_label = "maximal compact";
  set_ambient(d, g);
  return d;
}

RestrictedDatum compact_group_datum() {
  RestrictedDatum d;
  d.h_label = "compact";
  return d;
}

std::string rank1_alias_of_group(const PairSpec& s, int* m) {
  if (s.tag == "o") return *m = s.params[0] - 1, "II^c";
  if (s.tag == "su") return *m = s.params[0] - 1, "slC^c";
  if (s.tag == "sp") return *m = s.params[0] - 1, "spC^c";
  if (s.tag == "f4") return *m = -1, "f4C^c";
  return "";
}

PairSpec group_as_rank1(const PairSpec& s) {
  int m = 0;
  std::string row = rank1_alias_of_group(s, &m);
  PairSpec r{Kind::Rank1, Field::None, row, "", {}};
  if (m >= 0) r.params = {m};
  return r;
}

}  // namespace

RestrictedDatum datum_of(const PairSpec& in) {
  PairSpec s = canonical(in);
  const auto& P = s.params;
  RestrictedDatum d;
  switch (s.kind) {
    case Kind::Ugl: d = ugl_datum(s.tag, P[0]); break;
    case Kind::Rank1: d = rank1_datum(s); break;
    case Kind::Oustar: d = oustar_datum(P[0], P[1]); break;
    case Kind::Sp: d = sp_datum(s.field, P[0], P[1]); break;
    case Kind::Somn: d = somn_datum(P[0], P[1]); break;
    case Kind::Sostar: d = sostar_datum(P[0], P[1]); break;
    case Kind::E6so91: d = e6so91_datum(); break;
    case Kind::Exc7:
      if (s.tag == "e614_so82") d = eso82_datum();
      else if (s.tag == "e626_so91") d = e6so91_datum();
      else if (s.tag == "f420_so81") d = rank1_datum(PairSpec{Kind::Rank1, Field::None, "I_O", "", {}});
      else throw Error(Errc::DatumUnavailable, "exc7 row " + s.tag + " is stored as aggregates only");
      break;
    case Kind::Group:
      if (s.tag == "compact") {
        d = compact_group_datum();
      } else if (s.tag == "rank") {
        throw Error(Errc::DatumUnavailable, "generic group case carries no root data");
      } else {
        d = rank1_datum(group_as_rank1(s));
      }
      break;
    case Kind::Riem:
      if (s.tag == "named") throw Error(Errc::DatumUnavailable, "named Riemannian pair " + s.name);
      d = riem_datum(s);
      break;
    case Kind::Nonke: {
      const PairSpec& t = nonke_row(s.tag).target;
      if (!has_datum(t)) throw Error(Errc::DatumUnavailable, "nonke row " + s.tag + " reduces to " + to_string(t));
      d = datum_of(t);
      break;
    }
    default:
      throw Error(Errc::DatumUnavailable, std::string(kind_name(s.kind)) + " carries rules and aggregates only");
  }
  d.name = pair_name(s);
  validate(d);
  return d;
}

bool has_datum(const PairSpec& in) {
  PairSpec s = canonical(in);
  switch (s.kind) {
    case Kind::Ugl:
    case Kind::Rank1:
    case Kind::Oustar:
    case Kind::Sp:
    case Kind::Somn:
    case Kind::Sostar:
    case Kind::E6so91:
      return true;
    case Kind::Exc7:
      return s.tag == "e614_so82" || s.tag == "e626_so91" || s.tag == "f420_so81";
    case Kind::Group:
      return s.tag != "rank";
    case Kind::Riem:
      return s.tag != "named";
    case Kind::Nonke:
      return has_datum(nonke_row(s.tag).target);
    default:
      return false;
  }
}

std::optional<DerivedInvariants> invariants_of(const PairSpec& in) {
  PairSpec s = canonical(in);
  if (has_datum(s)) return derive(datum_of(s));
  const auto& P = s.params;
  switch (s.kind) {
    case Kind::Upq: {
      int i = P[0], j = P[1], k = P[2], l = P[3], dd = fdim(s.field);
      RealForm g = u_pq(i + j, k + l, dd);
      int nH = u_pq(i, k, dd).nG + u_pq(j, l, dd).nG;
      return from_aggregates(std::min(i, k) + std::min(j, l), g.rank, g.mG, g.nG, nH);
    }
    case Kind::Glgl: {
      int p = P[0], q = P[1], dd = fdim(s.field), n = p + q;
      return from_aggregates(n, n, dd, dd * n * (n - 1) / 2, dd * (p * (p - 1) + q * (q - 1)) / 2);
    }
    case Kind::Exc7: {
      const Exc7Row& r = exc7_row(s.tag);
      return from_aggregates(r.rank, r.rank, r.mG, r.nG, r.nH);
    }
    case Kind::Nonke:
      return invariants_of(nonke_row(s.tag).target);
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------- links

namespace {

PairSpec upq_spec(Field f, int i, int j, int k, int l) {
  return canonical(PairSpec{Kind::Upq, f, "", "", {i, j, k, l}});
}

PairSpec r1(const std::string& row, std::vector<int> prm = {}) {
  return canonical(PairSpec{Kind::Rank1, Field::None, row, "", std::move(prm)});
}

PairSpec simple(Kind k, Field f, std::string tag, std::vector<int> prm) {
  return canonical(PairSpec{k, f, std::move(tag), "", std::move(prm)});
}

std::string toggle_dual(const std::string& id) {
  auto pos = id.find("^c");
  return pos == std::string::npos ? id + "^c" : id.substr(0, pos);
}

// Fixed low-rank coincidences, both directions are used.
const std::vector<std::pair<PairSpec, PairSpec>>& fixed_reductions() {
  static const std::vector<std::pair<PairSpec, PairSpec>> v = [] {
    std::vector<std::pair<PairSpec, PairSpec>> out = {
        // (o(5,1), o(4)+o(1,1)) ~ (su*(4), su(2)+su*(2)+R)
        {upq_spec(Field::R, 1, 4, 1, 0), simple(Kind::Glgl, Field::H, "", {1, 1})},
        // (u(1,1), gl(1,C)) ~ (o(2,1), o(1,1)) + (R, R), and its relatives
        {simple(Kind::Ugl, Field::None, "C", {1}), upq_spec(Field::R, 1, 1, 1, 0)},
        {simple(Kind::Ugl, Field::None, "spR", {1}), upq_spec(Field::R, 1, 1, 1, 0)},
        {simple(Kind::Ugl, Field::None, "sostar", {1}), upq_spec(Field::R, 1, 1, 1, 0)},
        {simple(Kind::Ugl, Field::None, "R", {2}), upq_spec(Field::R, 1, 1, 1, 0)},
        {simple(Kind::Ugl, Field::None, "H", {1}), upq_spec(Field::R, 1, 3, 1, 0)},
        {simple(Kind::Ugl, Field::None, "R", {3}), simple(Kind::Glgl, Field::R, "", {3, 1})},
        {simple(Kind::Sp, Field::R, "", {1, 1}), upq_spec(Field::R, 2, 1, 2, 0)},
        {simple(Kind::Sp, Field::C, "", {1, 1}), simple(Kind::Somn, Field::None, "", {4, 1})},
        {simple(Kind::Sostar, Field::None, "", {2, 2}), upq_spec(Field::R, 2, 4, 2, 0)},
        {simple(Kind::Oustar, Field::None, "", {2, 2}), upq_spec(Field::R, 4, 2, 2, 0)},
        {simple(Kind::Oustar, Field::None, "", {2, 2}), simple(Kind::Nonke, Field::None, "sostar8_u22", {})},
        {r1("I_O"), simple(Kind::Exc7, Field::None, "f420_so81", {})},
        {simple(Kind::E6so91, Field::None, "", {}), simple(Kind::Exc7, Field::None, "e626_so91", {})},
        {simple(Kind::Group, Field::None, "o", {2}), upq_spec(Field::R, 1, 1, 2, 0)},
        {simple(Kind::Group, Field::None, "o", {3}), simple(Kind::Somn, Field::None, "", {3, 1})},
        {simple(Kind::Group, Field::None, "f4", {}), r1("f4C^c")},
    };
    for (const auto& row : nonke_rows())
      out.push_back({simple(Kind::Nonke, Field::None, row.id, {}), row.target});
    return out;
  }();
  return v;
}

}  // namespace

std::vector<PairSpec> isomorphic_reductions(const PairSpec& in) {
  PairSpec s = canonical(in);
  std::vector<PairSpec> out;
  auto add = [&](const PairSpec& t) {
    if (t != s && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  for (const auto& [a, b] : fixed_reductions()) {
    if (a == s) add(b);
    if (b == s) add(a);
  }
  const auto& P = s.params;
  switch (s.kind) {
    case Kind::Rank1: {
      std::string base = s.tag.substr(0, s.tag.find('^'));
      bool dual = s.tag != base;
      if (base == "I_R" || base == "I_C" || base == "I_H") {
        Field f = base == "I_R" ? Field::R : base == "I_C" ? Field::C : Field::H;
        int p = P[0], q = P[1];
        add(dual ? upq_spec(f, p + 1, q, 1, 0) : upq_spec(f, 1, q, p + 1, 0));
      }
      if (base == "III" && !dual) add(simple(Kind::Oustar, Field::None, "", {P[0] + 1, 1}));
      if (dual && (base == "II" || base == "slC" || base == "spC")) {
        std::string sub = base == "II" ? "o" : base == "slC" ? "su" : "sp";
        add(simple(Kind::Group, Field::None, sub, {P[0] + 1}));
      }
      break;
    }
    case Kind::Group:
      if (s.tag == "o" || s.tag == "su" || s.tag == "sp") add(group_as_rank1(s));
      break;
    case Kind::Oustar:
      if (P[1] == 1 && P[0] >= 2) add(r1("III", {P[0] - 1}));
      break;
    case Kind::Upq: {
      // (1, q, p+1, 0) is I_F(p, q) and (p+1, q, 1, 0) is I_F^c(p, q); both
      // tuples are already canonical.
      std::string f = s.field == Field::R ? "I_R" : s.field == Field::C ? "I_C" : "I_H";
      int i = P[0], j = P[1], k = P[2], l = P[3];
      if (l == 0 && j >= 1 && i == 1 && k >= 1) add(r1(f, {k - 1, j}));
      if (l == 0 && j >= 1 && k == 1 && i >= 1) add(r1(f + "^c", {i - 1, j}));
      break;
    }
    default:
      break;
  }
  return out;
}

std::optional<PairSpec> c_dual_spec(const PairSpec& in) {
  PairSpec s = canonical(in);
  const auto& P = s.params;
  switch (s.kind) {
    case Kind::Upq:
      return upq_spec(s.field, P[0], P[3], P[2], P[1]);
    case Kind::Rank1: {
      if (s.tag == "I_O") return s;
      if (s.tag == "sl3C") return std::nullopt;
      return r1(toggle_dual(s.tag), P);
    }
    case Kind::Group:
      if (s.tag == "o") return r1("II", {P[0] - 1});
      if (s.tag == "su") return r1("slC", {P[0] - 1});
      if (s.tag == "sp") return r1("spC", {P[0] - 1});
      if (s.tag == "f4") return r1("f4C");
      return std::nullopt;
    case Kind::Oustar:
      if (P[1] == 1 && P[0] >= 2) return r1("III^c", {P[0] - 1});
      return std::nullopt;
    case Kind::Somn:
      return s;
    case Kind::Glgl:
    case Kind::Sp:
      if (s.field == Field::C) return s;
      return std::nullopt;
    case Kind::Exc7:
      if (s.tag == "f420_so81") return s;
      return std::nullopt;
    case Kind::Trivial:
      return s;
    default:
      return std::nullopt;
  }
}

std::string pair_name(const PairSpec& in) {
  PairSpec s = canonical(in);
  const auto& P = s.params;
  auto n = [](int v) { return std::to_string(v); };
  std::string F = field_letter(s.field);
  switch (s.kind) {
    case Kind::Upq: {
      std::string g = s.field == Field::R ? "o" : s.field == Field::C ? "u" : "sp";
      return "(" + g + "(" + n(P[0] + P[1]) + "," + n(P[2] + P[3]) + "), " + g + "(" + n(P[0]) + "," +
             n(P[2]) + ")+" + g + "(" + n(P[1]) + "," + n(P[3]) + "))";
    }
    case Kind::Glgl:
      return "(gl(" + n(P[0] + P[1]) + "," + F + "), gl(" + n(P[0]) + "," + F + ")+gl(" + n(P[1]) + "," + F + "))";
    case Kind::Somn:
      return "(so(" + n(P[0] + P[1]) + ",C), so(" + n(P[0]) + ",C)+so(" + n(P[1]) + ",C))";
    case Kind::Sostar:
      return "(so*(" + n(2 * P[0] + 2 * P[1]) + "), so*(" + n(2 * P[0]) + ")+so*(" + n(2 * P[1]) + "))";
    case Kind::Oustar:
      return "(o*(" + n(2 * P[0] + 2 * P[1]) + "), u(" + n(P[0]) + "," + n(P[1]) + "))";
    case Kind::Sp:
      return "(sp(" + n(P[0] + P[1]) + "," + F + "), sp(" + n(P[0]) + "," + F + ")+sp(" + n(P[1]) + "," + F + "))";
    case Kind::Ugl: {
      int k = P[0];
      if (s.tag == "C") return "(u(" + n(k) + "," + n(k) + "), gl(" + n(k) + ",C))";
      if (s.tag == "H") return "(sp(" + n(k) + "," + n(k) + "), gl(" + n(k) + ",H))";
      if (s.tag == "R") return "(o(" + n(k) + "," + n(k) + "), gl(" + n(k) + ",R))";
      if (s.tag == "spR") return "(sp(" + n(k) + ",R), gl(" + n(k) + ",R))";
      return "(so*(" + n(4 * k) + "), gl(" + n(k) + ",H))";
    }
    case Kind::Rank1: {
      const Rank1Row& r = rank1_row(s.tag);
      std::string out = "(" + r.g + ", " + r.h + ")";
      if (r.nparams == 2) out += " p=" + n(P[0]) + " q=" + n(P[1]);
      if (r.nparams == 1) out += " m=" + n(P[0]);
      return out;
    }
    case Kind::Exc7: {
      const Exc7Row& r = exc7_row(s.tag);
      return "(" + r.g + ", " + r.h + ")";
    }
    case Kind::E6so91:
      return "(e6(-26), so(9,1)+R)";
    case Kind::Group:
      if (s.tag == "o") return "(o(" + n(P[0]) + ",1)+o(" + n(P[0]) + ",1), diag)";
      if (s.tag == "su") return "(su(" + n(P[0]) + ",1)+su(" + n(P[0]) + ",1), diag)";
      if (s.tag == "sp") return "(sp(" + n(P[0]) + ",1)+sp(" + n(P[0]) + ",1), diag)";
      if (s.tag == "f4") return "(f4(-20)+f4(-20), diag)";
      if (s.tag == "compact") return "(g'+g', diag g'), g' compact of type " + s.name;
      return "(g'+g', diag g'), rank g' = " + n(P[0]);
    case Kind::Riem:
      if (s.tag == "named") return "(" + s.name + ", k)";
      return "(" + s.tag + "(" + n(P[0]) + "," + n(P[1]) + "), maximal compact)";
    case Kind::Nonke: {
      const NonkeRow& r = nonke_row(s.tag);
      return r.lhs;
    }
    case Kind::Trivial:
      return "(g, g)";
    case Kind::Abelian:
      return "(R, 0)";
    case Kind::Compact:
      return "(" + s.name + ", h) compact";
  }
  return "?";
}

// ---------------------------------------------------------------- enumerate

std::vector<PairSpec> enumerate(Kind k, int bound, Field f) {
  std::set<PairSpec> out;
  auto tryadd = [&](PairSpec s) {
    try {
      out.insert(canonical(s));
    } catch (const Error&) {
    }
  };
  auto fields = [&](std::initializer_list<Field> all) {
    std::vector<Field> v;
    for (Field x : all)
      if (f == Field::None || f == x) v.push_back(x);
    return v;
  };
  switch (k) {
    case Kind::Upq:
      for (Field x : fields({Field::R, Field::C, Field::H}))
        for (int i = 0; i <= bound; ++i)
          for (int j = 0; j <= bound; ++j)
            for (int a = 0; a <= bound; ++a)
              for (int l = 0; l <= bound; ++l) tryadd({k, x, "", "", {i, j, a, l}});
      break;
    case Kind::Glgl:
    case Kind::Sp:
      for (Field x : fields(k == Kind::Sp ? std::initializer_list<Field>{Field::R, Field::C}
                                          : std::initializer_list<Field>{Field::R, Field::C, Field::H}))
        for (int p = 1; p <= bound; ++p)
          for (int q = 1; q <= bound; ++q) tryadd({k, x, "", "", {p, q}});
      break;
    case Kind::Somn:
    case Kind::Sostar:
    case Kind::Oustar:
      for (int p = 1; p <= bound; ++p)
        for (int q = 1; q <= bound; ++q) tryadd({k, Field::None, "", "", {p, q}});
      break;
    case Kind::Ugl:
      for (const auto& v : kUglVariants)
        for (int n = 1; n <= bound; ++n) tryadd({k, Field::None, v, "", {n}});
      break;
    case Kind::Rank1:
      for (const auto& r : rank1_rows()) {
        if (r.nparams == 0) tryadd({k, Field::None, r.id, "", {}});
        if (r.nparams == 1)
          for (int m = 1; m <= bound; ++m) tryadd({k, Field::None, r.id, "", {m}});
        if (r.nparams == 2)
          for (int p = 0; p <= bound; ++p)
            for (int q = 1; q <= bound; ++q) tryadd({k, Field::None, r.id, "", {p, q}});
      }
      break;
    case Kind::Exc7:
      for (const auto& r : exc7_rows()) tryadd({k, Field::None, r.id, "", {}});
      break;
    case Kind::Nonke:
      for (const auto& r : nonke_rows()) tryadd({k, Field::None, r.id, "", {}});
      break;
    case Kind::Group:
      for (const char* t : {"o", "su", "sp"})
        for (int n = 2; n <= bound; ++n) tryadd({k, Field::None, t, "", {n}});
      tryadd({k, Field::None, "f4", "", {}});
      break;
    case Kind::Riem:
      for (const char* t : {"o", "su", "sp"})
        for (int p = 1; p <= bound; ++p)
          for (int q = 1; q <= bound; ++q) tryadd({k, Field::None, t, "", {p, q}});
      break;
    case Kind::E6so91:
    case Kind::Trivial:
    case Kind::Abelian:
      tryadd({k, Field::None, "", "", {}});
      break;
    case Kind::Compact:
      break;
  }
  return {out.begin(), out.end()};
}

}  // namespace realspher
