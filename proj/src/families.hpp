#pragma once

// Symmetric-pair families: spec grammar, canonical forms, classification
// rules, restricted-datum generators and the fixed exceptional tables.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairdatum.hpp"
#include "realforms.hpp"

namespace realspher {

enum class Tri { No, Yes, Unknown };
const char* tri_name(Tri t);  // "no" / "yes" / "unknown"
Tri parse_tri(std::string_view s);  // throws Schema
inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

enum class Kind {
  Upq,        // (U(i+j,k+l;F), U(i,k;F) x U(j,l;F))
  Glgl,       // (GL(p+q,F), GL(p,F) x GL(q,F))
  Somn,       // (so(m+n,C), so(m,C)+so(n,C))
  Sostar,     // (so*(2p+2q), so*(2p)+so*(2q))
  Ugl,        // type (C_n, A_n) pairs
  Oustar,     // (o*(2p+2q), u(p,q))
  Sp,         // (sp(p+q,F), sp(p,F)+sp(q,F)), F = R or C
  Rank1,      // rank_R h = 1 table rows
  Exc7,       // exceptional table rows
  E6so91,     // (e6(-26), so(9,1)+R)
  Group,      // (g'+g', diag g')
  Riem,       // Riemannian (g, k)
  Nonke,      // low-rank isomorphism rows outside the K_eps family
  Trivial,    // g = h
  Abelian,    // (R, 0)
  Compact,    // g compact simple
};

enum class Field { None, R, C, H, O };

struct PairSpec {
  Kind kind = Kind::Trivial;
  Field field = Field::None;
  std::string tag;          // row id, variant or sub-kind
  std::string name;         // free-form name (compact, named Riemannian)
  std::vector<int> params;
  auto operator<=>(const PairSpec&) const = default;
};

// Grammar (whitespace separated, family keyword first):
//   upq F i j k l | glgl F p q | somn m n | sostar p q | ugl V n
//   oustar p q | sp F p q | rank1 ROW [p q | m] | exc7 ROW | e6so91
//   group o n | group su n | group sp n | group f4 | group compact TYPE
//   group rank K | riem o p q | riem su p q | riem sp p q | riem named NAME
//   nonke ROW | trivial | abelian | compact NAME
// F in {R,C,H}; V in {C,H,R,spR,sostar}. Parse errors carry the token
// index and column. The result is canonicalized and range checked.
PairSpec parse_spec(const std::string& text);
std::string to_string(const PairSpec& s);

// Throws InvalidSpec when out of range. Idempotent.
PairSpec canonical(const PairSpec& s);

struct FamilyRule {
  Tri qp = Tri::Unknown;
  Tri pp = Tri::Unknown;
  Tri bb = Tri::Unknown;
  std::string rule_id;
  std::string source;  // short statement of the deciding condition
};

FamilyRule rule_of(const PairSpec& s);

// Throws DatumUnavailable where no root-level data is modelled.
RestrictedDatum datum_of(const PairSpec& s);
bool has_datum(const PairSpec& s);

// From the datum when available, otherwise from stored or closed-form
// aggregates. Empty when neither exists.
std::optional<DerivedInvariants> invariants_of(const PairSpec& s);

std::optional<PairSpec> c_dual_spec(const PairSpec& s);
std::vector<PairSpec> isomorphic_reductions(const PairSpec& s);

// Human-readable (g, h).
std::string pair_name(const PairSpec& s);

// All canonical specs of the given kind with every integer parameter <= bound.
// field == None means every admissible field or variant. Rank1 enumerates
// every row.
std::vector<PairSpec> enumerate(Kind k, int bound, Field f = Field::None);

const char* kind_name(Kind k);

// Rank-one table.
struct Rank1Row {
  std::string id;         // "I_R", "II^c", "slR", ...
  std::string g, h;
  int mp1, mp2, mm1, mm2;  // m+(l) m+(2l) ; m-(l) m-(2l)
  int nparams;            // 0, 1 (m) or 2 (p q)
  bool dual;              // the ^c member of a row
};
const std::vector<Rank1Row>& rank1_rows();
const Rank1Row& rank1_row(const std::string& id);
// The 17 printed rows (one representative per shared row).
std::vector<std::string> rank1_table_ids();
// Table rows selected by the count test #{mu : m-(mu) > 0} <= 1.
int rank1_minus_count(const Rank1Row& r);

// Exceptional table, stored as printed.
struct Exc7Row {
  std::string id, g, h;
  int rank, mG, nG, nH;
  std::string printed;  // e.g. "16<20": left m(G) rank, right n(G)-n(H)
};
const std::vector<Exc7Row>& exc7_rows();
const Exc7Row& exc7_row(const std::string& id);

struct NonkeRow {
  std::string id, lhs, rhs;
  PairSpec target;
};
const std::vector<NonkeRow>& nonke_rows();

}  // namespace realspher
