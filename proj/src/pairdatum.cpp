#include "pairdatum.hpp"

#include <algorithm>
#include <set>

namespace realspher {

namespace {

bool lex_positive(const Weight& w) {
  for (const auto& x : w) {
    if (sgn(x) > 0) return true;
    if (sgn(x) < 0) return false;
  }
  return false;
}

[[noreturn]] void bad(const RestrictedDatum& d, const std::string& what) {
  throw Error(Errc::InvalidDatum, (d.name.empty() ? std::string("datum") : d.name) + ": " + what);
}

}  // namespace

std::string format_weight(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    const Q& c = w[i];
    if (sgn(c) == 0) continue;
    std::string term;
    Q a = abs(c);
    if (a != 1) term = a.get_str();
    term += "e" + std::to_string(i + 1);
    if (sgn(c) < 0)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

void validate(const RestrictedDatum& d) {
  if (d.rank_aH < 0) bad(d, "negative rank_aH");
  if (d.rank_aG < d.rank_aH) bad(d, "rank_aG < rank_aH");
  std::set<Weight> seen;
  Mat span;
  for (const auto& r : d.positive_roots) {
    if (static_cast<int>(r.weight.size()) != d.rank_aH)
      bad(d, "weight " + format_weight(r.weight) + " not in a space of dimension rank_aH");
    if (is_zero(r.weight)) bad(d, "zero weight stored");
    if (r.m_plus < 0 || r.m_minus < 0 || r.m_plus + r.m_minus < 1)
      bad(d, "multiplicities of " + format_weight(r.weight) + " must be >= 0 with positive sum");
    if (!lex_positive(r.weight))
      bad(d, "weight " + format_weight(r.weight) + " is not in the positive half-space");
    if (!seen.insert(r.weight).second) bad(d, "duplicate weight " + format_weight(r.weight));
    span.push_back(r.weight);
  }
  if (!span.empty() && rank_of(span) != d.rank_aH) bad(d, "stored weights do not span a_H*");
  if (d.h_root_system) {
    RootSystem rs = build(*d.h_root_system);
    if (rs.ambient_dim != d.rank_aH) bad(d, "h root system lives in a different ambient space");
    std::set<Weight> h;
    for (const auto& r : d.positive_roots)
      if (r.m_plus > 0) {
        h.insert(r.weight);
        h.insert(scale(-1, r.weight));
      }
    for (const auto& w : h)
      for (const auto& a : rs.simple_roots)
        if (!h.count(reflect(w, a)))
          bad(d, "h-roots not closed under the Weyl group of " + to_string(*d.h_root_system));
  }
}

std::vector<Weight> delta_n_minus(const RestrictedDatum& d) {
  std::vector<Weight> out;
  for (const auto& r : d.positive_roots)
    if (r.m_minus > 0) out.push_back(r.weight);
  return out;
}

DerivedInvariants derive(const RestrictedDatum& d) {
  DerivedInvariants inv;
  inv.delta_n_minus = delta_n_minus(d);
  inv.delta_n_minus_count = static_cast<int>(inv.delta_n_minus.size());
  inv.rank_aH = d.rank_aH;
  inv.rank_aG = d.rank_aG;
  inv.rank_equal = d.rank_aG == d.rank_aH;
  int max_total = 0;
  for (const auto& r : d.positive_roots) {
    inv.nH += r.m_plus;
    inv.dim_n_minus += r.m_minus;
    max_total = std::max(max_total, r.m_plus + r.m_minus);
  }
  if (inv.rank_equal) {
    inv.nG = inv.nH + inv.dim_n_minus;
    inv.mG = d.mG_value ? *d.mG_value : max_total;
  } else {
    if (!d.mG_value || !d.nG_value)
      throw Error(Errc::IncompleteDatum,
                  (d.name.empty() ? std::string("datum") : d.name) +
                      ": rank_aG > rank_aH needs m(G) and n(G) from the family tables");
    inv.mG = *d.mG_value;
    inv.nG = *d.nG_value;
  }
  return inv;
}

DerivedInvariants from_aggregates(int rank_aH, int rank_aG, int mG, int nG, int nH) {
  DerivedInvariants inv;
  inv.rank_aH = rank_aH;
  inv.rank_aG = rank_aG;
  inv.rank_equal = rank_aH == rank_aG;
  inv.mG = mG;
  inv.nG = nG;
  inv.nH = nH;
  inv.dim_n_minus = inv.rank_equal ? nG - nH : 0;
  inv.has_roots = false;
  return inv;
}

RestrictedDatum c_dual(const RestrictedDatum& d, int rank_aG_dual, std::optional<int> mG_dual,
                       std::optional<int> nG_dual, const std::string& name_dual) {
  RestrictedDatum out = d;
  out.rank_aG = rank_aG_dual;
  out.mG_value = mG_dual;
  out.nG_value = nG_dual;
  if (!name_dual.empty()) out.name = name_dual;
  return out;
}

bool linearly_independent(const std::vector<Weight>& ws) {
  return rank_of(ws) == static_cast<int>(ws.size());
}

bool check_independence(const RestrictedDatum& d) {
  return linearly_independent(delta_n_minus(d));
}

}  // namespace realspher
