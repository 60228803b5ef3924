#pragma once

// Restricted root data of a symmetric pair: Sigma(g, a_H) with the
// multiplicity split m+ / m- under the involution.

#include <optional>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace realspher {

struct MultRoot {
  Weight weight;
  int m_plus = 0;
  int m_minus = 0;
  bool operator==(const MultRoot&) const = default;
};

struct RestrictedDatum {
  int rank_aH = 0;
  int rank_aG = 0;
  std::vector<MultRoot> positive_roots;
  // Sigma(h, a_H) when it is irreducible and realized in the same coordinates;
  // otherwise h_label describes it ("A1+A1", "reducible", ...).
  std::optional<RootSystemSpec> h_root_system;
  std::string h_label;
  std::optional<int> mG_value;  // m(G) when rank_aG > rank_aH
  std::optional<int> nG_value;  // n(G) when rank_aG > rank_aH
  std::string name;             // pair label, informational
  bool operator==(const RestrictedDatum&) const = default;
};

struct DerivedInvariants {
  std::vector<Weight> delta_n_minus;
  int delta_n_minus_count = 0;
  int dim_n_minus = 0;
  int nG = 0;
  int nH = 0;
  int mG = 0;
  int rank_aH = 0;
  int rank_aG = 0;
  bool rank_equal = false;
  bool has_roots = true;  // false when built from table aggregates only
};

// Throws InvalidDatum describing the first violated invariant.
void validate(const RestrictedDatum& d);

std::vector<Weight> delta_n_minus(const RestrictedDatum& d);

DerivedInvariants derive(const RestrictedDatum& d);

// Aggregates only (no root data), e.g. a row of the exceptional table.
DerivedInvariants from_aggregates(int rank_aH, int rank_aG, int mG, int nG, int nH);

// Same (weight, m+, m-) content; the ambient real form changes, so rank_aG and
// the a_G-level overrides come from the caller.
RestrictedDatum c_dual(const RestrictedDatum& d, int rank_aG_dual,
                       std::optional<int> mG_dual = std::nullopt,
                       std::optional<int> nG_dual = std::nullopt,
                       const std::string& name_dual = {});

bool linearly_independent(const std::vector<Weight>& ws);
bool check_independence(const RestrictedDatum& d);

std::string format_weight(const Weight& w);  // "2e1", "e1-e2", "0"

}  // namespace realspher
