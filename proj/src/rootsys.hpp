#pragma once

// Root systems with exact rational coordinates and Weyl orbit statistics.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace realspher {

using Weight = Vec;

enum class Family { A, B, C, D, E, F, G, BC };

struct RootSystemSpec {
  Family family;
  int rank;
  bool operator==(const RootSystemSpec&) const = default;
};

std::string to_string(const RootSystemSpec& s);
// Accepts "A3", "BC2", "E8" (case-insensitive family letters).
RootSystemSpec parse_root_system(const std::string& text);
bool in_bounds(const RootSystemSpec& s);
bool is_classical(Family f);

struct RootSystem {
  RootSystemSpec spec;
  int ambient_dim = 0;
  std::vector<Weight> simple_roots;
  std::vector<Weight> roots;           // sorted
  std::vector<Weight> positive_roots;  // sorted
  std::vector<Weight> fundamental_weights;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  mpz_class weyl_order;

  Mat gram_inv;  // inverse Gram matrix of the simple roots, for projection
};

RootSystem build(const RootSystemSpec& spec);

// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)
Q coroot_pairing(const Weight& lambda, const Weight& alpha);
Weight reflect(const Weight& lambda, const Weight& alpha);

// Orthogonal projection onto the span of the roots. For A_n this is the
// trace-zero projection. Throws AmbientMismatch on a wrong length.
Weight canonicalize(const RootSystem& rs, const Weight& lambda);

// Coefficients of a vector in the span of the simple roots, in that basis.
Vec simple_coordinates(const RootSystem& rs, const Weight& v);

Weight dominant_representative(const RootSystem& rs, const Weight& lambda);

// Weyl group order of the parabolic subsystem on the given simple-root indices
// (0-based), from the Dynkin type of each connected component.
mpz_class parabolic_weyl_order(const RootSystem& rs, const std::vector<int>& nodes);

mpz_class orbit_size(const RootSystem& rs, const Weight& lambda);

// Reflection BFS; stops once the orbit exceeds cap (then returns cap + 1).
// cap == 0 means unbounded.
size_t orbit_bfs(const RootSystem& rs, const Weight& lambda, size_t cap = 0);

// c(Delta) = #W / max_i #W(l_i)
mpz_class min_orbit_size(const RootSystem& rs);

// 1-based indices i with orbit_size(omega_i) <= 2 * rank. Empty for E, F, G.
std::vector<int> minimal_orbit_rays(const RootSystem& rs);

// D_4: the outer triality permutes omega_1, omega_3, omega_4.
bool has_triality(const RootSystem& rs);

// Degree-product formula.
mpz_class weyl_order_formula(Family f, int rank);

}  // namespace realspher
