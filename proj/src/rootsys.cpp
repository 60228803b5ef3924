#include "rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace realspher {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Weight unit(int dim, int i, const Q& c = 1) {
  Weight v(dim, Q(0));
  v[i] = c;
  return v;
}

Weight e_diff(int dim, int i, int j) {  // e_i - e_j, 0-based
  Weight v(dim, Q(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Bourbaki simple roots of E8 in R^8; E7, E6 take the first 7, 6.
std::vector<Weight> e8_simple() {
  std::vector<Weight> s;
  Weight a1(8, Q(-1, 2));
  a1[0] = Q(1, 2);
  a1[7] = Q(1, 2);
  s.push_back(a1);
  Weight a2(8, Q(0));
  a2[0] = 1;
  a2[1] = 1;
  s.push_back(a2);
  for (int i = 0; i < 6; ++i) s.push_back(e_diff(8, i + 1, i));
  return s;
}

std::vector<Weight> simple_roots_for(const RootSystemSpec& sp, int& dim) {
  const int n = sp.rank;
  std::vector<Weight> s;
  switch (sp.family) {
    case Family::A:
      dim = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(e_diff(dim, i, i + 1));
      break;
    case Family::B:
    case Family::BC:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_diff(dim, i, i + 1));
      s.push_back(unit(dim, n - 1));
      break;
    case Family::C:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_diff(dim, i, i + 1));
      s.push_back(unit(dim, n - 1, 2));
      break;
    case Family::D: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_diff(dim, i, i + 1));
      Weight last(dim, Q(0));
      last[n - 2] = 1;
      last[n - 1] = 1;
      s.push_back(last);
      break;
    }
    case Family::E: {
      dim = 8;
      auto all = e8_simple();
      s.assign(all.begin(), all.begin() + n);
      break;
    }
    case Family::F: {
      dim = 4;
      s.push_back(e_diff(4, 1, 2));
      s.push_back(e_diff(4, 2, 3));
      s.push_back(unit(4, 3));
      Weight a4(4, Q(-1, 2));
      a4[0] = Q(1, 2);
      s.push_back(a4);
      break;
    }
    case Family::G: {
      dim = 3;
      s.push_back(e_diff(3, 0, 1));
      Weight a2(3, Q(1));
      a2[0] = -2;
      s.push_back(a2);
      break;
    }
  }
  return s;
}

std::vector<int> degrees(Family f, int n) {
  std::vector<int> d;
  switch (f) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

// Dynkin type of a connected sub-diagram, returned as (family, rank). B and C
// are not told apart since only the Weyl order is needed.
RootSystemSpec component_type(const RootSystem& rs, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return {Family::A, 1};
  std::vector<int> deg(n, 0);
  int max_bond = 1;
  std::pair<int, int> multi_edge{-1, -1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int m = rs.cartan[comp[a]][comp[b]] * rs.cartan[comp[b]][comp[a]];
      if (m == 0) continue;
      ++deg[a];
      ++deg[b];
      if (m > 1) {
        max_bond = std::max(max_bond, m);
        multi_edge = {a, b};
      }
    }
  if (max_bond == 3) return {Family::G, 2};
  if (max_bond == 2) {
    if (n == 4 && deg[multi_edge.first] == 2 && deg[multi_edge.second] == 2)
      return {Family::F, 4};
    return {Family::B, n};
  }
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (deg[a] == 3) branch = a;
  if (branch < 0) return {Family::A, n};
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch) continue;
    if (rs.cartan[comp[branch]][comp[start]] == 0) continue;
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      int next = -1;
      for (int c = 0; c < n; ++c)
        if (c != prev && c != cur && rs.cartan[comp[cur]][comp[c]] != 0) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  return {Family::E, n};
}

}  // namespace

std::string to_string(const RootSystemSpec& s) {
  return std::string(family_letter(s.family)) + std::to_string(s.rank);
}

bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D ||
         f == Family::BC;
}

bool in_bounds(const RootSystemSpec& s) {
  switch (s.family) {
    case Family::A: return s.rank >= 1;
    case Family::B: return s.rank >= 2;
    case Family::C: return s.rank >= 3;
    case Family::D: return s.rank >= 4;
    case Family::E: return s.rank >= 6 && s.rank <= 8;
    case Family::F: return s.rank == 4;
    case Family::G: return s.rank == 2;
    case Family::BC: return s.rank >= 1;
  }
  return false;
}

RootSystemSpec parse_root_system(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.find('+') != std::string::npos || t.find('x') != std::string::npos ||
      t.find('X') != std::string::npos)
    throw Error(Errc::NotIrreducible, "only irreducible root systems are supported: " + text);
  size_t k = 0;
  while (k < t.size() && std::isalpha(static_cast<unsigned char>(t[k]))) ++k;
  std::string fam = t.substr(0, k);
  for (auto& ch : fam) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::string num = t.substr(k);
  if (fam.empty() || num.empty() ||
      !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      num.size() > 4)
    throw Error(Errc::InvalidSpec, "cannot parse root system '" + text + "'");
  static const std::map<std::string, Family> names = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  auto it = names.find(fam);
  if (it == names.end()) throw Error(Errc::InvalidSpec, "unknown family '" + fam + "'");
  RootSystemSpec s{it->second, std::stoi(num)};
  if (!in_bounds(s)) throw Error(Errc::InvalidSpec, "rank out of bounds: " + to_string(s));
  return s;
}

Q coroot_pairing(const Weight& lambda, const Weight& alpha) {
  return 2 * dot(lambda, alpha) / dot(alpha, alpha);
}

Weight reflect(const Weight& lambda, const Weight& alpha) {
  return sub(lambda, scale(coroot_pairing(lambda, alpha), alpha));
}

mpz_class weyl_order_formula(Family f, int rank) {
  mpz_class w = 1;
  for (int d : degrees(f, rank)) w *= d;
  return w;
}

Vec simple_coordinates(const RootSystem& rs, const Weight& v) {
  const size_t n = rs.simple_roots.size();
  Vec rhs(n);
  for (size_t j = 0; j < n; ++j) rhs[j] = dot(v, rs.simple_roots[j]);
  Vec c(n, Q(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c[i] += rs.gram_inv[i][j] * rhs[j];
  return c;
}

Weight canonicalize(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.ambient_dim)
    throw Error(Errc::AmbientMismatch, "weight has " + std::to_string(lambda.size()) +
                                           " coordinates, " + to_string(rs.spec) + " lives in R^" +
                                           std::to_string(rs.ambient_dim));
  Vec c = simple_coordinates(rs, lambda);
  Weight out(rs.ambient_dim, Q(0));
  for (size_t i = 0; i < c.size(); ++i) out = add(out, scale(c[i], rs.simple_roots[i]));
  return out;
}

Weight dominant_representative(const RootSystem& rs, const Weight& lambda) {
  Weight mu = canonicalize(rs, lambda);
  while (true) {
    int worst = -1;
    Q worst_val = 0;
    for (size_t i = 0; i < rs.simple_roots.size(); ++i) {
      Q p = coroot_pairing(mu, rs.simple_roots[i]);
      if (p < worst_val) {
        worst_val = p;
        worst = static_cast<int>(i);
      }
    }
    if (worst < 0) return mu;
    mu = reflect(mu, rs.simple_roots[worst]);
  }
}

mpz_class parabolic_weyl_order(const RootSystem& rs, const std::vector<int>& nodes) {
  std::set<int> left(nodes.begin(), nodes.end());
  mpz_class order = 1;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.cartan[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    RootSystemSpec t = component_type(rs, comp);
    order *= weyl_order_formula(t.family, t.rank);
  }
  return order;
}

mpz_class orbit_size(const RootSystem& rs, const Weight& lambda) {
  Weight mu = dominant_representative(rs, lambda);
  std::vector<int> stab;
  for (size_t i = 0; i < rs.simple_roots.size(); ++i)
    if (sgn(coroot_pairing(mu, rs.simple_roots[i])) == 0) stab.push_back(static_cast<int>(i));
  return rs.weyl_order / parabolic_weyl_order(rs, stab);
}

size_t orbit_bfs(const RootSystem& rs, const Weight& lambda, size_t cap) {
  Weight start = canonicalize(rs, lambda);
  std::set<Weight> seen{start};
  std::deque<Weight> todo{start};
  while (!todo.empty()) {
    Weight w = std::move(todo.front());
    todo.pop_front();
    for (const auto& a : rs.simple_roots) {
      Weight r = reflect(w, a);
      if (seen.insert(r).second) {
        if (cap != 0 && seen.size() > cap) return cap + 1;
        todo.push_back(std::move(r));
      }
    }
  }
  return seen.size();
}

mpz_class min_orbit_size(const RootSystem& rs) {
  const int n = rs.spec.rank;
  mpz_class best_levi = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> levi;
    for (int j = 0; j < n; ++j)
      if (j != i) levi.push_back(j);
    mpz_class w = parabolic_weyl_order(rs, levi);
    if (w > best_levi) best_levi = w;
  }
  return rs.weyl_order / best_levi;
}

std::vector<int> minimal_orbit_rays(const RootSystem& rs) {
  std::vector<int> out;
  if (!is_classical(rs.spec.family)) return out;
  for (int i = 0; i < rs.spec.rank; ++i)
    if (orbit_size(rs, rs.fundamental_weights[i]) <= 2 * rs.spec.rank) out.push_back(i + 1);
  return out;
}

bool has_triality(const RootSystem& rs) {
  return rs.spec.family == Family::D && rs.spec.rank == 4;
}

RootSystem build(const RootSystemSpec& spec) {
  if (!in_bounds(spec)) throw Error(Errc::InvalidSpec, "rank out of bounds: " + to_string(spec));
  RootSystem rs;
  rs.spec = spec;
  rs.simple_roots = simple_roots_for(spec, rs.ambient_dim);
  const int n = spec.rank;

  Mat gram(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  rs.gram_inv = inverse(gram);

  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Q c = coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]);
      rs.cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // roots: closure of the simple roots under simple reflections
  std::set<Weight> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Weight> todo(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!todo.empty()) {
    Weight w = todo.front();
    todo.pop_front();
    for (const auto& a : rs.simple_roots) {
      Weight r = reflect(w, a);
      if (roots.insert(r).second) todo.push_back(r);
    }
  }
  if (spec.family == Family::BC)
    for (int i = 0; i < n; ++i) {
      roots.insert(unit(n, i, 2));
      roots.insert(unit(n, i, -2));
    }
  rs.roots.assign(roots.begin(), roots.end());
  for (const auto& r : rs.roots) {
    Vec c = simple_coordinates(rs, r);
    bool pos = std::all_of(c.begin(), c.end(), [](const Q& x) { return sgn(x) >= 0; });
    if (pos) rs.positive_roots.push_back(r);
  }

  // omega_i = sum_k x_k alpha_k with x M = e_i, M[k][j] = <alpha_k, alpha_j^vee>
  Mat m(n, Vec(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m[k][j] = rs.cartan[k][j];
  Mat minv = inverse(m);
  for (int i = 0; i < n; ++i) {
    Weight w(rs.ambient_dim, Q(0));
    for (int k = 0; k < n; ++k) w = add(w, scale(minv[i][k], rs.simple_roots[k]));
    rs.fundamental_weights.push_back(w);
  }

  rs.weyl_order = weyl_order_formula(spec.family, n);
  if (n <= 4) {
    Weight rho(rs.ambient_dim, Q(0));
    for (const auto& w : rs.fundamental_weights) rho = add(rho, w);
    size_t bfs = orbit_bfs(rs, rho);
    if (mpz_class(static_cast<unsigned long>(bfs)) != rs.weyl_order)
      throw std::logic_error("Weyl order mismatch for " + to_string(spec));
  } else {
    // orbit-stabilizer cross-check on the two smallest fundamental orbits
    std::vector<std::pair<mpz_class, int>> by_size;
    for (int i = 0; i < n; ++i) {
      std::vector<int> levi;
      for (int j = 0; j < n; ++j)
        if (j != i) levi.push_back(j);
      by_size.push_back({rs.weyl_order / parabolic_weyl_order(rs, levi), i});
    }
    std::sort(by_size.begin(), by_size.end());
    for (int t = 0; t < 2; ++t) {
      int i = by_size[t].second;
      std::vector<int> levi;
      for (int j = 0; j < n; ++j)
        if (j != i) levi.push_back(j);
      mpz_class orbit = static_cast<unsigned long>(orbit_bfs(rs, rs.fundamental_weights[i]));
      if (orbit * parabolic_weyl_order(rs, levi) != rs.weyl_order)
        throw std::logic_error("orbit-stabilizer check failed for " + to_string(spec));
    }
  }
  return rs;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InvalidDatum: return "InvalidDatum";
    case Errc::IncompleteDatum: return "IncompleteDatum";
    case Errc::DatumUnavailable: return "DatumUnavailable";
    case Errc::ContradictionDetected: return "ContradictionDetected";
    case Errc::Parse: return "Parse";
    case Errc::Schema: return "Schema";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace realspher
