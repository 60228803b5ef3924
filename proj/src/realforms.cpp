#include "realforms.hpp"

#include <algorithm>
#include <utility>

namespace realspher {

RealForm u_pq(int p, int q, int d) {
  // BC_b (or C_b when a == b): e_i +- e_j : d, e_i : d(a-b), 2e_i : d-1
  int a = std::max(p, q), b = std::min(p, q);
  RealForm r;
  r.rank = b;
  r.nG = d * b * (b - 1) + d * (a - b) * b + (d - 1) * b;
  if (b >= 2) r.mG = std::max(r.mG, d);
  if (b >= 1 && a > b) r.mG = std::max(r.mG, d * (a - b));
  if (b >= 1) r.mG = std::max(r.mG, d - 1);
  return r;
}

RealForm so_pq(int p, int q) {
  RealForm r = u_pq(p, q, 1);
  r.name = "o(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return r;
}

RealForm su_pq(int p, int q) {
  RealForm r = u_pq(p, q, 2);
  r.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return r;
}

RealForm sp_pq(int p, int q) {
  RealForm r = u_pq(p, q, 4);
  r.name = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return r;
}

RealForm gl_F(int n, int d) {
  RealForm r;
  r.name = "sl(" + std::to_string(n) + ")";
  r.rank = n - 1;
  r.nG = d * n * (n - 1) / 2;
  r.mG = n >= 2 ? d : 0;
  return r;
}

RealForm sp_R(int n) {
  return {"sp(" + std::to_string(n) + ",R)", n, n >= 1 ? 1 : 0, n * n};
}

RealForm so_star(int n) {
  // C_r (n = 2r) or BC_r (n = 2r+1): e_i +- e_j : 4, e_i : 4, 2e_i : 1
  int r = n / 2;
  RealForm f;
  f.name = "o*(" + std::to_string(2 * n) + ")";
  f.rank = r;
  f.nG = 4 * r * (r - 1) + r + (n % 2 ? 4 * r : 0);
  if (r >= 2 || (n % 2 && r >= 1)) f.mG = 4;
  else if (r >= 1) f.mG = 1;
  return f;
}

RealForm complex_so(int n) {
  int r = n / 2;
  int pos = n % 2 ? r * r : r * (r - 1);
  return {"so(" + std::to_string(n) + ",C)", r, pos ? 2 : 0, 2 * pos};
}

RealForm complex_sl(int n) {
  return {"sl(" + std::to_string(n) + ",C)", n - 1, 2, n * (n - 1)};
}

RealForm complex_sp(int n) {
  return {"sp(" + std::to_string(n) + ",C)", n, 2, 2 * n * n};
}

RealForm complex_f4() { return {"f4(C)", 4, 2, 48}; }
RealForm f4_4() { return {"f4(4)", 4, 1, 24}; }
RealForm f4_20() { return {"f4(-20)", 1, 8, 15}; }
RealForm e6_26() { return {"e6(-26)", 2, 8, 24}; }
RealForm e6_14() { return {"e6(-14)", 2, 8, 30}; }
RealForm e6_2() { return {"e6(2)", 4, 2, 36}; }
RealForm e6_6() { return {"e6(6)", 6, 1, 36}; }
RealForm e7_7() { return {"e7(7)", 7, 1, 63}; }
RealForm e7_25() { return {"e7(-25)", 3, 8, 51}; }
RealForm split_sl2() { return {"sl(2,R)", 1, 1, 1}; }

RealForm group_case(const RealForm& g) {
  return {g.name + "+" + g.name, 2 * g.rank, g.mG, 2 * g.nG};
}

RealForm direct_sum(const RealForm& a, const RealForm& b) {
  return {a.name + "+" + b.name, a.rank + b.rank, std::max(a.mG, b.mG), a.nG + b.nG};
}

}  // namespace realspher
