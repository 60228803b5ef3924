#pragma once

// Real rank, m(G) and n(G) = dim G/P_G of the real forms that occur in the
// family tables, from their restricted root systems and multiplicities.

#include <string>

namespace realspher {

struct RealForm {
  std::string name;
  int rank = 0;
  int mG = 0;  // largest restricted root multiplicity (0 when rank is 0)
  int nG = 0;  // sum of multiplicities over positive restricted roots
};

RealForm so_pq(int p, int q);    // o(p,q)
RealForm su_pq(int p, int q);    // su(p,q), also u(p,q)
RealForm sp_pq(int p, int q);    // sp(p,q)
RealForm u_pq(int p, int q, int d);  // U(p,q;F), d = dim_R F
RealForm gl_F(int n, int d);     // gl(n,F) / sl(n,F), d = dim_R F
RealForm sp_R(int n);            // sp(n,R)
RealForm so_star(int n);         // o*(2n)
RealForm complex_so(int n);      // so(n,C)
RealForm complex_sl(int n);      // sl(n,C)
RealForm complex_sp(int n);      // sp(n,C)
RealForm complex_f4();
RealForm f4_4();
RealForm f4_20();
RealForm e6_26();
RealForm e6_14();
RealForm e6_2();
RealForm e6_6();
RealForm e7_7();
RealForm e7_25();
RealForm split_sl2();            // sl(2,R)
RealForm group_case(const RealForm& g);  // g' + g'
RealForm direct_sum(const RealForm& a, const RealForm& b);

}  // namespace realspher
