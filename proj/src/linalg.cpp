#include "linalg.hpp"

#include <stdexcept>

namespace realspher {

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Q& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

int rank_of(Mat m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  int r = 0;
  for (size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

Mat inverse(Mat m) {
  const size_t n = m.size();
  Mat inv(n, Vec(n, Q(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Q p = m[c][c];
    for (size_t k = 0; k < n; ++k) {
      m[c][k] /= p;
      inv[c][k] /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c];
      for (size_t k = 0; k < n; ++k) {
        m[i][k] -= f * m[c][k];
        inv[i][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::vector<int> minimal_dependent_subset(const Mat& rows) {
  // Grow an independent prefix; the first row that falls into the span of the
  // chosen ones closes a dependent set, then shrink it greedily.
  std::vector<int> chosen;
  Mat basis;
  for (size_t i = 0; i < rows.size(); ++i) {
    Mat trial = basis;
    trial.push_back(rows[i]);
    if (rank_of(trial) == static_cast<int>(trial.size())) {
      basis = std::move(trial);
      chosen.push_back(static_cast<int>(i));
      continue;
    }
    std::vector<int> dep = chosen;
    dep.push_back(static_cast<int>(i));
    for (size_t k = 0; k + 1 < dep.size();) {
      Mat without;
      for (size_t t = 0; t < dep.size(); ++t)
        if (t != k) without.push_back(rows[dep[t]]);
      if (rank_of(without) < static_cast<int>(without.size()))
        dep.erase(dep.begin() + k);
      else
        ++k;
    }
    return dep;
  }
  return {};
}

}  // namespace realspher
