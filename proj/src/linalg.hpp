#pragma once

// Small exact linear algebra over Q. Matrices are row-major vectors of rows.

#include <gmpxx.h>

#include <vector>

namespace realspher {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

Q dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Q& s, const Vec& a);
bool is_zero(const Vec& a);

// Rank of the row space.
int rank_of(Mat rows);

// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Mat inverse(Mat m);

// Indices (into rows) of a minimal linearly dependent subset, or empty if the
// rows are independent. Minimal: removing any element makes it independent.
std::vector<int> minimal_dependent_subset(const Mat& rows);

}  // namespace realspher
