#pragma once

#include <cmath>
#include <complex>

namespace quatkyp {

namespace detail {

inline void swap_schur_pair(ComplexMatrix& t, ComplexMatrix& u, Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k, k + 1);
  const Complex c = t(k + 1, k + 1);
  Complex v1 = b;
  Complex v2 = c - a;
  const double nv = std::hypot(std::abs(v1), std::abs(v2));
  if (nv == 0.0) return;
  v1 /= nv;
  v2 /= nv;
  Eigen::Matrix2cd q;
  q << v1, -std::conj(v2), v2, std::conj(v1);
  t.middleRows(k, 2) = (q.adjoint() * t.middleRows(k, 2)).eval();
  t.middleCols(k, 2) = (t.middleCols(k, 2) * q).eval();
  u.middleCols(k, 2) = (u.middleCols(k, 2) * q).eval();
  t(k + 1, k) = 0.0;
}

}  // namespace detail

template <class Pred>
int reorder_schur(ComplexMatrix& t, ComplexMatrix& u, Pred select) {
  const Index n = t.rows();
  Index front = 0;
  for (Index j = 0; j < n; ++j) {
    if (!select(t(j, j))) continue;
    for (Index k = j; k > front; --k) detail::swap_schur_pair(t, u, k - 1);
    ++front;
  }
  return static_cast<int>(front);
}

}  // namespace quatkyp
