#pragma once

#include "quatkyp/qmatrix.hpp"
#include "quatkyp/realization.hpp"

namespace quatkyp {

struct MinimalityReport {
  bool observable = true;
  bool controllable = true;
  int obs_rank = 0;
  int ctrl_rank = 0;
  int state_dim = 0;

  bool minimal() const { return observable && controllable; }
};

/// [B, AB, ..., A^{powers-1} B]
QMatrix controllability_matrix(const QMatrix& a, const QMatrix& b, Index powers);
/// [C; CA; ...; C A^{powers-1}]
QMatrix observability_matrix(const QMatrix& c, const QMatrix& a, Index powers);

/// Kalman rank tests over H with powers up to N-1.  The power matrices lose
/// numerical rank for N above about 10 with O(1) random data.
MinimalityReport is_minimal(const Realization& r, double tol = kDefaultTol);

/// Restricts to the controllable subspace and then to the orthogonal complement
/// of the unobservable subspace, with orthonormal quaternionic bases.  Throws
/// IllConditioned when the quaternionic basis size disagrees with the chi rank.
Realization kalman_reduce(const Realization& r, double tol = kDefaultTol);

}  // namespace quatkyp
