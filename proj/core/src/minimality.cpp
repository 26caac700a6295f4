#include "quatkyp/minimality.hpp"

#include <string>

#include "quatkyp/errors.hpp"

namespace quatkyp {

QMatrix controllability_matrix(const QMatrix& a, const QMatrix& b, Index powers) {
  QMatrix out(a.rows(), 0);
  QMatrix term = b;
  for (Index k = 0; k < powers; ++k) {
    out = hstack(out, term);
    if (k + 1 < powers) term = a * term;
  }
  return out;
}

QMatrix observability_matrix(const QMatrix& c, const QMatrix& a, Index powers) {
  QMatrix out(0, a.cols());
  QMatrix term = c;
  for (Index k = 0; k < powers; ++k) {
    out = vstack(out, term);
    if (k + 1 < powers) term = term * a;
  }
  return out;
}

// TODO: switch to an orthogonal staircase (block Arnoldi) rank test so that
// synthesize_system works beyond 10 states.
MinimalityReport is_minimal(const Realization& r, double tol) {
  r.validate();
  MinimalityReport rep;
  const Index n_state = r.state_dim();
  rep.state_dim = static_cast<int>(n_state);
  if (n_state == 0) return rep;
  rep.ctrl_rank = qmat_rank(controllability_matrix(r.A, r.B, n_state), tol);
  rep.obs_rank = qmat_rank(observability_matrix(r.C, r.A, n_state), tol);
  rep.controllable = rep.ctrl_rank == rep.state_dim;
  rep.observable = rep.obs_rank == rep.state_dim;
  return rep;
}

namespace {

QMatrix checked_basis(const QMatrix& m, double tol, const char* what) {
  const QMatrix basis = column_basis(m, tol);
  const int rank = qmat_rank(m, tol);
  if (basis.cols() != rank) {
    throw IllConditioned(std::string("kalman_reduce: ") + what + " basis has " + std::to_string(basis.cols()) +
                         " columns but the chi rank is " + std::to_string(rank));
  }
  return basis;
}

}  // namespace

Realization kalman_reduce(const Realization& r, double tol) {
  r.validate();
  const Index n_state = r.state_dim();
  if (n_state == 0) return r;

  const QMatrix v = checked_basis(controllability_matrix(r.A, r.B, n_state), tol, "controllable");
  const QMatrix vt = v.adjoint();
  const QMatrix a1 = vt * r.A * v;
  const QMatrix b1 = vt * r.B;
  const QMatrix c1 = r.C * v;
  if (v.cols() == 0) return Realization(r.convention, a1, b1, c1, r.D);

  const QMatrix w = checked_basis(observability_matrix(c1, a1, v.cols()).adjoint(), tol, "observable");
  const QMatrix wt = w.adjoint();
  return Realization(r.convention, wt * a1 * w, wt * b1, c1 * w, r.D);
}

}  // namespace quatkyp
