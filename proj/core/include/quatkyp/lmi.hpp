#pragma once

#include <Eigen/Dense>
#include <vector>

#include "quatkyp/qmatrix.hpp"
#include "quatkyp/realization.hpp"

namespace quatkyp {

/// Which block matrix is required to be positive semidefinite.
///   Continuous:       [[HA + A*H, HB + C*], [B*H + C, D + D*]]
///   DiscreteOrigin:   P - M* P M with P = diag(-H, I), M = [[A, B], [C, D]]
///   DiscreteInfinity: P - M* P M with P = diag(H, I)
enum class LmiForm { Continuous, DiscreteOrigin, DiscreteInfinity };

QMatrix assemble_lmi(const Realization& r, const QMatrix& h, LmiForm form);
/// The part of assemble_lmi that depends (real-linearly) on H.
QMatrix lmi_linear_part(const Realization& r, const QMatrix& h, LmiForm form);

/// Real coordinates of a Hermitian matrix: diagonal entries, then the four
/// components of each strictly upper entry scaled by sqrt(2), so that the
/// Euclidean norm equals the Frobenius norm.
Eigen::VectorXd hermitian_vec(const QMatrix& h);
QMatrix hermitian_unvec(const Eigen::VectorXd& v, Index n);

/// Nearest Hermitian matrix (Frobenius) whose eigenvalues are all >= floor.
QMatrix psd_projection(const QMatrix& x, double floor = 0.0);

double min_eigenvalue(const QMatrix& x, double tol = kDefaultTol);

struct ProjectionOptions {
  double tol = kDefaultTol;
  int max_iterations = 5000;
  int stall_window = 200;
  double stall_improvement = 1e-14;
  /// Continuous form only: impose (HB + C*) v = 0 for v in ker(D + D*) exactly.
  bool reduce_kernel = true;
};

struct ProjectionOutcome {
  enum class Status { Converged, Stalled, IterationCap, Inconsistent };

  Status status = Status::Inconsistent;
  QMatrix H;
  double min_eig = 0.0;
  int iterations = 0;

  bool feasible() const { return status == Status::Converged; }
};

/// Alternating projections between the PSD cone and the affine image of the
/// Hermitian matrices under H -> assemble_lmi(r, H, form).
ProjectionOutcome project_lmi(const Realization& r, LmiForm form, const QMatrix& start,
                              const ProjectionOptions& opts = {});

struct RiccatiOutcome {
  enum class Status { Solved, BoundarySpectrum, Failed };

  Status status = Status::Failed;
  /// Midpoint of the stabilizing and anti-stabilizing solutions (chi side).
  ComplexMatrix X;
  ComplexMatrix X_stabilizing;
  ComplexMatrix X_antistabilizing;
};

/// Solves X F + F* X - X G X - Q = 0 for the Riccati form of the continuous
/// LMI with R = D + D* > 0, on complex data.  Eigenvalues of the Hamiltonian
/// closer than boundary_gap * max(1, |Ham|) to the imaginary axis abort.
RiccatiOutcome solve_lmi_riccati(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                 const ComplexMatrix& d, double boundary_gap = 1e-8);

/// Reorders a complex Schur form T = U* M U so that the eigenvalues accepted by
/// `select` come first.  Swaps adjacent diagonal entries with Givens rotations.
template <class Pred>
int reorder_schur(ComplexMatrix& t, ComplexMatrix& u, Pred select);

}  // namespace quatkyp

#include "quatkyp/detail/reorder_schur.hpp"
