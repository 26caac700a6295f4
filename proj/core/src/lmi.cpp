#include "quatkyp/lmi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quatkyp/errors.hpp"

namespace quatkyp {

namespace {

QMatrix diag_weight(const QMatrix& h, Index n, double sign_h) {
  return block2x2(sign_h * h, QMatrix(h.rows(), n), QMatrix(n, h.cols()), QMatrix(n, n));
}

}  // namespace

QMatrix lmi_linear_part(const Realization& r, const QMatrix& h, LmiForm form) {
  const Index n_state = r.state_dim();
  if (h.rows() != n_state || h.cols() != n_state) throw DimensionError("LMI: H must be N x N");
  const Index m = r.input_dim();
  if (form == LmiForm::Continuous) {
    const QMatrix ha = h * r.A;
    const QMatrix hb = h * r.B;
    return block2x2(ha + ha.adjoint(), hb, hb.adjoint(), QMatrix(m, m));
  }
  // P - M* P M restricted to the H-dependent part, P_H = diag(sign * H, 0).
  const double sign = form == LmiForm::DiscreteOrigin ? -1.0 : 1.0;
  const QMatrix ab = hstack(r.A, r.B);
  const QMatrix top = sign * h;
  QMatrix out = diag_weight(h, m, sign);
  out -= ab.adjoint() * top * ab;
  return out;
}

QMatrix assemble_lmi(const Realization& r, const QMatrix& h, LmiForm form) {
  r.validate();
  const Index n_state = r.state_dim();
  QMatrix out = lmi_linear_part(r, h, form);
  if (form == LmiForm::Continuous) {
    if (r.output_dim() != r.input_dim()) throw DimensionError("continuous LMI needs a square function");
    const QMatrix cst = block2x2(QMatrix(n_state, n_state), r.C.adjoint(), r.C, r.D + r.D.adjoint());
    out += cst;
    return out;
  }
  const Index m = r.input_dim();
  const QMatrix cd = hstack(r.C, r.D);
  QMatrix cst = block2x2(QMatrix(n_state, n_state), QMatrix(n_state, m), QMatrix(m, n_state), QMatrix::identity(m));
  cst -= cd.adjoint() * cd;
  out += cst;
  return out;
}

Eigen::VectorXd hermitian_vec(const QMatrix& h) {
  const Index n = h.rows();
  Eigen::VectorXd v(n + 2 * n * (n - 1));
  const double s2 = std::sqrt(2.0);
  Index k = 0;
  for (Index i = 0; i < n; ++i) v(k++) = h(i, i).w;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Quaternion& q = h(i, j);
      v(k++) = s2 * q.w;
      v(k++) = s2 * q.x;
      v(k++) = s2 * q.y;
      v(k++) = s2 * q.z;
    }
  }
  return v;
}

QMatrix hermitian_unvec(const Eigen::VectorXd& v, Index n) {
  if (v.size() != n + 2 * n * (n - 1)) throw DimensionError("hermitian_unvec: wrong coordinate count");
  QMatrix h(n, n);
  const double s2 = 1.0 / std::sqrt(2.0);
  Index k = 0;
  for (Index i = 0; i < n; ++i) h(i, i) = Quaternion(v(k++));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Quaternion q(s2 * v(k), s2 * v(k + 1), s2 * v(k + 2), s2 * v(k + 3));
      k += 4;
      h(i, j) = q;
      h(j, i) = q.conj();
    }
  }
  return h;
}

QMatrix psd_projection(const QMatrix& x, double floor) {
  if (x.rows() == 0) return x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(chi(hermitian_part(x)));
  if (es.info() != Eigen::Success) throw InternalError("psd_projection: eigensolver failed");
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(floor);
  const ComplexMatrix& v = es.eigenvectors();
  return hermitian_part(chi_project(v * clipped.asDiagonal() * v.adjoint()));
}

double min_eigenvalue(const QMatrix& x, double tol) {
  if (x.rows() == 0) return 0.0;
  return hermitian_eigenvalues(hermitian_part(x), tol).front();
}

namespace {

// Real-linear constraints forcing (HB + C*) v = 0 on ker(D + D*).  Returns
// false when D + D* has a negative eigenvalue (then no H can work).
bool kernel_constraints(const Realization& r, const std::vector<QMatrix>& basis, double tol,
                        Eigen::MatrixXd& e, Eigen::VectorXd& f) {
  const ComplexMatrix rr = chi(r.D + r.D.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rr);
  const double s = std::max(1.0, rr.norm());
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev.size() > 0 && ev(0) < -tol * s) return false;
  std::vector<Index> null_idx;
  for (Index k = 0; k < ev.size(); ++k) {
    if (std::abs(ev(k)) <= tol * s) null_idx.push_back(k);
  }
  const Index p = static_cast<Index>(basis.size());
  const Index n_state = r.state_dim();
  const Index rows_per = 2 * (2 * n_state);
  e.setZero(rows_per * static_cast<Index>(null_idx.size()), p);
  f.setZero(e.rows());
  const ComplexMatrix cstar = chi(r.C.adjoint());
  for (std::size_t t = 0; t < null_idx.size(); ++t) {
    const Eigen::VectorXcd w = es.eigenvectors().col(null_idx[t]);
    const Index row0 = rows_per * static_cast<Index>(t);
    for (Index k = 0; k < p; ++k) {
      const Eigen::VectorXcd col = chi(basis[static_cast<std::size_t>(k)] * r.B) * w;
      e.block(row0, k, 2 * n_state, 1) = col.real();
      e.block(row0 + 2 * n_state, k, 2 * n_state, 1) = col.imag();
    }
    const Eigen::VectorXcd rhs = -(cstar * w);
    f.segment(row0, 2 * n_state) = rhs.real();
    f.segment(row0 + 2 * n_state, 2 * n_state) = rhs.imag();
  }
  return true;
}

}  // namespace

ProjectionOutcome project_lmi(const Realization& r, LmiForm form, const QMatrix& start,
                              const ProjectionOptions& opts) {
  r.validate();
  const Index n_state = r.state_dim();
  const double tol = opts.tol;
  ProjectionOutcome out;

  const Index p = n_state + 2 * n_state * (n_state - 1);
  std::vector<QMatrix> basis;
  basis.reserve(static_cast<std::size_t>(p));
  for (Index k = 0; k < p; ++k) basis.push_back(hermitian_unvec(Eigen::VectorXd::Unit(p, k), n_state));

  // Affine parametrization h = hp + Z t of the admissible coordinates.
  Eigen::VectorXd hp = Eigen::VectorXd::Zero(p);
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(p, p);
  if (form == LmiForm::Continuous && opts.reduce_kernel && p > 0) {
    Eigen::MatrixXd e;
    Eigen::VectorXd f;
    if (!kernel_constraints(r, basis, tol, e, f)) {
      out.status = ProjectionOutcome::Status::Inconsistent;
      out.H = start;
      return out;
    }
    if (e.rows() > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const Eigen::VectorXd& sv = svd.singularValues();
      const double cut = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
      Index rank = 0;
      while (rank < sv.size() && sv(rank) > cut) ++rank;
      svd.setThreshold(cut / std::max(1.0, sv.size() > 0 ? sv(0) : 1.0));
      hp = svd.solve(f);
      const double fs = std::max(1.0, f.norm());
      if ((e * hp - f).norm() > 1e3 * tol * fs) {
        out.status = ProjectionOutcome::Status::Inconsistent;
        out.H = start;
        return out;
      }
      z = svd.matrixV().rightCols(p - rank);
    }
  }

  const Index dim = n_state + r.input_dim();
  const Eigen::VectorXd v0 = hermitian_vec(assemble_lmi(r, QMatrix(n_state, n_state), form));
  Eigen::MatrixXd k_full(v0.size(), p);
  for (Index k = 0; k < p; ++k) {
    k_full.col(k) = hermitian_vec(lmi_linear_part(r, basis[static_cast<std::size_t>(k)], form));
  }
  const Eigen::MatrixXd kz = k_full * z;
  const Eigen::VectorXd offset = v0 + k_full * hp;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  if (kz.cols() > 0) cod.compute(kz);

  Eigen::VectorXd t = Eigen::VectorXd::Zero(z.cols());
  if (start.rows() == n_state && n_state > 0) t = z.transpose() * (hermitian_vec(start) - hp);

  double best = -std::numeric_limits<double>::infinity();
  int since_improvement = 0;
  for (int it = 0;; ++it) {
    const Eigen::VectorXd h = hp + z * t;
    const QMatrix hq = hermitian_unvec(h, n_state);
    const Eigen::VectorXd xv = offset + kz * t;
    const QMatrix x = hermitian_unvec(xv, dim);
    const double s = std::max(1.0, xv.norm());
    const double lam = min_eigenvalue(x, tol);
    out.H = hq;
    out.min_eig = lam;
    out.iterations = it;
    if (lam >= -0.1 * tol * s) {
      out.status = ProjectionOutcome::Status::Converged;
      return out;
    }
    if (z.cols() == 0) {
      out.status = ProjectionOutcome::Status::Stalled;
      return out;
    }
    if (lam > best + opts.stall_improvement) {
      best = lam;
      since_improvement = 0;
    } else if (++since_improvement >= opts.stall_window) {
      out.status = ProjectionOutcome::Status::Stalled;
      return out;
    }
    if (it >= opts.max_iterations) {
      out.status = ProjectionOutcome::Status::IterationCap;
      return out;
    }
    const QMatrix proj = psd_projection(x, 0.01 * tol * s);
    t = cod.solve(hermitian_vec(proj) - offset);
  }
}

RiccatiOutcome solve_lmi_riccati(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                 const ComplexMatrix& d, double boundary_gap) {
  RiccatiOutcome out;
  const Index n = a.rows();
  const ComplexMatrix rr = d + d.adjoint();
  Eigen::LLT<ComplexMatrix> llt(rr);
  if (llt.info() != Eigen::Success) return out;
  const ComplexMatrix rinv_c = llt.solve(c);
  const ComplexMatrix rinv_bt = llt.solve(b.adjoint());
  const ComplexMatrix f = a - b * rinv_c;
  const ComplexMatrix g = b * rinv_bt;
  const ComplexMatrix q = c.adjoint() * rinv_c;

  ComplexMatrix ham(2 * n, 2 * n);
  ham << f, -g, q, -f.adjoint();
  const double scale = std::max(1.0, ham.norm());

  Eigen::ComplexSchur<ComplexMatrix> schur(ham);
  if (schur.info() != Eigen::Success) return out;
  for (Index k = 0; k < 2 * n; ++k) {
    if (std::abs(schur.matrixT()(k, k).real()) < boundary_gap * scale) {
      out.status = RiccatiOutcome::Status::BoundarySpectrum;
      return out;
    }
  }

  auto invariant_solution = [&](bool stable, ComplexMatrix& x) {
    ComplexMatrix t = schur.matrixT();
    ComplexMatrix u = schur.matrixU();
    const int count = reorder_schur(t, u, [stable](Complex lambda) { return stable == (lambda.real() < 0.0); });
    if (count != n) return false;
    const ComplexMatrix u1 = u.topLeftCorner(n, n);
    const ComplexMatrix u2 = u.bottomLeftCorner(n, n);
    Eigen::JacobiSVD<ComplexMatrix> svd(u1);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (n > 0 && !(sv(n - 1) > 1e-10 * sv(0))) return false;
    // X = U2 U1^{-1}
    x = u1.transpose().partialPivLu().solve(u2.transpose()).transpose();
    x = 0.5 * (x + x.adjoint()).eval();
    return true;
  };

  if (!invariant_solution(true, out.X_stabilizing) || !invariant_solution(false, out.X_antistabilizing)) {
    return out;
  }
  out.X = 0.5 * (out.X_stabilizing + out.X_antistabilizing);
  out.status = RiccatiOutcome::Status::Solved;
  return out;
}

}  // namespace quatkyp
