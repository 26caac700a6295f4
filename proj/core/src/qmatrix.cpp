#include "quatkyp/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quatkyp/errors.hpp"

namespace quatkyp {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

QMatrix::QMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("QMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows * cols), Quaternion{});
}

QMatrix QMatrix::identity(Index n) {
  QMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QMatrix QMatrix::scalar(const Quaternion& q) {
  QMatrix m(1, 1);
  m(0, 0) = q;
  return m;
}

QMatrix QMatrix::from_real(const Eigen::MatrixXd& m) {
  QMatrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = Quaternion(m(r, c));
  return out;
}

QMatrix QMatrix::from_parts(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("from_parts: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) out(r, c) = Quaternion::from_complex(a(r, c), b(r, c));
  return out;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(cols_, rows_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

QMatrix QMatrix::block(Index r0, Index c0, Index nr, Index nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("QMatrix::block out of range");
  }
  QMatrix out(nr, nc);
  for (Index r = 0; r < nr; ++r)
    for (Index c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void QMatrix::set_block(Index r0, Index c0, const QMatrix& m) {
  if (r0 < 0 || c0 < 0 || r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw DimensionError("QMatrix::set_block out of range");
  }
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

ComplexMatrix QMatrix::part_a() const {
  ComplexMatrix a(rows_, cols_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) a(r, c) = (*this)(r, c).first();
  return a;
}

ComplexMatrix QMatrix::part_b() const {
  ComplexMatrix b(rows_, cols_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) b(r, c) = (*this)(r, c).second();
  return b;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm_squared();
  return std::sqrt(s);
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, q.norm());
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) { return -1.0 * a; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimensions " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  QMatrix out(a.rows(), b.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Quaternion ark = a(r, k);
      if (ark == Quaternion{}) continue;
      for (Index c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

QMatrix operator*(const Quaternion& q, const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) out(r, c) = q * a(r, c);
  return out;
}

QMatrix operator*(const QMatrix& a, const Quaternion& q) {
  QMatrix out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) * q;
  return out;
}

QMatrix hstack(const QMatrix& left, const QMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hstack: row mismatch");
  QMatrix out(left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

QMatrix vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionError("vstack: column mismatch");
  QMatrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

QMatrix block2x2(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionError("block2x2: blocks are not conformal");
  }
  QMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  out.set_block(a.rows(), 0, c);
  out.set_block(a.rows(), a.cols(), d);
  return out;
}

ComplexMatrix chi(const QMatrix& m) {
  const Index r = m.rows();
  const Index c = m.cols();
  ComplexMatrix z(2 * r, 2 * c);
  for (Index i = 0; i < r; ++i) {
    for (Index k = 0; k < c; ++k) {
      const Complex a = m(i, k).first();
      const Complex b = m(i, k).second();
      z(i, k) = a;
      z(i, c + k) = b;
      z(r + i, k) = -std::conj(b);
      z(r + i, c + k) = std::conj(a);
    }
  }
  return z;
}

ComplexMatrix involution_a(const ComplexMatrix& z) {
  if (z.rows() % 2 != 0 || z.cols() % 2 != 0) {
    throw DimensionError("involution_a: dimensions must be even");
  }
  const Index r = z.rows() / 2;
  const Index c = z.cols() / 2;
  ComplexMatrix out(z.rows(), z.cols());
  out.topLeftCorner(r, c) = z.bottomRightCorner(r, c).conjugate();
  out.topRightCorner(r, c) = -z.bottomLeftCorner(r, c).conjugate();
  out.bottomLeftCorner(r, c) = -z.topRightCorner(r, c).conjugate();
  out.bottomRightCorner(r, c) = z.topLeftCorner(r, c).conjugate();
  return out;
}

double chi_structure_defect(const ComplexMatrix& z) { return (involution_a(z) - z).norm(); }

QMatrix chi_project(const ComplexMatrix& z) {
  const ComplexMatrix sym = 0.5 * (z + involution_a(z));
  const Index r = z.rows() / 2;
  const Index c = z.cols() / 2;
  return QMatrix::from_parts(sym.topLeftCorner(r, c), sym.topRightCorner(r, c));
}

QMatrix chi_inverse(const ComplexMatrix& z, double tol) {
  if (z.rows() % 2 != 0 || z.cols() % 2 != 0) {
    throw DimensionError("chi_inverse: dimensions must be even");
  }
  const double defect = chi_structure_defect(z);
  if (defect > tol * std::max(1.0, z.norm())) {
    throw StructureError("chi_inverse: matrix is not in the range of chi (defect " +
                         std::to_string(defect) + ")");
  }
  const Index r = z.rows() / 2;
  const Index c = z.cols() / 2;
  return QMatrix::from_parts(z.topLeftCorner(r, c), z.topRightCorner(r, c));
}

double hermitian_defect(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_defect: matrix must be square");
  return (m - m.adjoint()).frobenius_norm();
}

QMatrix hermitian_part(const QMatrix& m) { return 0.5 * (m + m.adjoint()); }

std::vector<double> hermitian_eigenvalues(const QMatrix& g, double tol) {
  if (g.rows() != g.cols()) throw DimensionError("hermitian_eigenvalues: matrix must be square");
  const double scale = std::max(1.0, g.frobenius_norm());
  if (hermitian_defect(g) > tol * scale) {
    throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const Index n = g.rows();
  if (n == 0) return {};
  ComplexMatrix z = chi(hermitian_part(g));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(z, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InternalError("hermitian_eigenvalues: eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  const double gap = 1e-7 * scale;
  for (Index k = 0; k < n; ++k) {
    const double a = ev(2 * k);
    const double b = ev(2 * k + 1);
    if (std::abs(a - b) > gap) {
      throw InternalError("hermitian_eigenvalues: chi spectrum is not paired (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

Signature hermitian_signature(const QMatrix& g, double tol) {
  const double cut = tol * std::max(1.0, g.frobenius_norm());
  Signature s;
  for (double lambda : hermitian_eigenvalues(g, tol)) {
    if (lambda >= cut) {
      ++s.n_plus;
    } else if (lambda <= -cut) {
      ++s.n_minus;
    } else {
      ++s.n_zero;
    }
  }
  return s;
}

int qmat_rank(const QMatrix& m, double tol) {
  if (m.empty()) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(chi(m));
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol * s(0);
  int rank = 0;
  for (Index k = 0; 2 * k + 1 < s.size(); ++k) {
    if (0.5 * (s(2 * k) + s(2 * k + 1)) > cut) ++rank;
  }
  return rank;
}

double operator_norm(const QMatrix& m) {
  if (m.empty()) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(chi(m));
  return svd.singularValues()(0);
}

QMatrix solve(const QMatrix& m, const QMatrix& rhs, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("solve: matrix must be square");
  if (m.rows() != rhs.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  if (m.rows() == 0) return QMatrix(0, rhs.cols());
  const ComplexMatrix z = chi(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(z);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(s.size() - 1) <= tol * s(0)) throw SingularError("solve: matrix is singular to working tolerance");
  const ComplexMatrix x = z.partialPivLu().solve(chi(rhs));
  return chi_project(x);
}

QMatrix inverse(const QMatrix& m, double tol) { return solve(m, QMatrix::identity(m.rows()), tol); }

namespace {

// u^* v over H.
Quaternion inner(const QMatrix& u, const QMatrix& v) {
  Quaternion s;
  for (Index r = 0; r < u.rows(); ++r) s += u(r, 0).conj() * v(r, 0);
  return s;
}

}  // namespace

QMatrix column_basis(const QMatrix& m, double tol) {
  std::vector<QMatrix> work;
  double max_norm = 0.0;
  for (Index c = 0; c < m.cols(); ++c) {
    work.push_back(m.col(c));
    max_norm = std::max(max_norm, work.back().frobenius_norm());
  }
  std::vector<QMatrix> basis;
  if (max_norm == 0.0) return QMatrix(m.rows(), 0);
  const double cut = tol * max_norm;
  std::vector<bool> used(work.size(), false);
  while (static_cast<Index>(basis.size()) < m.rows()) {
    std::size_t best = work.size();
    double best_norm = cut;
    for (std::size_t c = 0; c < work.size(); ++c) {
      if (used[c]) continue;
      const double n = work[c].frobenius_norm();
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
    if (best == work.size()) break;
    used[best] = true;
    QMatrix u = work[best] * (1.0 / best_norm);
    // One pass of reorthogonalization against the accepted basis.
    for (const auto& b : basis) u -= b * inner(b, u);
    u *= 1.0 / u.frobenius_norm();
    for (std::size_t c = 0; c < work.size(); ++c) {
      if (!used[c]) work[c] -= u * inner(u, work[c]);
    }
    basis.push_back(std::move(u));
  }
  QMatrix out(m.rows(), static_cast<Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.set_block(0, static_cast<Index>(k), basis[k]);
  return out;
}

QMatrix pivoted_cholesky(const QMatrix& g, Index max_rank) {
  if (g.rows() != g.cols()) throw DimensionError("pivoted_cholesky: matrix must be square");
  const Index n = g.rows();
  QMatrix work = hermitian_part(g);
  std::vector<QMatrix> cols;
  for (Index step = 0; step < std::min(max_rank, n); ++step) {
    Index pivot = -1;
    double best = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (work(i, i).w > best) {
        best = work(i, i).w;
        pivot = i;
      }
    }
    if (pivot < 0) break;
    QMatrix column = work.col(pivot) * (1.0 / std::sqrt(best));
    work -= column * column.adjoint();
    cols.push_back(std::move(column));
  }
  QMatrix out(n, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.set_block(0, static_cast<Index>(k), cols[k]);
  return out;
}

}  // namespace quatkyp
