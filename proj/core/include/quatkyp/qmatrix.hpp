#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "quatkyp/quaternion.hpp"

namespace quatkyp {

using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Default spectral/rank tolerance, relative to max(1, matrix norm).
inline constexpr double kDefaultTol = 1e-9;

/// Dense row-major matrix over the quaternions.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(Index rows, Index cols);

  static QMatrix zero(Index rows, Index cols) { return QMatrix(rows, cols); }
  static QMatrix identity(Index n);
  static QMatrix scalar(const Quaternion& q);
  static QMatrix from_real(const Eigen::MatrixXd& m);
  /// M = A + B j.
  static QMatrix from_parts(const ComplexMatrix& a, const ComplexMatrix& b);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Quaternion& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Quaternion& operator()(Index r, Index c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  const std::vector<Quaternion>& entries() const { return data_; }

  /// Entrywise conjugate transpose.
  QMatrix adjoint() const;
  QMatrix block(Index r0, Index c0, Index nr, Index nc) const;
  void set_block(Index r0, Index c0, const QMatrix& m);
  QMatrix col(Index c) const { return block(0, c, rows_, 1); }

  /// Complex halves (A, B) of M = A + B j.
  ComplexMatrix part_a() const;
  ComplexMatrix part_b() const;

  double frobenius_norm() const;
  double max_abs() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(QMatrix a, double s);
/// Left and right scalar multiplication are distinct over H.
QMatrix operator*(const Quaternion& q, const QMatrix& a);
QMatrix operator*(const QMatrix& a, const Quaternion& q);

QMatrix hstack(const QMatrix& left, const QMatrix& right);
QMatrix vstack(const QMatrix& top, const QMatrix& bottom);
/// [[a, b], [c, d]] with conformal blocks; empty blocks are allowed.
QMatrix block2x2(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d);

/// chi(A + Bj) = [[A, B], [-conj(B), conj(A)]]  (block layout, not interleaved).
ComplexMatrix chi(const QMatrix& m);

/// Inverse of chi on its range; throws StructureError when Z fails the
/// E^{-1} conj(Z) E = Z test by more than tol * max(1, |Z|).
QMatrix chi_inverse(const ComplexMatrix& z, double tol = kDefaultTol);

/// Averages Z with a(Z) before reading the blocks; never throws on structure.
QMatrix chi_project(const ComplexMatrix& z);

/// a(Z) = E_r^{-1} conj(Z) E_c.  Real-linear involution whose fixed points are
/// exactly the chi-images.
ComplexMatrix involution_a(const ComplexMatrix& z);

/// |a(Z) - Z|_F.
double chi_structure_defect(const ComplexMatrix& z);

struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  int size() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Quaternionic eigenvalues of a Hermitian matrix, ascending.  Each value is the
/// mean of a degenerate pair of eigenvalues of chi(G); a pair that does not close
/// within 1e-7 * max(1, |G|) raises InternalError.
std::vector<double> hermitian_eigenvalues(const QMatrix& g, double tol = kDefaultTol);

/// Inertia (n+, n-, n0) with |lambda| < tol * max(1, |G|) counted as zero.
Signature hermitian_signature(const QMatrix& g, double tol = kDefaultTol);

double hermitian_defect(const QMatrix& m);
QMatrix hermitian_part(const QMatrix& m);

/// Rank over H as half the numerical rank of chi(M) (threshold tol * sigma_max).
int qmat_rank(const QMatrix& m, double tol = kDefaultTol);

/// Spectral norm; chi preserves it.
double operator_norm(const QMatrix& m);

QMatrix inverse(const QMatrix& m, double tol = kDefaultTol);
/// Solves M X = rhs.
QMatrix solve(const QMatrix& m, const QMatrix& rhs, double tol = kDefaultTol);

/// Orthonormal basis (over H, right scalars) of the column span, found by
/// modified Gram-Schmidt with column pivoting directly over H.
QMatrix column_basis(const QMatrix& m, double tol = kDefaultTol);

/// G ~= F F^* for Hermitian positive semidefinite G, stopping after max_rank
/// pivots or when the largest remaining diagonal drops to zero.
QMatrix pivoted_cholesky(const QMatrix& g, Index max_rank);


}  // namespace quatkyp
