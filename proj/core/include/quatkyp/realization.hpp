#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "quatkyp/qmatrix.hpp"
#include "quatkyp/quaternion.hpp"

namespace quatkyp {

/// at-infinity: phi(p) = D + C * (pI - A)^{-*} B
/// at-origin:   S(p)   = D + p C * (I - pA)^{-*} B
enum class Convention { AtInfinity, AtOrigin };

std::string_view to_string(Convention c);
Convention convention_from_string(std::string_view s);

/// State-space data of a rational slice hyperholomorphic matrix function.
struct Realization {
  Convention convention = Convention::AtInfinity;
  QMatrix A;
  QMatrix B;
  QMatrix C;
  QMatrix D;

  Realization() = default;
  Realization(Convention conv, QMatrix a, QMatrix b, QMatrix c, QMatrix d);

  /// Throws DimensionError unless A is square and B, C, D are conformal.
  void validate() const;

  Index state_dim() const { return A.rows(); }
  Index output_dim() const { return D.rows(); }
  Index input_dim() const { return D.cols(); }
};

/// Even/odd components of f(x + Jy) = alpha(x, y) + J beta(x, y).
struct SliceValue {
  QMatrix alpha;
  QMatrix beta;
};

/// The complex-variable transfer function of (chi(A), chi(B), chi(C), chi(D)).
/// Throws PoleError when the resolvent pivot has condition number above 1/tol.
ComplexMatrix chi_transfer(const Realization& r, Complex z, double tol = kDefaultTol);

/// Value of the slice function at an arbitrary quaternion.  The value on the
/// slice C_i is read from the top block row of chi_transfer, then extended to
/// x + Jy by the representation formula.
QMatrix evaluate(const Realization& r, const Quaternion& p, double tol = kDefaultTol);

/// (alpha, beta) at the slice point x + iy.
SliceValue slice_value(const Realization& r, double x, double y, double tol = kDefaultTol);

/// Poles of chi_transfer in C (each pole sphere of the slice function meets C_i
/// in a conjugate pair of these).
std::vector<Complex> chi_poles(const Realization& r);

enum class KernelDomain { HalfSpace, Ball };

/// HalfSpace: (|q|^2 + 2Re(q)p + p^2)^{-1}(p + q) = (p + conj q)^{-*}
/// Ball:      (1 - 2Re(q)p + |q|^2 p^2)^{-1}(1 - pq) = (1 - p conj q)^{-*}
/// Throws SingularError when the real-coefficient quadratic is below tol.
Quaternion star_inverse_linear(const Quaternion& p, const Quaternion& q, KernelDomain kind,
                               double tol = kDefaultTol);

enum class KernelKind { PositiveReal, Schur };

std::string_view to_string(KernelKind k);
KernelKind kernel_kind_from_string(std::string_view s);

/// Evaluates K(p_a, p_b) over a fixed point set, caching the per-point slice
/// data so that a full Gram matrix costs one resolvent pair per point.
///   PositiveReal: (phi(p) + phi(q)^*) * (p + conj q)^{-*}
///   Schur:        (I - S(p) S(q)^*)   * (1 - p conj q)^{-*}
/// with the star product taken in p.
class KernelEvaluator {
 public:
  KernelEvaluator(const Realization& r, KernelKind kind, std::span<const Quaternion> points,
                  double tol = kDefaultTol);

  QMatrix operator()(std::size_t a, std::size_t b) const;
  std::size_t size() const { return points_.size(); }
  const QMatrix& value(std::size_t a) const { return values_[a]; }

 private:
  struct PointData {
    SlicePoint slice;
    Complex z;
    ComplexMatrix f1_z, f2_z, f1_zbar, f2_zbar;
  };

  KernelKind kind_;
  double tol_;
  Index n_;
  std::vector<Quaternion> points_;
  std::vector<PointData> data_;
  std::vector<QMatrix> values_;
};

QMatrix kernel_eval(const Realization& r, const Quaternion& p, const Quaternion& q, KernelKind kind,
                    double tol = kDefaultTol);

/// ((f c) * (p + conj q)^{-*})(p) for HalfSpace, ((f c) * (1 - p conj q)^{-*})(p)
/// for Ball, with f given by a realization and c a constant matrix.
QMatrix star_kernel_term(const Realization& f, const QMatrix& c, const Quaternion& p, const Quaternion& q,
                         KernelDomain domain, double tol = kDefaultTol);

enum class CayleyDirection { HalfSpaceToBall, BallToHalfSpace };

std::string_view to_string(CayleyDirection d);
CayleyDirection cayley_direction_from_string(std::string_view s);

/// Bilinear transform on the variable, p <-> (1 - p)(1 + p)^{-1}, combined with
/// the value map X <-> (I - X)(I + X)^{-1}.  Half-space data must be at-infinity;
/// ball data is produced (and consumed) at-origin.  The state coordinates are
/// preserved up to scaling: an LMI solution H of the half-space problem maps to
/// 2H on the ball side, and a ball solution H maps to 2H on the half-space side
/// of ball-to-half-space.  Throws CayleyPivotSingular when I + D, I - A (half-space side)
/// or I + A, I + D (ball side) is singular.
Realization cayley_transform(const Realization& r, CayleyDirection direction, double tol = kDefaultTol);

}  // namespace quatkyp
