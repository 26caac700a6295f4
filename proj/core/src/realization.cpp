#include "quatkyp/realization.hpp"

#include <cmath>
#include <string>

#include "quatkyp/errors.hpp"

namespace quatkyp {

std::string_view to_string(Convention c) {
  return c == Convention::AtInfinity ? "at-infinity" : "at-origin";
}

Convention convention_from_string(std::string_view s) {
  if (s == "at-infinity") return Convention::AtInfinity;
  if (s == "at-origin") return Convention::AtOrigin;
  throw InvalidArgument("unknown realization convention '" + std::string(s) + "'");
}

std::string_view to_string(KernelKind k) { return k == KernelKind::PositiveReal ? "pr" : "schur"; }

KernelKind kernel_kind_from_string(std::string_view s) {
  if (s == "pr") return KernelKind::PositiveReal;
  if (s == "schur") return KernelKind::Schur;
  throw InvalidArgument("unknown kernel kind '" + std::string(s) + "'");
}

std::string_view to_string(CayleyDirection d) {
  return d == CayleyDirection::HalfSpaceToBall ? "half-space-to-ball" : "ball-to-half-space";
}

CayleyDirection cayley_direction_from_string(std::string_view s) {
  if (s == "half-space-to-ball") return CayleyDirection::HalfSpaceToBall;
  if (s == "ball-to-half-space") return CayleyDirection::BallToHalfSpace;
  throw InvalidArgument("unknown Cayley direction '" + std::string(s) + "'");
}

Realization::Realization(Convention conv, QMatrix a, QMatrix b, QMatrix c, QMatrix d)
    : convention(conv), A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  validate();
}

void Realization::validate() const {
  const Index n_state = A.rows();
  if (A.cols() != n_state) throw DimensionError("realization: A must be square");
  if (B.rows() != n_state) throw DimensionError("realization: B must have as many rows as A");
  if (C.cols() != n_state) throw DimensionError("realization: C must have as many columns as A");
  if (D.rows() != C.rows()) throw DimensionError("realization: D and C must have the same row count");
  if (D.cols() != B.cols()) throw DimensionError("realization: D and B must have the same column count");
  if (D.rows() == 0 || D.cols() == 0) throw DimensionError("realization: D must be non-empty");
}

namespace {

void check_pivot(const ComplexMatrix& pivot, double tol, Complex z) {
  Eigen::JacobiSVD<ComplexMatrix> svd(pivot);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > tol * s(0))) {
    throw PoleError("evaluation point " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                    std::to_string(z.imag()) + "i lies on a pole sphere");
  }
}

struct Components {
  ComplexMatrix f1;
  ComplexMatrix f2;
};

Components components(const Realization& r, Complex z, double tol) {
  const ComplexMatrix g = chi_transfer(r, z, tol);
  const Index n = r.output_dim();
  const Index m = r.input_dim();
  return {g.topLeftCorner(n, m), g.topRightCorner(n, m)};
}

// alpha + J beta with alpha = (f(z) + f(zbar))/2 and beta = -i (f(z) - f(zbar))/2.
QMatrix extend_from_slice(const ComplexMatrix& f1_z, const ComplexMatrix& f2_z, const ComplexMatrix& f1_zb,
                          const ComplexMatrix& f2_zb, const SlicePoint& sp, SliceValue* parts = nullptr) {
  const QMatrix fz = QMatrix::from_parts(f1_z, f2_z);
  const QMatrix fzb = QMatrix::from_parts(f1_zb, f2_zb);
  QMatrix alpha = 0.5 * (fz + fzb);
  QMatrix beta = Quaternion(0.0, -0.5) * (fz - fzb);
  QMatrix value = alpha + sp.J * beta;
  if (parts != nullptr) *parts = {std::move(alpha), std::move(beta)};
  return value;
}

// ((F1 + F2 j) * g)(x + Jy) for g the star inverse of the linear factor at q,
// given the holomorphic components of F at z = x + iy and at conj(z).
QMatrix star_with_inverse_linear(const ComplexMatrix& F1_z, const ComplexMatrix& F2_z, const ComplexMatrix& F1_zb,
                                 const ComplexMatrix& F2_zb, const SlicePoint& sp, const Quaternion& q,
                                 KernelDomain domain, double tol) {
  const Complex z(sp.x, sp.y);
  const Complex q1 = q.first();
  const Complex q2 = q.second();
  const double qn2 = q.norm_squared();
  auto second_factor = [&](Complex zz, Complex& g1, Complex& g2) {
    Complex den;
    if (domain == KernelDomain::HalfSpace) {
      den = qn2 + 2.0 * q.w * zz + zz * zz;
      g1 = zz + q1;
      g2 = q2;
    } else {
      den = 1.0 - 2.0 * q.w * zz + qn2 * zz * zz;
      g1 = 1.0 - zz * q1;
      g2 = -zz * q2;
    }
    const double scale = std::max(1.0, qn2 + std::norm(zz));
    if (std::abs(den) < tol * scale) {
      throw SingularError("kernel_eval: point pair lies on a singular sphere of the kernel");
    }
    g1 /= den;
    g2 /= den;
  };
  Complex g1_z, g2_z, g1_zb, g2_zb;
  second_factor(z, g1_z, g2_z);
  second_factor(std::conj(z), g1_zb, g2_zb);

  // (F * g)(z) = [F1 g1 - F2 conj(g2(zbar))] + [F1 g2 + F2 conj(g1(zbar))] j
  const ComplexMatrix K1_z = F1_z * g1_z - F2_z * std::conj(g2_zb);
  const ComplexMatrix K2_z = F1_z * g2_z + F2_z * std::conj(g1_zb);
  const ComplexMatrix K1_zb = F1_zb * g1_zb - F2_zb * std::conj(g2_z);
  const ComplexMatrix K2_zb = F1_zb * g2_zb + F2_zb * std::conj(g1_z);
  return extend_from_slice(K1_z, K2_z, K1_zb, K2_zb, sp);
}

}  // namespace

ComplexMatrix chi_transfer(const Realization& r, Complex z, double tol) {
  const ComplexMatrix d = chi(r.D);
  const Index n_state = r.state_dim();
  if (n_state == 0) return d;
  const ComplexMatrix a = chi(r.A);
  const ComplexMatrix id = ComplexMatrix::Identity(2 * n_state, 2 * n_state);
  ComplexMatrix pivot = r.convention == Convention::AtInfinity ? ComplexMatrix(z * id - a)
                                                               : ComplexMatrix(id - z * a);
  check_pivot(pivot, tol, z);
  const ComplexMatrix resolvent_b = pivot.partialPivLu().solve(chi(r.B));
  ComplexMatrix g = d + chi(r.C) * resolvent_b;
  if (r.convention == Convention::AtOrigin) g = d + z * (g - d);
  return g;
}

QMatrix evaluate(const Realization& r, const Quaternion& p, double tol) {
  r.validate();
  const SlicePoint sp = slice_decompose(p);
  const Complex z(sp.x, sp.y);
  const Components at_z = components(r, z, tol);
  if (sp.y == 0.0) return QMatrix::from_parts(at_z.f1, at_z.f2);
  const Components at_zb = components(r, std::conj(z), tol);
  return extend_from_slice(at_z.f1, at_z.f2, at_zb.f1, at_zb.f2, sp);
}

SliceValue slice_value(const Realization& r, double x, double y, double tol) {
  r.validate();
  const Complex z(x, y);
  const Components at_z = components(r, z, tol);
  const Components at_zb = components(r, std::conj(z), tol);
  SliceValue parts;
  extend_from_slice(at_z.f1, at_z.f2, at_zb.f1, at_zb.f2, SlicePoint{x, y, Quaternion::i()}, &parts);
  return parts;
}

std::vector<Complex> chi_poles(const Realization& r) {
  std::vector<Complex> poles;
  if (r.state_dim() == 0) return poles;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(chi(r.A), false);
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex lambda = es.eigenvalues()(k);
    if (r.convention == Convention::AtInfinity) {
      poles.push_back(lambda);
    } else if (std::abs(lambda) > 1e-14) {
      poles.push_back(1.0 / lambda);
    }
  }
  return poles;
}

Quaternion star_inverse_linear(const Quaternion& p, const Quaternion& q, KernelDomain kind, double tol) {
  const double q2 = q.norm_squared();
  const double re_q = q.w;
  const Quaternion p2 = p * p;
  Quaternion den;
  Quaternion num;
  if (kind == KernelDomain::HalfSpace) {
    den = Quaternion(q2) + 2.0 * re_q * p + p2;
    num = p + q;
  } else {
    den = Quaternion(1.0) - 2.0 * re_q * p + q2 * p2;
    num = Quaternion(1.0) - p * q;
  }
  const double scale = std::max(1.0, q2 + p.norm_squared());
  if (den.norm() < tol * scale) {
    throw SingularError("star_inverse_linear: p lies on the singular sphere of the star inverse");
  }
  return quat_inverse(den) * num;
}

KernelEvaluator::KernelEvaluator(const Realization& r, KernelKind kind, std::span<const Quaternion> points,
                                 double tol)
    : kind_(kind), tol_(tol), n_(r.output_dim()), points_(points.begin(), points.end()) {
  r.validate();
  if (kind == KernelKind::PositiveReal && r.output_dim() != r.input_dim()) {
    throw DimensionError("positive-real kernel needs a square function");
  }
  data_.reserve(points_.size());
  values_.reserve(points_.size());
  for (const Quaternion& p : points_) {
    PointData pd;
    pd.slice = slice_decompose(p);
    pd.z = Complex(pd.slice.x, pd.slice.y);
    Components at_z = components(r, pd.z, tol);
    Components at_zb = pd.slice.y == 0.0 ? at_z : components(r, std::conj(pd.z), tol);
    pd.f1_z = std::move(at_z.f1);
    pd.f2_z = std::move(at_z.f2);
    pd.f1_zbar = std::move(at_zb.f1);
    pd.f2_zbar = std::move(at_zb.f2);
    values_.push_back(extend_from_slice(pd.f1_z, pd.f2_z, pd.f1_zbar, pd.f2_zbar, pd.slice));
    data_.push_back(std::move(pd));
  }
}

QMatrix KernelEvaluator::operator()(std::size_t a, std::size_t b) const {
  const PointData& pd = data_[a];
  const Quaternion& q = points_[b];
  const QMatrix c = values_[b].adjoint();
  const ComplexMatrix c1 = c.part_a();
  const ComplexMatrix c2 = c.part_b();

  // Holomorphic components of the left factor at z and at conj(z).
  ComplexMatrix F1_z, F2_z, F1_zb, F2_zb;
  if (kind_ == KernelKind::PositiveReal) {
    F1_z = pd.f1_z + c1;
    F2_z = pd.f2_z + c2;
    F1_zb = pd.f1_zbar + c1;
    F2_zb = pd.f2_zbar + c2;
  } else {
    // S * c for the constant c = S(q)^*, then I - (S * c).
    const ComplexMatrix id = ComplexMatrix::Identity(n_, n_);
    F1_z = id - (pd.f1_z * c1 - pd.f2_z * c2.conjugate());
    F2_z = -(pd.f1_z * c2 + pd.f2_z * c1.conjugate());
    F1_zb = id - (pd.f1_zbar * c1 - pd.f2_zbar * c2.conjugate());
    F2_zb = -(pd.f1_zbar * c2 + pd.f2_zbar * c1.conjugate());
  }

  return star_with_inverse_linear(F1_z, F2_z, F1_zb, F2_zb, pd.slice, q,
                                  kind_ == KernelKind::PositiveReal ? KernelDomain::HalfSpace : KernelDomain::Ball,
                                  tol_);
}

QMatrix star_kernel_term(const Realization& f, const QMatrix& c, const Quaternion& p, const Quaternion& q,
                         KernelDomain domain, double tol) {
  f.validate();
  if (c.rows() != f.input_dim()) throw DimensionError("star_kernel_term: constant factor is not conformal");
  const SlicePoint sp = slice_decompose(p);
  const Complex z(sp.x, sp.y);
  const Components at_z = components(f, z, tol);
  const Components at_zb = sp.y == 0.0 ? at_z : components(f, std::conj(z), tol);
  const ComplexMatrix c1 = c.part_a();
  const ComplexMatrix c2 = c.part_b();
  return star_with_inverse_linear(at_z.f1 * c1 - at_z.f2 * c2.conjugate(), at_z.f1 * c2 + at_z.f2 * c1.conjugate(),
                                  at_zb.f1 * c1 - at_zb.f2 * c2.conjugate(),
                                  at_zb.f1 * c2 + at_zb.f2 * c1.conjugate(), sp, q, domain, tol);
}

QMatrix kernel_eval(const Realization& r, const Quaternion& p, const Quaternion& q, KernelKind kind,
                    double tol) {
  const Quaternion pts[2] = {p, q};
  KernelEvaluator eval(r, kind, pts, tol);
  return eval(0, 1);
}

namespace {

QMatrix pivot_inverse(const QMatrix& m, double tol, const char* what) {
  try {
    return inverse(m, tol);
  } catch (const SingularError&) {
    throw CayleyPivotSingular(std::string("cayley_transform: pivot ") + what + " is singular");
  }
}

}  // namespace

Realization cayley_transform(const Realization& r, CayleyDirection direction, double tol) {
  r.validate();
  if (r.output_dim() != r.input_dim()) throw DimensionError("cayley_transform: function must be square");
  const Index n_state = r.state_dim();
  const Index n = r.output_dim();
  const QMatrix id_n = QMatrix::identity(n);
  const QMatrix id_s = QMatrix::identity(n_state);
  const double root2 = std::sqrt(2.0);

  if (direction == CayleyDirection::HalfSpaceToBall) {
    if (r.convention != Convention::AtInfinity) {
      throw InvalidArgument("cayley_transform: half-space data must use the at-infinity convention");
    }
    // Value map first, then the variable map.
    const QMatrix dpi = pivot_inverse(id_n + r.D, tol, "I + D");
    const QMatrix as = r.A - r.B * dpi * r.C;
    const QMatrix bs = r.B * dpi;
    const QMatrix cs = -2.0 * (dpi * r.C);
    const QMatrix ds = 2.0 * dpi - id_n;
    const QMatrix piv = pivot_inverse(id_s - as, tol, "I - A");
    return Realization(Convention::AtOrigin, piv * (id_s + as), root2 * (piv * bs), root2 * (cs * piv),
                       ds + cs * piv * bs);
  }

  if (r.convention != Convention::AtOrigin) {
    throw InvalidArgument("cayley_transform: ball data must use the at-origin convention");
  }
  const QMatrix piv = pivot_inverse(id_s + r.A, tol, "I + A");
  const QMatrix as = (r.A - id_s) * piv;
  const QMatrix bs = root2 * (piv * r.B);
  const QMatrix cs = root2 * (r.C * piv);
  const QMatrix ds = r.D - r.C * piv * r.B;
  const QMatrix dpi = pivot_inverse(id_n + ds, tol, "I + D");
  return Realization(Convention::AtInfinity, as - bs * dpi * cs, bs * dpi, -2.0 * (dpi * cs), 2.0 * dpi - id_n);
}

}  // namespace quatkyp
