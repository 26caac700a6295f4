#include "quatkyp/witness.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "quatkyp/errors.hpp"
#include "quatkyp/random.hpp"

namespace quatkyp {

std::string_view to_string(SampleDomain d) {
  switch (d) {
    case SampleDomain::HalfSpaceReal:
      return "half-space-real";
    case SampleDomain::HalfSpaceQuat:
      return "half-space-quat";
    case SampleDomain::BallReal:
      return "ball-real";
    case SampleDomain::BallQuat:
      return "ball-quat";
    case SampleDomain::ImaginaryAxis:
      break;
  }
  return "imaginary-axis";
}

SampleDomain sample_domain_from_string(std::string_view s) {
  for (SampleDomain d : {SampleDomain::HalfSpaceReal, SampleDomain::HalfSpaceQuat, SampleDomain::BallReal,
                         SampleDomain::BallQuat, SampleDomain::ImaginaryAxis}) {
    if (s == to_string(d)) return d;
  }
  throw InvalidArgument("unknown sample domain '" + std::string(s) + "'");
}

std::string_view to_string(VectorMode v) { return v == VectorMode::Random ? "random" : "canonical"; }

VectorMode vector_mode_from_string(std::string_view s) {
  if (s == "random") return VectorMode::Random;
  if (s == "canonical") return VectorMode::Canonical;
  throw InvalidArgument("unknown vector mode '" + std::string(s) + "'");
}

namespace {

constexpr std::uint64_t kVectorStream = 0xD1B54A32D192ED03ULL;

Quaternion unit_imaginary(Rng& rng) {
  std::normal_distribution<double> nd;
  for (;;) {
    const Quaternion v(0.0, nd(rng), nd(rng), nd(rng));
    const double n = v.norm();
    if (n > 1e-8) return v / n;
  }
}

Quaternion draw(const SamplePlan& plan, Rng& rng) {
  const double eps = plan.exclusion_radius;
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto range = [&](double lo, double hi) { return plan.interval.value_or(std::make_pair(lo, hi)); };
  switch (plan.domain) {
    case SampleDomain::HalfSpaceReal: {
      const auto [lo, hi] = range(0.0, 2.0);
      return Quaternion(uniform(lo, hi));
    }
    case SampleDomain::HalfSpaceQuat: {
      const auto [lo, hi] = range(0.0, 2.0);
      const double x = uniform(lo, hi);
      const double y = uniform(0.0, 2.0);
      return Quaternion(x) + unit_imaginary(rng) * y;
    }
    case SampleDomain::BallReal: {
      const auto [lo, hi] = range(-1.0 + eps, 1.0 - eps);
      return Quaternion(uniform(lo, hi));
    }
    case SampleDomain::BallQuat: {
      std::normal_distribution<double> nd;
      Quaternion v(nd(rng), nd(rng), nd(rng), nd(rng));
      const double n = std::max(v.norm(), 1e-300);
      const double radius = (1.0 - eps) * std::pow(uniform(0.0, 1.0), 0.25);
      return v * (radius / n);
    }
    case SampleDomain::ImaginaryAxis: {
      const auto [lo, hi] = range(-5.0, 5.0);
      return Quaternion::i() * uniform(lo, hi);
    }
  }
  throw InternalError("sample_points: unknown domain");
}

bool in_domain(const SamplePlan& plan, const Quaternion& p) {
  const double eps = plan.exclusion_radius;
  switch (plan.domain) {
    case SampleDomain::HalfSpaceReal:
    case SampleDomain::HalfSpaceQuat:
      return p.w >= eps;
    case SampleDomain::BallReal:
    case SampleDomain::BallQuat:
      return p.norm() <= 1.0 - eps;
    case SampleDomain::ImaginaryAxis:
      return true;
  }
  return false;
}

}  // namespace

std::vector<Quaternion> sample_points(const SamplePlan& plan, const Realization& r) {
  if (plan.count < 0) throw InvalidArgument("sample_points: count must be nonnegative");
  r.validate();
  Rng rng(plan.seed);
  // Each pole sphere meets the upper half of C_i in one point.
  std::vector<Complex> poles;
  for (Complex lambda : chi_poles(r)) poles.emplace_back(lambda.real(), std::abs(lambda.imag()));

  std::vector<Quaternion> out;
  const long long max_attempts = 100LL * std::max(1, plan.count);
  long long attempts = 0;
  while (static_cast<int>(out.size()) < plan.count) {
    if (attempts++ >= max_attempts) {
      throw ExhaustedSampling("sample_points: only " + std::to_string(out.size()) + " of " +
                              std::to_string(plan.count) + " points found in " + std::to_string(max_attempts) +
                              " attempts");
    }
    const Quaternion p = draw(plan, rng);
    if (!in_domain(plan, p)) continue;
    const SlicePoint sp = slice_decompose(p);
    const Complex z(sp.x, sp.y);
    bool near_pole = false;
    for (Complex pole : poles) near_pole = near_pole || std::abs(z - pole) < plan.exclusion_radius;
    if (near_pole) continue;
    try {
      evaluate(r, p);
    } catch (const SingularError&) {
      continue;
    }
    out.push_back(p);
  }
  return out;
}

SignatureReport kernel_signature_at(const Realization& r, KernelKind kind, std::span<const Quaternion> points,
                                    VectorMode vectors, std::uint64_t vector_seed, double tol) {
  const KernelEvaluator kernel(r, kind, points, tol);
  const Index n = r.output_dim();
  SignatureReport rep;
  rep.points.assign(points.begin(), points.end());
  rep.tol = tol;

  std::vector<std::size_t> owner;
  if (vectors == VectorMode::Canonical) {
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (Index e = 0; e < n; ++e) {
        QMatrix v(n, 1);
        v(e, 0) = Quaternion(1.0);
        rep.vectors.push_back(std::move(v));
        owner.push_back(a);
      }
    }
  } else {
    Rng rng(vector_seed ^ kVectorStream);
    for (std::size_t a = 0; a < points.size(); ++a) {
      QMatrix v = random_qmatrix(n, 1, rng);
      v *= 1.0 / v.frobenius_norm();
      rep.vectors.push_back(std::move(v));
      owner.push_back(a);
    }
  }

  std::vector<QMatrix> k_cache(points.size() * points.size());
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) k_cache[a * points.size() + b] = kernel(a, b);
  }
  const Index size = static_cast<Index>(rep.vectors.size());
  rep.gram = QMatrix(size, size);
  for (Index k = 0; k < size; ++k) {
    const QMatrix xk = rep.vectors[static_cast<std::size_t>(k)].adjoint();
    for (Index l = 0; l < size; ++l) {
      const QMatrix& kk = k_cache[owner[static_cast<std::size_t>(k)] * points.size() + owner[static_cast<std::size_t>(l)]];
      rep.gram(k, l) = (xk * kk * rep.vectors[static_cast<std::size_t>(l)])(0, 0);
    }
  }
  rep.hermitian_defect = hermitian_defect(rep.gram);
  rep.signature = hermitian_signature(hermitian_part(rep.gram), tol);
  rep.kappa_estimate = rep.signature.n_minus;
  return rep;
}

SignatureReport kernel_signature(const Realization& r, KernelKind kind, const SamplePlan& plan, VectorMode vectors,
                                 double tol) {
  const std::vector<Quaternion> pts = sample_points(plan, r);
  return kernel_signature_at(r, kind, pts, vectors, plan.seed, tol);
}

AxisReport imaginary_axis_positivity(const Realization& r, std::span<const double> ys, double tol) {
  r.validate();
  if (r.output_dim() != r.input_dim()) throw DimensionError("imaginary_axis_positivity: function must be square");
  AxisReport rep;
  rep.min_eig_over_axis = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (double y : ys) {
    const ComplexMatrix f = chi_transfer(r, Complex(0.0, y), tol);
    const ComplexMatrix herm = f + f.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
    const double lam = es.eigenvalues()(0);
    rep.min_eig_over_axis = std::min(rep.min_eig_over_axis, lam);
    ok = ok && lam >= -tol * std::max(1.0, f.norm());
  }
  rep.pass = ok;
  return rep;
}

IntervalBallReport interval_vs_ball_signature(const Realization& r, const SamplePlan& plan_interval,
                                              const SamplePlan& plan_ball, VectorMode vectors, double tol) {
  if (r.convention != Convention::AtOrigin) {
    throw InvalidArgument("interval_vs_ball_signature: needs an at-origin realization");
  }
  IntervalBallReport rep;
  rep.kappa_interval = kernel_signature(r, KernelKind::Schur, plan_interval, vectors, tol).kappa_estimate;
  rep.kappa_ball = kernel_signature(r, KernelKind::Schur, plan_ball, vectors, tol).kappa_estimate;
  rep.agree = rep.kappa_interval == rep.kappa_ball;
  return rep;
}

ContractivityReport contractivity_scan(const Realization& r, const SamplePlan& plan, double tol) {
  if (r.convention != Convention::AtOrigin) throw InvalidArgument("contractivity_scan: needs an at-origin realization");
  const std::vector<Quaternion> pts = sample_points(plan, r);
  ContractivityReport rep;
  for (const Quaternion& p : pts) rep.max_operator_norm = std::max(rep.max_operator_norm, operator_norm(evaluate(r, p, tol)));
  rep.kernel_kappa = kernel_signature_at(r, KernelKind::Schur, pts, VectorMode::Canonical, plan.seed, tol).kappa_estimate;
  return rep;
}

}  // namespace quatkyp
