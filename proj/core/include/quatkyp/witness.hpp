#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "quatkyp/qmatrix.hpp"
#include "quatkyp/realization.hpp"

namespace quatkyp {

enum class SampleDomain { HalfSpaceReal, HalfSpaceQuat, BallReal, BallQuat, ImaginaryAxis };

std::string_view to_string(SampleDomain d);
SampleDomain sample_domain_from_string(std::string_view s);

/// Default sampling boxes:
///   half-space-real  x in (0, 2)
///   half-space-quat  Re in (0, 2), |Im| in (0, 2), uniform direction
///   ball-real        x in (-1, 1)
///   ball-quat        uniform in the open unit 4-ball
///   imaginary-axis   iy, y in (-5, 5)
/// `interval` replaces the real range (the real part for half-space-quat).
struct SamplePlan {
  SampleDomain domain = SampleDomain::HalfSpaceReal;
  int count = 25;
  std::uint64_t seed = 0;
  double exclusion_radius = 1e-3;
  std::optional<std::pair<double, double>> interval;
};

enum class VectorMode { Random, Canonical };

std::string_view to_string(VectorMode v);
VectorMode vector_mode_from_string(std::string_view s);

struct SignatureReport {
  std::vector<Quaternion> points;
  /// One n x 1 direction per Gram row (Canonical repeats each point n times).
  std::vector<QMatrix> vectors;
  QMatrix gram;
  Signature signature;
  int kappa_estimate = 0;
  double tol = kDefaultTol;
  double hermitian_defect = 0.0;
};

/// Seeded rejection sampling.  Points are drawn sequentially from one stream,
/// so a plan with a larger count extends the point list of a smaller one.
/// Rejected: points within exclusion_radius of a pole sphere or of the domain
/// boundary, and points where evaluation raises PoleError or SingularError.
std::vector<Quaternion> sample_points(const SamplePlan& plan, const Realization& r);

/// Gram matrix g(k, l) = xi_k^* K(u_k, u_l) xi_l and its inertia.
SignatureReport kernel_signature(const Realization& r, KernelKind kind, const SamplePlan& plan,
                                 VectorMode vectors, double tol = kDefaultTol);

/// Same, for an explicit point list.
SignatureReport kernel_signature_at(const Realization& r, KernelKind kind, std::span<const Quaternion> points,
                                    VectorMode vectors, std::uint64_t vector_seed, double tol = kDefaultTol);

struct AxisReport {
  double min_eig_over_axis = 0.0;
  bool pass = false;
};

/// Smallest eigenvalue of F(iy) + F(iy)^* over ys, F the chi-image transfer
/// function; pass iff it is >= -tol * max(1, |F|).
AxisReport imaginary_axis_positivity(const Realization& r, std::span<const double> ys, double tol = kDefaultTol);

struct IntervalBallReport {
  int kappa_interval = 0;
  int kappa_ball = 0;
  bool agree = false;
};

IntervalBallReport interval_vs_ball_signature(const Realization& r, const SamplePlan& plan_interval,
                                              const SamplePlan& plan_ball, VectorMode vectors = VectorMode::Canonical,
                                              double tol = kDefaultTol);

struct ContractivityReport {
  double max_operator_norm = 0.0;
  int kernel_kappa = 0;
};

/// Largest |S(p)| over the sampled points together with the Schur-kernel
/// negative-squares estimate on the same points (canonical vectors).
ContractivityReport contractivity_scan(const Realization& r, const SamplePlan& plan, double tol = kDefaultTol);

}  // namespace quatkyp
