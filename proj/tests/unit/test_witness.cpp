#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "quatkyp/errors.hpp"
#include "quatkyp/kyp.hpp"
#include "quatkyp/random.hpp"
#include "quatkyp/witness.hpp"

using namespace quatkyp;

namespace {

QMatrix sc(double v) { return QMatrix::scalar(Quaternion(v)); }

Realization pr_scalar() { return {Convention::AtInfinity, sc(-1), sc(1), sc(1), sc(1)}; }
Realization generalized_pr() { return {Convention::AtInfinity, sc(1), sc(1), sc(-1), sc(0)}; }
Realization schur_identity() { return {Convention::AtOrigin, sc(0), sc(1), sc(1), sc(0)}; }

Realization u_counterexample() {
  const double s = 1.0 / std::sqrt(2.0);
  QMatrix b(1, 2);
  b(0, 0) = Quaternion(1.0);
  QMatrix c(2, 1);
  c(0, 0) = Quaternion(s);
  c(1, 0) = Quaternion(0.0, s);
  QMatrix d(2, 2);
  d(0, 1) = Quaternion(0.0, s);
  d(1, 1) = Quaternion(s);
  return {Convention::AtOrigin, sc(0), b, c, d};
}

SamplePlan plan(SampleDomain d, int count, std::uint64_t seed) {
  SamplePlan p;
  p.domain = d;
  p.count = count;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(SamplePoints, StayInDomain) {
  const Realization r = pr_scalar();
  for (SampleDomain d : {SampleDomain::HalfSpaceReal, SampleDomain::HalfSpaceQuat, SampleDomain::BallReal,
                         SampleDomain::BallQuat, SampleDomain::ImaginaryAxis}) {
    const std::vector<Quaternion> pts = sample_points(plan(d, 50, 7), r);
    ASSERT_EQ(pts.size(), 50u);
    for (const Quaternion& p : pts) {
      switch (d) {
        case SampleDomain::HalfSpaceReal:
          EXPECT_GT(p.w, 0.0);
          EXPECT_LT(p.w, 2.0);
          EXPECT_EQ(p.vector_part().norm(), 0.0);
          break;
        case SampleDomain::HalfSpaceQuat:
          EXPECT_GT(p.w, 0.0);
          EXPECT_LT(p.vector_part().norm(), 2.0);
          break;
        case SampleDomain::BallReal:
          EXPECT_LT(std::abs(p.w), 1.0);
          EXPECT_EQ(p.vector_part().norm(), 0.0);
          break;
        case SampleDomain::BallQuat:
          EXPECT_LT(p.norm(), 1.0);
          break;
        case SampleDomain::ImaginaryAxis:
          EXPECT_EQ(p.w, 0.0);
          EXPECT_LT(p.norm(), 5.0);
          break;
      }
    }
  }
}

TEST(SamplePoints, DeterministicAndPrefixStable) {
  const Realization r = pr_scalar();
  const std::vector<Quaternion> a = sample_points(plan(SampleDomain::HalfSpaceQuat, 10, 3), r);
  const std::vector<Quaternion> b = sample_points(plan(SampleDomain::HalfSpaceQuat, 20, 3), r);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
  const std::vector<Quaternion> c = sample_points(plan(SampleDomain::HalfSpaceQuat, 10, 4), r);
  EXPECT_FALSE(a[0] == c[0]);
}

TEST(SamplePoints, AvoidsPoles) {
  SamplePlan p = plan(SampleDomain::HalfSpaceReal, 200, 5);
  p.exclusion_radius = 0.05;
  for (const Quaternion& q : sample_points(p, generalized_pr())) EXPECT_GE(std::abs(q.w - 1.0), 0.05);
}

TEST(SamplePoints, IntervalOverride) {
  SamplePlan p = plan(SampleDomain::HalfSpaceReal, 30, 6);
  p.interval = std::make_pair(0.0, 1.0);
  for (const Quaternion& q : sample_points(p, generalized_pr())) {
    EXPECT_GT(q.w, 0.0);
    EXPECT_LT(q.w, 1.0);
  }
}

TEST(SamplePoints, ExhaustionIsReported) {
  SamplePlan p = plan(SampleDomain::HalfSpaceReal, 5, 1);
  p.interval = std::make_pair(-2.0, -1.0);
  EXPECT_THROW(sample_points(p, pr_scalar()), ExhaustedSampling);
  p.count = -1;
  EXPECT_THROW(sample_points(p, pr_scalar()), InvalidArgument);
}

TEST(KernelSignature, PositiveRealFixtureHasNoNegativeSquares) {
  for (SampleDomain d : {SampleDomain::HalfSpaceReal, SampleDomain::HalfSpaceQuat}) {
    const SignatureReport rep = kernel_signature(pr_scalar(), KernelKind::PositiveReal, plan(d, 15, 11),
                                                 VectorMode::Canonical);
    EXPECT_EQ(rep.kappa_estimate, 0);
    EXPECT_LE(rep.hermitian_defect, 1e-10);
  }
}

TEST(KernelSignature, GeneralizedFixtureHasOneNegativeSquare) {
  SamplePlan p = plan(SampleDomain::HalfSpaceReal, 20, 3);
  p.interval = std::make_pair(0.0, 1.0);
  const SignatureReport rep = kernel_signature(generalized_pr(), KernelKind::PositiveReal, p, VectorMode::Canonical);
  EXPECT_EQ(rep.kappa_estimate, 1);
  EXPECT_EQ(rep.gram.rows(), 20);
}

// Gram entries computed directly from the closed form of the kernel.
TEST(KernelSignature, GramMatchesClosedForm) {
  const std::vector<Quaternion> pts = {Quaternion(0.1), Quaternion(0.4), Quaternion(0.7), Quaternion(0.9)};
  const SignatureReport rep =
      kernel_signature_at(generalized_pr(), KernelKind::PositiveReal, pts, VectorMode::Canonical, 0);
  Eigen::MatrixXd oracle(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double x = pts[a].w;
      const double y = pts[b].w;
      oracle(a, b) = (2.0 - x - y) / ((1.0 - x) * (1.0 - y) * (x + y));
      EXPECT_NEAR(rep.gram(a, b).w, oracle(a, b), 1e-10 * std::abs(oracle(a, b)));
    }
  }
  const std::vector<double> eigs = quatkyp::testing::symmetric_eigenvalues(oracle);
  int negatives = 0;
  for (double e : eigs) negatives += e < 0.0 ? 1 : 0;
  EXPECT_EQ(rep.kappa_estimate, negatives);
}

TEST(KernelSignature, RandomVectorsOneRowPerPoint) {
  const SynthesizedSystem syn = synthesize_system(2, 2, CertificateKind::Definite, 77);
  const SignatureReport rep = kernel_signature(syn.system, KernelKind::PositiveReal,
                                               plan(SampleDomain::HalfSpaceQuat, 12, 8), VectorMode::Random);
  EXPECT_EQ(rep.gram.rows(), 12);
  for (const QMatrix& v : rep.vectors) EXPECT_NEAR(v.frobenius_norm(), 1.0, 1e-14);
  EXPECT_EQ(rep.kappa_estimate, 0);
  const SignatureReport canon = kernel_signature(syn.system, KernelKind::PositiveReal,
                                                 plan(SampleDomain::HalfSpaceQuat, 12, 8), VectorMode::Canonical);
  EXPECT_EQ(canon.gram.rows(), 24);
  EXPECT_EQ(canon.kappa_estimate, 0);
}

// Systems with a definite certificate have positive kernels: sampled Gram
// matrices are positive semidefinite at real and non-real points alike.
TEST(KernelSignature, DefiniteSynthesizedSystemsArePositive) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SynthesizedSystem syn = synthesize_system(2 + seed % 2, 2, CertificateKind::Definite, 40 + seed);
    SamplePlan p = plan(SampleDomain::HalfSpaceQuat, 15, seed);
    const SignatureReport rep = kernel_signature(syn.system, KernelKind::PositiveReal, p, VectorMode::Canonical);
    const std::vector<double> eigs = hermitian_eigenvalues(hermitian_part(rep.gram));
    EXPECT_GE(eigs.front(), -1e-8 * std::max(1.0, rep.gram.frobenius_norm())) << "seed " << seed;
  }
}

TEST(ImaginaryAxis, Examples) {
  const std::vector<double> ys = {-3.0, -1.0, 0.0, 0.5, 2.0};
  const AxisReport pr = imaginary_axis_positivity(pr_scalar(), ys);
  EXPECT_TRUE(pr.pass);
  // Re(1 + 1/(iy + 1)) = 1 + 1/(1 + y^2), doubled, smallest at y = -3.
  EXPECT_NEAR(pr.min_eig_over_axis, 2.0 + 2.0 / 10.0, 1e-12);
  const Realization neg(Convention::AtInfinity, QMatrix(0, 0), QMatrix(0, 1), QMatrix(1, 0), sc(-1));
  const AxisReport bad = imaginary_axis_positivity(neg, ys);
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.min_eig_over_axis, -2.0, 1e-14);
}

TEST(IntervalVsBall, CayleyImageOfGeneralizedFixture) {
  const Realization ball = cayley_transform(generalized_pr(), CayleyDirection::HalfSpaceToBall);
  const IntervalBallReport rep =
      interval_vs_ball_signature(ball, plan(SampleDomain::BallReal, 20, 1), plan(SampleDomain::BallQuat, 20, 2));
  EXPECT_EQ(rep.kappa_interval, 1);
  EXPECT_EQ(rep.kappa_ball, 1);
  EXPECT_TRUE(rep.agree);
}

TEST(IntervalVsBall, SchurIdentity) {
  const IntervalBallReport rep = interval_vs_ball_signature(schur_identity(), plan(SampleDomain::BallReal, 15, 1),
                                                            plan(SampleDomain::BallQuat, 15, 2));
  EXPECT_EQ(rep.kappa_interval, 0);
  EXPECT_TRUE(rep.agree);
  EXPECT_THROW(interval_vs_ball_signature(pr_scalar(), plan(SampleDomain::BallReal, 5, 1),
                                          plan(SampleDomain::BallQuat, 5, 2)),
               InvalidArgument);
}

TEST(Contractivity, SchurIdentityAndExpansiveConstant) {
  const ContractivityReport id = contractivity_scan(schur_identity(), plan(SampleDomain::BallQuat, 20, 4));
  EXPECT_LT(id.max_operator_norm, 1.0);
  EXPECT_EQ(id.kernel_kappa, 0);
  const Realization two(Convention::AtOrigin, QMatrix(0, 0), QMatrix(0, 1), QMatrix(1, 0), sc(2));
  const ContractivityReport big = contractivity_scan(two, plan(SampleDomain::BallQuat, 10, 4));
  EXPECT_NEAR(big.max_operator_norm, 2.0, 1e-14);
  EXPECT_EQ(big.kernel_kappa, 10);
}

// For U(p) the Schur kernel is identically C C^*, so every Gram matrix is
// positive semidefinite even though |U(p)| = 1 on the real ball points.
TEST(Contractivity, CounterexampleKernelIsConstant) {
  const Realization u = u_counterexample();
  const ContractivityReport real = contractivity_scan(u, plan(SampleDomain::BallReal, 25, 5));
  EXPECT_NEAR(real.max_operator_norm, 1.0, 1e-9);
  const std::vector<Quaternion> pts = sample_points(plan(SampleDomain::BallQuat, 6, 6), u);
  const SignatureReport rep = kernel_signature_at(u, KernelKind::Schur, pts, VectorMode::Canonical, 6);
  const QMatrix cc = u.C * u.C.adjoint();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      EXPECT_LE(quatkyp::testing::max_abs_diff(kernel_eval(u, pts[a], pts[b], KernelKind::Schur), cc), 1e-12);
    }
  }
  EXPECT_EQ(rep.kappa_estimate, 0);
}

TEST(Names, RoundTrip) {
  for (SampleDomain d : {SampleDomain::HalfSpaceReal, SampleDomain::HalfSpaceQuat, SampleDomain::BallReal,
                         SampleDomain::BallQuat, SampleDomain::ImaginaryAxis}) {
    EXPECT_EQ(sample_domain_from_string(to_string(d)), d);
  }
  EXPECT_EQ(vector_mode_from_string("canonical"), VectorMode::Canonical);
  EXPECT_EQ(vector_mode_from_string("random"), VectorMode::Random);
  EXPECT_THROW(vector_mode_from_string("basis"), InvalidArgument);
}
