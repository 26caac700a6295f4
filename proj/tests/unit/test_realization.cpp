#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "quatkyp/errors.hpp"
#include "quatkyp/random.hpp"
#include "quatkyp/realization.hpp"

using namespace quatkyp;
using quatkyp::testing::max_abs_diff;

namespace {

QMatrix sc(double v) { return QMatrix::scalar(Quaternion(v)); }

Realization pr_scalar() { return {Convention::AtInfinity, sc(-1), sc(1), sc(1), sc(1)}; }
Realization generalized_pr() { return {Convention::AtInfinity, sc(1), sc(1), sc(-1), sc(0)}; }
Realization unit_constant() { return {Convention::AtInfinity, QMatrix(0, 0), QMatrix(0, 1), QMatrix(1, 0), sc(1)}; }
Realization schur_identity() { return {Convention::AtOrigin, sc(0), sc(1), sc(1), sc(0)}; }

Realization random_system(Rng& rng, Index n_state, Index n, Index m, Convention conv, double a_scale = 1.0) {
  return {conv, random_qmatrix(n_state, n_state, rng, a_scale / std::sqrt(static_cast<double>(n_state))),
          random_qmatrix(n_state, m, rng), random_qmatrix(n, n_state, rng), random_qmatrix(n, m, rng)};
}

Quaternion random_point(Rng& rng, double radius) {
  Quaternion p = random_quaternion(rng);
  return p * (radius / p.norm());
}

}  // namespace

TEST(Realization, ValidatesShapes) {
  EXPECT_THROW(Realization(Convention::AtInfinity, QMatrix(2, 2), QMatrix(1, 1), QMatrix(1, 2), sc(1)),
               DimensionError);
  EXPECT_THROW(Realization(Convention::AtInfinity, QMatrix(2, 1), QMatrix(2, 1), QMatrix(1, 2), sc(1)),
               DimensionError);
  EXPECT_NO_THROW(unit_constant());
}

TEST(Evaluate, ScalarExamples) {
  EXPECT_LE(max_abs_diff(evaluate(pr_scalar(), Quaternion(1.0)), sc(1.5)), 1e-15);
  EXPECT_LE(max_abs_diff(evaluate(pr_scalar(), Quaternion::j()), QMatrix::scalar(Quaternion(1.5, 0, -0.5))), 1e-15);
  // 1 + (p + 1)^{-1} at a general point.
  const Quaternion p(0.3, -0.7, 1.1, 0.4);
  const Quaternion expected = Quaternion(1.0) + quat_inverse(p + Quaternion(1.0));
  EXPECT_LE((evaluate(pr_scalar(), p)(0, 0) - expected).norm(), 1e-14);
}

TEST(Evaluate, RealPointsMatchNativeArithmetic) {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const Realization r = random_system(rng, 3, 2, 2, Convention::AtInfinity);
    const double x = 2.0 * quatkyp::testing::spectral_radius(r.A) + 1.0;
    EXPECT_LE(max_abs_diff(evaluate(r, Quaternion(x)), quatkyp::testing::native_real_eval(r, x)), 1e-11);
    EXPECT_LE(max_abs_diff(evaluate(r, Quaternion(-x)), quatkyp::testing::native_real_eval(r, -x)), 1e-11);
  }
}

TEST(Evaluate, MatchesPowerSeriesOutsideSpectralRadius) {
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const Realization r = random_system(rng, 3, 2, 3, Convention::AtInfinity);
    const double rho = quatkyp::testing::spectral_radius(r.A);
    const double radius = 2.0 * rho + 1.0;
    const int terms = static_cast<int>(std::ceil(std::log(1e-13) / std::log(rho / radius))) + 5;
    for (int s = 0; s < 3; ++s) {
      const Quaternion p = random_point(rng, radius);
      EXPECT_LE(max_abs_diff(evaluate(r, p), quatkyp::testing::series_eval(r, p, terms)), 1e-8);
    }
  }
}

TEST(Evaluate, AtOriginMatchesPowerSeriesInsideDisk) {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const Realization r = random_system(rng, 3, 2, 2, Convention::AtOrigin);
    const double rho = std::max(quatkyp::testing::spectral_radius(r.A), 1e-3);
    const double radius = 1.0 / (2.0 * rho + 1.0);
    const int terms = static_cast<int>(std::ceil(std::log(1e-13) / std::log(rho * radius))) + 5;
    const Quaternion p = random_point(rng, radius);
    EXPECT_LE(max_abs_diff(evaluate(r, p), quatkyp::testing::series_eval(r, p, terms)), 1e-8);
  }
}

TEST(Evaluate, PoleThrows) {
  EXPECT_THROW(evaluate(pr_scalar(), Quaternion(-1.0)), PoleError);
  EXPECT_THROW(evaluate(generalized_pr(), Quaternion(1.0)), PoleError);
}

TEST(Evaluate, PolesReported) {
  const std::vector<Complex> poles = chi_poles(pr_scalar());
  ASSERT_EQ(poles.size(), 2u);
  for (Complex z : poles) EXPECT_NEAR(std::abs(z - Complex(-1.0, 0.0)), 0.0, 1e-14);
  const Realization origin(Convention::AtOrigin, sc(2), sc(1), sc(1), sc(0));
  for (Complex z : chi_poles(origin)) EXPECT_NEAR(std::abs(z - Complex(0.5, 0.0)), 0.0, 1e-14);
}

TEST(SliceValue, ParityInY) {
  Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const Realization r = random_system(rng, 3, 2, 2, Convention::AtInfinity);
    const double x = 3.0 + k * 0.1;
    const double y = 0.7 + 0.05 * k;
    const SliceValue up = slice_value(r, x, y);
    const SliceValue down = slice_value(r, x, -y);
    EXPECT_LE(max_abs_diff(up.alpha, down.alpha), 1e-11);
    EXPECT_LE(max_abs_diff(up.beta, -1.0 * down.beta), 1e-11);
    // f(x + Jy) = alpha + J beta on an arbitrary slice.
    const Quaternion j_unit = Quaternion(0, 0.6, 0, 0.8);
    EXPECT_LE(max_abs_diff(evaluate(r, Quaternion(x) + j_unit * y), up.alpha + j_unit * up.beta), 1e-11);
  }
}

TEST(StarInverseLinear, Examples) {
  EXPECT_NEAR((star_inverse_linear(Quaternion(1), Quaternion(1), KernelDomain::HalfSpace) - Quaternion(0.5)).norm(),
              0.0, 1e-15);
  Rng rng(25);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR((star_inverse_linear(Quaternion(0), random_quaternion(rng), KernelDomain::Ball) - Quaternion(1)).norm(),
                0.0, 1e-15);
  }
  EXPECT_THROW(star_inverse_linear(Quaternion::i(), Quaternion::j(), KernelDomain::HalfSpace), SingularError);
}

TEST(StarInverseLinear, RealArgumentsAreReciprocals) {
  for (double x : {0.1, 0.5, 2.0}) {
    for (double y : {0.3, 1.7}) {
      EXPECT_NEAR(star_inverse_linear(Quaternion(x), Quaternion(y), KernelDomain::HalfSpace).w, 1.0 / (x + y), 1e-15);
      EXPECT_NEAR(star_inverse_linear(Quaternion(x / 3), Quaternion(y / 2), KernelDomain::Ball).w,
                  1.0 / (1.0 - x * y / 6), 1e-14);
    }
  }
}

TEST(KernelEval, Examples) {
  for (double x : {0.2, 0.9, 1.7}) {
    for (double y : {0.4, 1.3}) {
      EXPECT_NEAR(kernel_eval(unit_constant(), Quaternion(x), Quaternion(y), KernelKind::PositiveReal)(0, 0).w,
                  2.0 / (x + y), 1e-14);
    }
  }
  for (double x : {-0.7, 0.1, 0.6}) {
    for (double y : {-0.2, 0.5}) {
      EXPECT_NEAR(kernel_eval(schur_identity(), Quaternion(x), Quaternion(y), KernelKind::Schur)(0, 0).w, 1.0, 1e-14);
    }
  }
  for (double x : {0.1, 0.5, 0.9}) {
    for (double y : {0.3, 0.9}) {
      const double expected = (2.0 - x - y) / ((1.0 - x) * (1.0 - y) * (x + y));
      EXPECT_NEAR(kernel_eval(generalized_pr(), Quaternion(x), Quaternion(y), KernelKind::PositiveReal)(0, 0).w,
                  expected, 1e-11 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(KernelEval, RealArgumentsMatchPointwiseQuotient) {
  Rng rng(26);
  for (int k = 0; k < 20; ++k) {
    const Realization r = random_system(rng, 2, 2, 2, Convention::AtInfinity, 0.3);
    const double x = 1.0 + 0.1 * k;
    const double y = 0.5 + 0.05 * k;
    const QMatrix fx = evaluate(r, Quaternion(x));
    const QMatrix fy = evaluate(r, Quaternion(y));
    const QMatrix expected = (1.0 / (x + y)) * (fx + fy.adjoint());
    EXPECT_LE(max_abs_diff(kernel_eval(r, Quaternion(x), Quaternion(y), KernelKind::PositiveReal), expected), 1e-11);
    const Realization s = random_system(rng, 2, 2, 3, Convention::AtOrigin, 0.3);
    const double u = -0.4 + 0.03 * k;
    const double v = 0.2;
    const QMatrix su = evaluate(s, Quaternion(u));
    const QMatrix sv = evaluate(s, Quaternion(v));
    const QMatrix schur = (1.0 / (1.0 - u * v)) * (QMatrix::identity(2) - su * sv.adjoint());
    EXPECT_LE(max_abs_diff(kernel_eval(s, Quaternion(u), Quaternion(v), KernelKind::Schur), schur), 1e-11);
  }
}

TEST(KernelEval, HermitianSymmetry) {
  Rng rng(27);
  for (int k = 0; k < 50; ++k) {
    const Realization r = random_system(rng, 3, 2, 2, Convention::AtInfinity, 0.5);
    Quaternion p = random_quaternion(rng);
    Quaternion q = random_quaternion(rng);
    p.w = std::abs(p.w) + 1.0;
    q.w = std::abs(q.w) + 1.0;
    const QMatrix kpq = kernel_eval(r, p, q, KernelKind::PositiveReal);
    const QMatrix kqp = kernel_eval(r, q, p, KernelKind::PositiveReal);
    EXPECT_LE((kpq - kqp.adjoint()).frobenius_norm(), 1e-9 * std::max(1.0, kpq.frobenius_norm()));

    const Realization s = random_system(rng, 2, 2, 2, Convention::AtOrigin, 0.5);
    const Quaternion u = random_point(rng, 0.8);
    const Quaternion v = random_point(rng, 0.6);
    const QMatrix kuv = kernel_eval(s, u, v, KernelKind::Schur);
    const QMatrix kvu = kernel_eval(s, v, u, KernelKind::Schur);
    EXPECT_LE((kuv - kvu.adjoint()).frobenius_norm(), 1e-9 * std::max(1.0, kuv.frobenius_norm()));
  }
}

// On the slice C_J every factor is an ordinary holomorphic function and the star
// product with (p + conj q)^{-*} can be checked against the closed form.
TEST(KernelEval, ScalarComplexSliceAgreesWithPointwiseFormula) {
  const Realization r = pr_scalar();
  const Quaternion p(0.4, 0.9);
  const Quaternion q(1.3, -0.2);
  const Quaternion phi_p = evaluate(r, p)(0, 0);
  const Quaternion phi_q = evaluate(r, q)(0, 0);
  // phi, q and p commute on C_i, so the star product is pointwise.
  const Quaternion expected = (phi_p + phi_q.conj()) * quat_inverse(p + q.conj());
  EXPECT_LE((kernel_eval(r, p, q, KernelKind::PositiveReal)(0, 0) - expected).norm(), 1e-14);
}

TEST(KernelEval, SingularSphereThrows) {
  EXPECT_THROW(kernel_eval(unit_constant(), Quaternion::i(), Quaternion::j(), KernelKind::PositiveReal),
               SingularError);
}

TEST(Cayley, ConstantExamples) {
  const Realization s0 = cayley_transform(unit_constant(), CayleyDirection::HalfSpaceToBall);
  EXPECT_EQ(s0.convention, Convention::AtOrigin);
  EXPECT_LE(s0.D.max_abs(), 1e-15);
}

TEST(Cayley, ScaledIdentityBallToHalfSpace) {
  // S(p) = p/2 goes to phi(x) = (1 - S(w))/(1 + S(w)), w = (1 - x)/(1 + x),
  // which simplifies to (1 + 3x)/(3 + x).
  const Realization s(Convention::AtOrigin, sc(0), sc(0.5), sc(1), sc(0));
  const Realization phi = cayley_transform(s, CayleyDirection::BallToHalfSpace);
  EXPECT_EQ(phi.convention, Convention::AtInfinity);
  for (double x : {0.1, 0.5, 1.0, 3.0}) {
    EXPECT_NEAR(evaluate(phi, Quaternion(x))(0, 0).w, (1.0 + 3.0 * x) / (3.0 + x), 1e-13);
  }
}

TEST(Cayley, IdentityFunctionHitsSingularValuePivot) {
  EXPECT_THROW(cayley_transform(schur_identity(), CayleyDirection::BallToHalfSpace), CayleyPivotSingular);
  const Realization minus_one(Convention::AtOrigin, sc(-1), sc(1), sc(1), sc(0));
  EXPECT_THROW(cayley_transform(minus_one, CayleyDirection::BallToHalfSpace), CayleyPivotSingular);
  const Realization phi_minus_one(Convention::AtInfinity, QMatrix(0, 0), QMatrix(0, 1), QMatrix(1, 0), sc(-1));
  EXPECT_THROW(cayley_transform(phi_minus_one, CayleyDirection::HalfSpaceToBall), CayleyPivotSingular);
}

TEST(Cayley, GeneralizedFixtureImage) {
  // 1/(1 - p) maps to (w - 1)/(1 + 3w).
  const Realization s = cayley_transform(generalized_pr(), CayleyDirection::HalfSpaceToBall);
  for (double w : {-0.9, -0.1, 0.4, 0.8}) {
    EXPECT_NEAR(evaluate(s, Quaternion(w))(0, 0).w, (w - 1.0) / (1.0 + 3.0 * w), 1e-13);
  }
}

TEST(Cayley, MapsValuesPointwiseAtRealPoints) {
  Rng rng(28);
  for (int k = 0; k < 20; ++k) {
    Realization r = random_system(rng, 3, 2, 2, Convention::AtInfinity, 0.5);
    r.D += 3.0 * QMatrix::identity(2);
    const Realization s = cayley_transform(r, CayleyDirection::HalfSpaceToBall);
    for (double x : {0.3, 1.1, 2.5}) {
      const QMatrix phi = evaluate(r, Quaternion(x));
      const QMatrix id = QMatrix::identity(2);
      const QMatrix expected = (id - phi) * inverse(id + phi);
      EXPECT_LE(max_abs_diff(evaluate(s, Quaternion((1.0 - x) / (1.0 + x))), expected), 1e-10);
    }
  }
}

TEST(Cayley, RoundTripReproducesValues) {
  Rng rng(29);
  for (int k = 0; k < 20; ++k) {
    Realization r = random_system(rng, 3, 2, 2, Convention::AtInfinity, 0.5);
    r.A -= 2.0 * QMatrix::identity(3);
    r.D += 3.0 * QMatrix::identity(2);
    const Realization back = cayley_transform(cayley_transform(r, CayleyDirection::HalfSpaceToBall),
                                              CayleyDirection::BallToHalfSpace);
    EXPECT_LE(max_abs_diff(back.A, r.A), 1e-10);
    for (int t = 0; t < 20; ++t) {
      Quaternion p = random_quaternion(rng);
      p.w = std::abs(p.w) + 0.5;
      const QMatrix v = evaluate(r, p);
      EXPECT_LE(max_abs_diff(evaluate(back, p), v), 1e-9 * std::max(1.0, v.max_abs()));
    }
  }
}

TEST(Cayley, ConventionIsChecked) {
  EXPECT_THROW(cayley_transform(schur_identity(), CayleyDirection::HalfSpaceToBall), InvalidArgument);
  EXPECT_THROW(cayley_transform(pr_scalar(), CayleyDirection::BallToHalfSpace), InvalidArgument);
}
