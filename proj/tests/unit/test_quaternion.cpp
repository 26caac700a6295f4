#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "quatkyp/errors.hpp"
#include "quatkyp/quaternion.hpp"
#include "quatkyp/random.hpp"

using namespace quatkyp;

namespace {

void expect_near(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  EXPECT_LE((a - b).norm(), tol * scale) << a << " vs " << b;
}

}  // namespace

TEST(QuaternionProduct, UnitTable) {
  expect_near(Quaternion::i() * Quaternion::j(), Quaternion::k());
  expect_near(Quaternion::j() * Quaternion::i(), -Quaternion::k());
  expect_near(Quaternion::j() * Quaternion::k(), Quaternion::i());
  expect_near(Quaternion::k() * Quaternion::j(), -Quaternion::i());
  expect_near(Quaternion::k() * Quaternion::i(), Quaternion::j());
  expect_near(Quaternion::i() * Quaternion::i(), Quaternion(-1.0));
}

TEST(QuaternionProduct, IdentityAndExpansion) {
  const Quaternion p(0.3, -1.2, 2.5, 0.7);
  expect_near(quat_mul(Quaternion(1.0), p), p);
  expect_near(quat_mul(Quaternion(1, 1), Quaternion(1, 0, 1)), Quaternion(1, 1, 1, 1));
}

TEST(QuaternionInverse, Examples) {
  expect_near(quat_inverse(Quaternion::i()), -Quaternion::i());
  expect_near(quat_inverse(Quaternion(2.0)), Quaternion(0.5));
  const Quaternion p(1, 1, 1, 1);
  expect_near(quat_inverse(p), Quaternion(1, -1, -1, -1) / 4.0);
  expect_near(p * quat_inverse(p), Quaternion(1.0));
  expect_near(quat_inverse(p) * p, Quaternion(1.0));
}

TEST(QuaternionInverse, ZeroThrows) {
  EXPECT_THROW(quat_inverse(Quaternion()), ZeroDivision);
  EXPECT_THROW(quat_inverse(Quaternion(1e-320)), ZeroDivision);
}

TEST(SliceDecompose, Examples) {
  const SlicePoint a = slice_decompose(Quaternion(3, 4));
  EXPECT_DOUBLE_EQ(a.x, 3.0);
  EXPECT_DOUBLE_EQ(a.y, 4.0);
  expect_near(a.J, Quaternion::i());

  const SlicePoint b = slice_decompose(Quaternion(5));
  EXPECT_DOUBLE_EQ(b.x, 5.0);
  EXPECT_DOUBLE_EQ(b.y, 0.0);
  expect_near(b.J, Quaternion::i());

  const SlicePoint c = slice_decompose(Quaternion(1, 1, 1, 1));
  EXPECT_DOUBLE_EQ(c.x, 1.0);
  EXPECT_NEAR(c.y, std::sqrt(3.0), 1e-15);
  expect_near(c.J, Quaternion(0, 1, 1, 1) / std::sqrt(3.0));
}

TEST(QuaternionProperties, NormIsMultiplicative) {
  Rng rng(101);
  for (int k = 0; k < 10000; ++k) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const double lhs = (a * b).norm();
    const double rhs = a.norm() * b.norm();
    ASSERT_LE(std::abs(lhs - rhs), 1e-13 * rhs);
  }
}

TEST(QuaternionProperties, ConjugateReversesProducts) {
  Rng rng(102);
  for (int k = 0; k < 10000; ++k) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    ASSERT_LE(((a * b).conj() - b.conj() * a.conj()).norm(), 1e-13 * std::max(1.0, a.norm() * b.norm()));
  }
}

TEST(QuaternionProperties, SliceRecomposeIsIdentity) {
  Rng rng(103);
  for (int k = 0; k < 10000; ++k) {
    const Quaternion p = random_quaternion(rng);
    const SlicePoint sp = slice_decompose(p);
    ASSERT_GE(sp.y, 0.0);
    ASSERT_NEAR(sp.J.norm(), 1.0, 1e-15);
    ASSERT_EQ(sp.J.w, 0.0);
    ASSERT_LE((sp.recompose() - p).norm(), 1e-14 * std::max(1.0, p.norm()));
  }
}

TEST(QuaternionProperties, SliceIsCommutative) {
  Rng rng(104);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 1000; ++k) {
    const SlicePoint s = slice_decompose(random_quaternion(rng));
    const Quaternion a = on_slice(Complex(nd(rng), nd(rng)), s.J);
    const Quaternion b = on_slice(Complex(nd(rng), nd(rng)), s.J);
    ASSERT_LE((a * b - b * a).norm(), 1e-13 * std::max(1.0, a.norm() * b.norm()));
  }
}

TEST(QuaternionProperties, RealsAreCentral) {
  Rng rng(105);
  for (int k = 0; k < 1000; ++k) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion r(random_quaternion(rng).w);
    ASSERT_LE((p * r - r * p).norm(), 1e-15 * std::max(1.0, p.norm() * r.norm()));
  }
}

TEST(QuaternionFormat, Streams) {
  std::ostringstream os;
  os << Quaternion(1, -2, 3, -4);
  EXPECT_FALSE(os.str().empty());
}
