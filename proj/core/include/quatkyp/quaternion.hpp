#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace quatkyp {

using Complex = std::complex<double>;

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Builds z1 + z2 j from the two complex halves (z1 = w + x i, z2 = y + z i).
  static constexpr Quaternion from_complex(Complex z1, Complex z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  Complex first() const { return {w, x}; }
  Complex second() const { return {y, z}; }

  double real() const { return w; }
  Quaternion vector_part() const { return {0.0, x, y, z}; }
  double norm_squared() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_squared()); }
  bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
  return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product; ij = k, ji = -k.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.norm(); }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);

/// Multiplicative inverse conj(p)/|p|^2; throws ZeroDivision for |p| below the
/// smallest normal double.
Quaternion quat_inverse(const Quaternion& p);

/// p = x + J y with y >= 0 and J a unit imaginary quaternion.
struct SlicePoint {
  double x = 0.0;
  double y = 0.0;
  Quaternion J = Quaternion::i();

  Quaternion recompose() const { return Quaternion(x) + J * y; }
};

/// Real inputs get the canonical unit J = i.
SlicePoint slice_decompose(const Quaternion& p);

/// Image of the complex number a + b i under the embedding C -> C_J.
inline Quaternion on_slice(Complex c, const Quaternion& J) { return Quaternion(c.real()) + J * c.imag(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatkyp
