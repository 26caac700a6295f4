#include "quatkyp/quaternion.hpp"

#include <limits>
#include <ostream>

#include "quatkyp/errors.hpp"

namespace quatkyp {

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

Quaternion quat_inverse(const Quaternion& p) {
  const double n2 = p.norm_squared();
  if (!(p.norm() >= std::numeric_limits<double>::min())) {
    throw ZeroDivision("quat_inverse: quaternion is zero");
  }
  return p.conj() / n2;
}

SlicePoint slice_decompose(const Quaternion& p) {
  const double y = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
  if (y == 0.0) {
    return {p.w, 0.0, Quaternion::i()};
  }
  return {p.w, y, Quaternion(0.0, p.x / y, p.y / y, p.z / y)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << " + " << q.x << "i + " << q.y << "j + " << q.z << "k)";
}

}  // namespace quatkyp
