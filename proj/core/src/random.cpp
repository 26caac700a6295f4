#include "quatkyp/random.hpp"

#include "quatkyp/errors.hpp"

namespace quatkyp {

Quaternion random_quaternion(Rng& rng, double sigma) {
  std::normal_distribution<double> nd(0.0, sigma);
  const double w = nd(rng);
  const double x = nd(rng);
  const double y = nd(rng);
  const double z = nd(rng);
  return {w, x, y, z};
}

QMatrix random_qmatrix(Index rows, Index cols, Rng& rng, double sigma) {
  QMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = random_quaternion(rng, sigma);
  }
  return m;
}

QMatrix random_unitary(Index n, Rng& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    QMatrix u = column_basis(random_qmatrix(n, n, rng));
    if (u.cols() == n) return u;
  }
  throw InternalError("random_unitary: Gaussian draws kept losing rank");
}

QMatrix random_skew_hermitian(Index n, Rng& rng, double sigma) {
  const QMatrix x = random_qmatrix(n, n, rng, sigma);
  return 0.5 * (x - x.adjoint());
}

}  // namespace quatkyp
