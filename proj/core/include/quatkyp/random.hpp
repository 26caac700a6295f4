#pragma once

#include <random>

#include "quatkyp/qmatrix.hpp"
#include "quatkyp/quaternion.hpp"

namespace quatkyp {

using Rng = std::mt19937_64;

/// Four independent N(0, sigma^2) components.
Quaternion random_quaternion(Rng& rng, double sigma = 1.0);
QMatrix random_qmatrix(Index rows, Index cols, Rng& rng, double sigma = 1.0);
/// Quaternionic unitary (U* U = I) from the orthonormalized columns of a Gaussian draw.
QMatrix random_unitary(Index n, Rng& rng);
/// (X - X*) / 2 for a Gaussian X.
QMatrix random_skew_hermitian(Index n, Rng& rng, double sigma = 1.0);

}  // namespace quatkyp
