#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace secanta {

using Rng = std::mt19937_64;

/// Mixes a base seed with stream identifiers so that independent runs
/// (restarts, Terracini trials) draw from unrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Entries with independent standard normal real and imaginary parts.
Eigen::VectorXcd complex_gaussian(int n, Rng& rng);
Eigen::MatrixXcd complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-random unitary (QR of a Gaussian matrix with the R-diagonal phases
/// divided out).
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

}  // namespace secanta
