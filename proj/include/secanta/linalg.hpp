#pragma once

#include <Eigen/Dense>

namespace secanta {

/// Default relative tolerance for numerical rank: sigma_k / sigma_1 > tol.
inline constexpr double kRankTolerance = 1e-8;

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

/// Number of singular values above tol * sigma_max (0 for the zero matrix).
int numerical_rank(const Eigen::MatrixXcd& m, double tol = kRankTolerance);

/// Orthonormal basis of the column space, numerically truncated.
Eigen::MatrixXcd column_basis(const Eigen::MatrixXcd& m, double tol = kRankTolerance);

/// Orthonormal basis of the right null space {x : m x = 0}.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double tol = kRankTolerance);

}  // namespace secanta
