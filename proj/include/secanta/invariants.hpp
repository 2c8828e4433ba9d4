#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "secanta/linalg.hpp"
#include "secanta/tensor.hpp"

namespace secanta {

/// One-particle reduced density matrices (trace 1) with their spectra in
/// descending order. Bosonic and fermionic states carry a single matrix.
struct RdmSet {
  SystemSpec spec;
  std::vector<Eigen::MatrixXcd> rho;
  std::vector<Eigen::VectorXd> spectra;
};

RdmSet rdm(const ProjectiveState& state);

/// (1/4) * sum_i tr((rho_i - I/n_i)^2).
double mu_norm_sq(const ProjectiveState& state);

/// Single-mode flattening ranks. Symmetric kinds are expanded first, so all
/// entries coincide.
std::vector<int> mlrank(const Tensor& t, double tol = kRankTolerance);

/// Cayley's hyperdeterminant of the 2x2x2 coefficient array, evaluated on
/// the tensor as given. Throws SpecMismatch for other shapes.
cd hyperdet_222(const Tensor& t);

/// Componentwise comparison of the sorted spectra.
bool spectra_equal(const RdmSet& a, const RdmSet& b, double tol);

/// Local unitaries (U_1, U_2) with (U_1 (x) U_2) a = b, for two-party
/// distinguishable states.
struct LuWitness {
  Eigen::MatrixXcd u1;
  Eigen::MatrixXcd u2;
  double residual = 0.0;
};

/// Builds the witness from singular value decompositions when the spectra
/// agree within tol; returns nothing otherwise. Throws SpecMismatch unless
/// both states live in the same two-party distinguishable space.
std::optional<LuWitness> lu_witness_bipartite(const ProjectiveState& a, const ProjectiveState& b,
                                              double tol = 1e-10);

}  // namespace secanta
