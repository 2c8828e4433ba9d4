#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "secanta/coherent_model.hpp"
#include "secanta/linalg.hpp"
#include "secanta/tensor.hpp"
#include "secanta/tensor_io.hpp"

namespace secanta {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct FitOptions {
  int restarts = 32;
  int max_iters = 500;
  std::uint64_t seed = 0;
  /// Bound on the norm of every summand, relative to the unit-norm state.
  double coeff_bound = 10.0;
  /// Return as soon as one restart reaches this residual within the bound.
  double accept_residual = 0.0;
};

/// coefficient * (unit-norm coherent point of factors). Factors are unit
/// vectors (orthonormal for fermions), so |coefficient| is the summand norm.
struct Summand {
  LocalVectors factors;
  cd coefficient;
};

/// Decomposition of the unit-norm state into coherent summands.
struct Decomposition {
  std::vector<Summand> summands;
  double residual = 0.0;
  double max_norm = 0.0;
};

Tensor summand_tensor(const SystemSpec& spec, const Summand& s);
Tensor decomposition_sum(const SystemSpec& spec, const Decomposition& d);

/// Least-squares fit of the normalized state by r coherent points: block ALS
/// sweeps (distinguishable, fermionic) followed by Levenberg-Marquardt, with
/// summand norms held to coeff_bound by a hinge penalty and a final
/// projection. Best over restarts: lowest residual, then lowest max norm.
Decomposition best_rank_r(const Tensor& state, int r, const FitOptions& opts = {});

/// Continues a fit from an existing decomposition under a new bound.
Decomposition refine(const Tensor& state, const Decomposition& start, double coeff_bound, int max_iters);

struct RankOptions {
  FitOptions fit;
  /// Largest r tried for the upper bound; 0 means the ambient dimension.
  int max_rank = 0;
  double rank_tol = kRankTolerance;
  double upper_residual = 1e-8;
  double upper_bound_norm = 10.0;
  double border_residual = 1e-6;
  double divergence_norm = 1e2;
  /// Loosened bounds for the border search; rungs past the last entry are
  /// added by factors of 10 up to max_ladder_bound while the residual falls.
  std::vector<double> ladder = {10.0, 1e2, 1e3, 1e4};
  double max_ladder_bound = 1e6;
  /// Ladder runs started from the best bounded fits.
  int ladder_starts = 4;
};

struct BorderWitness {
  int r = 0;
  std::vector<double> bounds;
  std::vector<double> residuals;
  std::vector<double> max_norms;
  bool monotone = false;
  Decomposition decomposition;
};

struct RankReport {
  int lower_bound = 1;
  std::string lower_certificate = "flattening";
  int upper_bound = 0;
  bool upper_certified = false;
  Decomposition upper_witness;
  int border_estimate = 0;
  bool border_certified = false;
  BorderWitness border_witness;
  bool exceptional = false;
};

RankReport estimate_rank(const Tensor& state, const RankOptions& opts = {});

/// Exact ranks for L = 2 from the representing matrix (halved for fermions);
/// rank and border rank coincide. Throws SpecMismatch for L != 2.
RankReport matrix_rank_exact(const Tensor& state, double tol = kRankTolerance);

/// Largest flattening rank over single-mode flattenings and, for L <= 6,
/// every bipartition up to balanced size. Fermionic flattenings of k modes
/// are divided by C(L, k), the flattening rank of one decomposable wedge.
int flattening_lower_bound(const Tensor& state, double tol = kRankTolerance);

struct SecantMeasurement {
  long measured = 0;
  long expected = 0;
  long defect = 0;
  std::vector<long> per_seed;
};

/// Terracini: rank of the stacked tangent spaces at r random coherent
/// points, minus one; maximum over `trials` seeds derived from seed.
SecantMeasurement secant_dim(const SystemSpec& spec, int r, std::uint64_t seed, int trials = 3,
                             double tol = kRankTolerance);

Json decomposition_to_json(const SystemSpec& spec, const Decomposition& d);
Json rank_report_to_json(const SystemSpec& spec, const RankReport& report);

}  // namespace secanta
