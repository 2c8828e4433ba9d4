#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secanta/coherent_model.hpp"
#include "secanta/random.hpp"
#include "secanta/tensor.hpp"

namespace secanta {

struct SecantProfile {
  SystemSpec spec;
  int r = 1;
  long expected_dim = 0;
  long ambient_dim_minus_1 = 0;
  /// Filled only where a closed-form theorem fixes the dimension.
  std::optional<long> known_actual_dim;
  /// Filled where defectivity is known without measuring.
  std::optional<bool> defective;
};

/// v_1 (x) ... (x) v_L, v^L, or u_1 ^ ... ^ u_L in packed form.
/// Throws DependentFermionVectors when the wedge vanishes.
Tensor coherent_point(const SystemSpec& spec, const LocalVectors& vectors);

/// Standard Gaussian local vectors; fermionic draws are repeated until the
/// vectors have condition number below 1e6.
LocalVectors random_local_vectors(const SystemSpec& spec, Rng& rng);
Tensor random_coherent(const SystemSpec& spec, std::uint64_t seed);

/// Spanning set of the affine tangent space at the coherent point: the point
/// followed by every slot replacement with a basis vector, with zero and
/// duplicate members dropped.
std::vector<Tensor> tangent_space(const SystemSpec& spec, const LocalVectors& vectors);

SecantProfile expected_secant_dim(const SystemSpec& spec, int r);

/// ceil(N / (dim X + 1)).
int expected_generic_rank(const SystemSpec& spec);

/// The Alexander-Hirschowitz exception list for degree-L forms in n
/// variables: (3,4), (4,4), (5,4), (5,3) and every (n,2).
bool ah_exceptional(int n, int L);

/// True iff the family has no exceptional states: L <= 2 for distinguishable
/// and bosonic systems, min(L, n-L) <= 2 for fermions.
bool is_spherical(const SystemSpec& spec);

}  // namespace secanta
