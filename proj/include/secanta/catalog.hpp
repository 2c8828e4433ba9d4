#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secanta/tensor.hpp"
#include "secanta/tensor_io.hpp"

namespace secanta {

struct CatalogEntry {
  std::string id;
  /// Filter key: "2x2xN", "2x3xN", "4qubit", "bosonic" or "fermionic".
  std::string family;
  SystemSpec spec;
  std::string ket;
  int rank;
  int border_rank;
  /// Smallest third local dimension where the state appears (three-party
  /// distinguishable entries only).
  std::optional<int> min_N;
  std::string citation;

  Tensor tensor() const;
};

/// Exceptional states with known rank and border rank. The bosonic entry is
/// v_1 v_n^{L-1}, built for the requested (n, L) or (2, 3) by default.
/// family "" or "all" returns everything. Throws BadParams for unknown
/// families or invalid bosonic parameters.
std::vector<CatalogEntry> exceptional_catalog(const std::string& family = "all", int n = 0, int L = 0);

Json catalog_entry_to_json(const CatalogEntry& e);

/// Three-qubit SLOCC classes, BISEP_k meaning factor k splits off.
enum class QubitOrbit { SEP, BISEP_1, BISEP_2, BISEP_3, GHZ, W, C223_GENERIC, C223_DEGENERATE, C224 };
const char* to_string(QubitOrbit o);

struct OrbitLabel {
  QubitOrbit label;
  std::vector<int> mlrank;
  /// |Det| of the unit-norm (trimmed) 2x2x2 representative when defined.
  double abs_hyperdet = 0.0;
  /// Set for W labels whose |Det| is nonzero but under the threshold.
  bool near_boundary = false;
};

inline constexpr double kHyperdetThreshold = 1e-10;

/// mlrank decides SEP and the bi-separable classes; |Det| of the unit-norm
/// representative separates GHZ (> 1e-10) from W. Throws SpecMismatch unless
/// the tensor is 2x2x2 distinguishable.
OrbitLabel classify_three_qubit(const Tensor& t);

/// The nine orbits of P(C^2 (x) C^2 (x) C^N): the third factor is trimmed to
/// the span of the slices, a trimmed 2x2x2 core goes to the three-qubit
/// classifier, a 2x2x3 core is split by the rank of the 2x2 matrix
/// annihilating its slices. Throws SpecMismatch unless dims are (2, 2, N).
OrbitLabel classify_22N(const Tensor& t);

}  // namespace secanta
