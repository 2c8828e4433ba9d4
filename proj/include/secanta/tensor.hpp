#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "secanta/error.hpp"

namespace secanta {

using cd = std::complex<double>;
using MultiIndex = std::vector<int>;

enum class Kind { Distinguishable, Bosonic, Fermionic };

const char* to_string(Kind kind);
Kind kind_from_string(const std::string& name);

/// A state-space family together with its particle count and local
/// dimensions. Bosonic and fermionic specs carry a single local dimension n.
class SystemSpec {
 public:
  static SystemSpec distinguishable(std::vector<int> dims);
  static SystemSpec bosonic(int n, int particles);
  static SystemSpec fermionic(int n, int particles);
  static SystemSpec make(Kind kind, int particles, std::vector<int> dims);

  Kind kind() const noexcept { return kind_; }
  int particles() const noexcept { return particles_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  bool symmetric_kind() const noexcept { return kind_ != Kind::Distinguishable; }

  /// Local dimension of factor j (the single-particle dimension for
  /// bosons and fermions).
  int local_dim(int j) const { return symmetric_kind() ? dims_[0] : dims_.at(j); }

  /// N: dimension of the state space.
  std::size_t ambient_dim() const;
  /// dim X: dimension of the projective variety of coherent states.
  int coherent_dim() const;

  /// Shape of the fully expanded L-fold array.
  std::vector<int> full_dims() const;
  SystemSpec full_spec() const { return distinguishable(full_dims()); }

  std::string describe() const;

  friend bool operator==(const SystemSpec& a, const SystemSpec& b) {
    return a.kind_ == b.kind_ && a.particles_ == b.particles_ && a.dims_ == b.dims_;
  }

 private:
  SystemSpec(Kind kind, int particles, std::vector<int> dims);

  Kind kind_;
  int particles_;
  std::vector<int> dims_;
};

std::size_t binomial(int n, int k);

/// All canonical multi-indices of the packed storage, in storage order:
/// row-major tuples (distinguishable), weakly increasing tuples (bosonic),
/// strictly increasing tuples (fermionic), each lexicographically sorted.
std::vector<MultiIndex> packed_indices(const SystemSpec& spec);

/// Storage slot of a canonical multi-index.
std::size_t packed_position(const SystemSpec& spec, const MultiIndex& canonical);

/// Number of full-array slots represented by one packed entry; the Hilbert
/// space inner product weights packed entries by it.
Eigen::VectorXd packed_weights(const SystemSpec& spec);

/// Sorts a multi-index into canonical order. Returns the permutation sign,
/// or 0 when a fermionic index repeats.
int canonicalize(const SystemSpec& spec, MultiIndex& index);

/// Dense state tensor in packed canonical storage. Packed symmetric entries
/// carry no multinomial weights: each equals the value of every permuted
/// slot of the full array (up to the permutation sign for fermions).
class Tensor {
 public:
  Tensor(SystemSpec spec, Eigen::VectorXcd entries);
  static Tensor zeros(const SystemSpec& spec);

  const SystemSpec& spec() const noexcept { return spec_; }
  const Eigen::VectorXcd& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.size()); }

  /// Value at an arbitrary (not necessarily canonical) multi-index.
  cd at(const MultiIndex& index) const;

  bool is_zero() const { return entries_.isZero(0.0); }

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(cd scale);

 private:
  SystemSpec spec_;
  Eigen::VectorXcd entries_;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(cd scale, Tensor t);

/// Hilbert-space inner product <a|b> (antilinear in a), computed as the
/// inner product of the fully expanded arrays.
cd inner(const Tensor& a, const Tensor& b);
double norm(const Tensor& t);

using SparseEntries = std::vector<std::pair<MultiIndex, cd>>;

/// Builds a tensor from sparse entries. Bosonic entries accumulate into the
/// canonical slot; fermionic entries accumulate with the permutation sign.
Tensor make_tensor(const SystemSpec& spec, const SparseEntries& entries);

/// Expands a bosonic or fermionic tensor into the full L-fold array.
/// Distinguishable tensors are returned unchanged.
Tensor expand_full(const Tensor& t);

/// Reads the canonical slots of a full array back into packed storage.
Tensor pack_full(const Tensor& full, Kind kind);

/// Matrix with rows indexed by the given modes and columns by the rest, both
/// in lexicographic order of ascending mode. Modes are 0-based.
Eigen::MatrixXcd flatten(const Tensor& t, const std::vector<int>& modes);

/// Applies one linear map per factor (distinguishable) or the same map to
/// every particle (bosonic, fermionic). Maps may be rectangular; the result
/// lives in the correspondingly resized space.
Tensor apply_local(const Tensor& t, const std::vector<Eigen::MatrixXcd>& maps);

/// Pushes t into target_spec through full-column-rank injections.
Tensor embed(const Tensor& t, const SystemSpec& target_spec,
             const std::vector<Eigen::MatrixXcd>& injections);

/// A tensor modulo nonzero scalars: unit norm, first nonzero canonical entry
/// real positive.
class ProjectiveState {
 public:
  explicit ProjectiveState(const Tensor& t);

  const Tensor& rep() const noexcept { return rep_; }
  const SystemSpec& spec() const noexcept { return rep_.spec(); }

 private:
  Tensor rep_;
};

/// sqrt(1 - |<a|b>|^2) for unit representatives.
double proj_distance(const ProjectiveState& a, const ProjectiveState& b);

}  // namespace secanta
