#pragma once

#include <vector>

#include <Eigen/Dense>

#include "secanta/tensor.hpp"

namespace secanta {

/// Local vectors parametrizing a coherent point: one per factor
/// (distinguishable), a single vector (bosonic), or L vectors (fermionic).
using LocalVectors = std::vector<Eigen::VectorXcd>;

/// Polynomial map from local vectors to the packed entries of the coherent
/// point, with its holomorphic Jacobian. Parameters are the concatenation of
/// the local vectors in block order.
class CoherentModel {
 public:
  explicit CoherentModel(const SystemSpec& spec);

  const SystemSpec& spec() const noexcept { return spec_; }
  int blocks() const noexcept { return static_cast<int>(offsets_.size()); }
  int block_dim(int j) const;
  int block_offset(int j) const { return offsets_[static_cast<std::size_t>(j)]; }
  int num_params() const noexcept { return num_params_; }

  /// Throws DimensionMismatch if the vectors do not fit the spec.
  void check(const LocalVectors& v) const;

  Eigen::VectorXcd point(const LocalVectors& v) const;

  /// N x num_params matrix of derivatives of the packed entries. Column
  /// block_offset(j) + a is the point with the a-th coordinate of block j
  /// differentiated (for bosons this carries the chain-rule factor).
  Eigen::MatrixXcd jacobian(const LocalVectors& v) const;

  /// Both at once; cheaper than two calls.
  void evaluate(const LocalVectors& v, Eigen::VectorXcd& point, Eigen::MatrixXcd& jac) const;

  LocalVectors unpack(const Eigen::VectorXcd& params) const;
  Eigen::VectorXcd pack(const LocalVectors& v) const;

 private:
  SystemSpec spec_;
  std::vector<MultiIndex> indices_;
  std::vector<int> offsets_;
  int num_params_ = 0;
};

}  // namespace secanta
