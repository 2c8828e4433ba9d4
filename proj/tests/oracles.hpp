#pragma once
// Brute-force reference computations used to check the library. They work on
// fully expanded arrays built slot by slot through Tensor::at, so they share
// no code with the packed fast paths under test.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "secanta/tensor.hpp"

namespace oracle {

using secanta::cd;
using secanta::MultiIndex;

inline std::vector<MultiIndex> all_indices(const std::vector<int>& dims) {
  std::vector<MultiIndex> out;
  MultiIndex idx(dims.size(), 0);
  while (true) {
    out.push_back(idx);
    int j = static_cast<int>(dims.size()) - 1;
    while (j >= 0 && ++idx[j] == dims[j]) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

inline std::vector<cd> full_values(const secanta::Tensor& t) {
  std::vector<cd> out;
  for (const auto& idx : all_indices(t.spec().full_dims())) out.push_back(t.at(idx));
  return out;
}

inline cd inner(const secanta::Tensor& a, const secanta::Tensor& b) {
  const auto x = full_values(a), y = full_values(b);
  cd s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// Trace-one reduced density matrix of slot k: rho(a, b) = sum psi(.a.) conj(psi(.b.)).
inline Eigen::MatrixXcd partial_trace(const secanta::Tensor& t, int k) {
  const auto dims = t.spec().full_dims();
  const int d = dims[static_cast<std::size_t>(k)];
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& idx : all_indices(dims)) {
    for (int b = 0; b < d; ++b) {
      MultiIndex other = idx;
      other[static_cast<std::size_t>(k)] = b;
      rho(idx[static_cast<std::size_t>(k)], b) += t.at(idx) * std::conj(t.at(other));
    }
  }
  return rho / rho.trace();
}

inline Eigen::VectorXd descending_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().reverse();
}

// Cayley hyperdeterminant as the discriminant of the binary quadratic
// det(A0 + x A1), where A0, A1 are the slices along the first index.
inline cd cayley(const secanta::Tensor& t) {
  auto a = [&](int i, int j, int k) { return t.at({i, j, k}); };
    const cd c0 = a(0, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(0, 1, 0);
  const cd c2 = a(1, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(1, 1, 0);
  const cd c1 = a(0, 0, 0) * a(1, 1, 1) + a(1, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(1, 1, 0) -
                a(1, 0, 1) * a(0, 1, 0);
  return c1 * c1 - 4.0 * c0 * c2;
}

inline Eigen::MatrixXcd random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cd(g(rng), g(rng));
  return m;
}

inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(n, n, rng));
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

inline secanta::Tensor random_state(const secanta::SystemSpec& spec, std::mt19937_64& rng) {
  return secanta::Tensor(spec, random_matrix(static_cast<int>(secanta::packed_indices(spec).size()), 1, rng).col(0));
}

}  // namespace oracle
