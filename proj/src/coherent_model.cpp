#include "secanta/coherent_model.hpp"

#include <string>

namespace secanta {

namespace {

// Determinant of the k x k matrix with rows `rows` of U restricted to the
// columns in `cols`.
cd sub_det(const Eigen::MatrixXcd& u, const MultiIndex& rows, const std::vector<int>& cols) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  if (k == 0) return 1.0;
  if (k == 1) return u(rows[0], cols[0]);
  if (k == 2) return u(rows[0], cols[0]) * u(rows[1], cols[1]) - u(rows[0], cols[1]) * u(rows[1], cols[0]);
  Eigen::MatrixXcd m(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) m(a, b) = u(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
  return m.partialPivLu().determinant();
}

}  // namespace

CoherentModel::CoherentModel(const SystemSpec& spec) : spec_(spec), indices_(packed_indices(spec)) {
  const int L = spec.particles();
  const int nblocks = spec.kind() == Kind::Bosonic ? 1 : L;
  for (int j = 0; j < nblocks; ++j) {
    offsets_.push_back(num_params_);
    num_params_ += spec.local_dim(j);
  }
}

int CoherentModel::block_dim(int j) const { return spec_.local_dim(j); }

void CoherentModel::check(const LocalVectors& v) const {
  if (static_cast<int>(v.size()) != blocks())
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(blocks()) + " local vectors, got " + std::to_string(v.size()));
  for (int j = 0; j < blocks(); ++j)
    if (v[static_cast<std::size_t>(j)].size() != block_dim(j))
      throw Error(ErrorCode::DimensionMismatch, "local vector " + std::to_string(j) + " has dimension " +
                                                    std::to_string(v[static_cast<std::size_t>(j)].size()) +
                                                    ", expected " + std::to_string(block_dim(j)));
}

Eigen::VectorXcd CoherentModel::point(const LocalVectors& v) const {
  check(v);
  const auto n = static_cast<Eigen::Index>(indices_.size());
  Eigen::VectorXcd out(n);
  const int L = spec_.particles();
  if (spec_.kind() == Kind::Fermionic) {
    Eigen::MatrixXcd u(spec_.local_dim(0), L);
    for (int k = 0; k < L; ++k) u.col(k) = v[static_cast<std::size_t>(k)];
    std::vector<int> cols(static_cast<std::size_t>(L));
    for (int k = 0; k < L; ++k) cols[static_cast<std::size_t>(k)] = k;
    for (Eigen::Index i = 0; i < n; ++i) out[i] = sub_det(u, indices_[static_cast<std::size_t>(i)], cols);
    return out;
  }
  const bool bos = spec_.kind() == Kind::Bosonic;
  for (Eigen::Index i = 0; i < n; ++i) {
    const MultiIndex& idx = indices_[static_cast<std::size_t>(i)];
    cd p = 1.0;
    for (int l = 0; l < L; ++l) p *= v[bos ? 0 : static_cast<std::size_t>(l)][idx[static_cast<std::size_t>(l)]];
    out[i] = p;
  }
  return out;
}

void CoherentModel::evaluate(const LocalVectors& v, Eigen::VectorXcd& pt, Eigen::MatrixXcd& jac) const {
  check(v);
  const auto n = static_cast<Eigen::Index>(indices_.size());
  const int L = spec_.particles();
  pt.resize(n);
  jac.setZero(n, num_params_);

  if (spec_.kind() == Kind::Fermionic) {
    const int dim = spec_.local_dim(0);
    Eigen::MatrixXcd u(dim, L);
    for (int k = 0; k < L; ++k) u.col(k) = v[static_cast<std::size_t>(k)];
    std::vector<int> cols(static_cast<std::size_t>(L));
    for (int k = 0; k < L; ++k) cols[static_cast<std::size_t>(k)] = k;
    MultiIndex rows_minor;
    std::vector<int> cols_minor;
    for (Eigen::Index i = 0; i < n; ++i) {
      const MultiIndex& s = indices_[static_cast<std::size_t>(i)];
      pt[i] = sub_det(u, s, cols);
      // d det / d U(s_p, k) is the (p, k) cofactor.
      for (int p = 0; p < L; ++p) {
        rows_minor.clear();
        for (int q = 0; q < L; ++q)
          if (q != p) rows_minor.push_back(s[static_cast<std::size_t>(q)]);
        for (int k = 0; k < L; ++k) {
          cols_minor.clear();
          for (int q = 0; q < L; ++q)
            if (q != k) cols_minor.push_back(q);
          const cd minor = sub_det(u, rows_minor, cols_minor);
          jac(i, offsets_[static_cast<std::size_t>(k)] + s[static_cast<std::size_t>(p)]) = ((p + k) % 2 == 0) ? minor : -minor;
        }
      }
    }
    return;
  }

  const bool bos = spec_.kind() == Kind::Bosonic;
  std::vector<cd> prefix(static_cast<std::size_t>(L) + 1), suffix(static_cast<std::size_t>(L) + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const MultiIndex& idx = indices_[static_cast<std::size_t>(i)];
    auto factor = [&](int l) { return v[bos ? 0 : static_cast<std::size_t>(l)][idx[static_cast<std::size_t>(l)]]; };
    prefix[0] = 1.0;
    for (int l = 0; l < L; ++l) prefix[static_cast<std::size_t>(l) + 1] = prefix[static_cast<std::size_t>(l)] * factor(l);
    suffix[static_cast<std::size_t>(L)] = 1.0;
    for (int l = L - 1; l >= 0; --l) suffix[static_cast<std::size_t>(l)] = suffix[static_cast<std::size_t>(l) + 1] * factor(l);
    pt[i] = prefix[static_cast<std::size_t>(L)];
    for (int l = 0; l < L; ++l) {
      const int col = offsets_[bos ? 0 : static_cast<std::size_t>(l)] + idx[static_cast<std::size_t>(l)];
      jac(i, col) += prefix[static_cast<std::size_t>(l)] * suffix[static_cast<std::size_t>(l) + 1];
    }
  }
}

Eigen::MatrixXcd CoherentModel::jacobian(const LocalVectors& v) const {
  Eigen::VectorXcd pt;
  Eigen::MatrixXcd jac;
  evaluate(v, pt, jac);
  return jac;
}

LocalVectors CoherentModel::unpack(const Eigen::VectorXcd& params) const {
  LocalVectors out;
  for (int j = 0; j < blocks(); ++j) out.push_back(params.segment(block_offset(j), block_dim(j)));
  return out;
}

Eigen::VectorXcd CoherentModel::pack(const LocalVectors& v) const {
  check(v);
  Eigen::VectorXcd out(num_params_);
  for (int j = 0; j < blocks(); ++j) out.segment(block_offset(j), block_dim(j)) = v[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace secanta
