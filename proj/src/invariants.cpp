#include "secanta/invariants.hpp"

#include <algorithm>

namespace secanta {

namespace {

Eigen::VectorXd descending_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  return ev;
}

}  // namespace

RdmSet rdm(const ProjectiveState& state) {
  const Tensor full = expand_full(state.rep());
  const SystemSpec& spec = state.spec();
  const int count = spec.symmetric_kind() ? 1 : spec.particles();
  RdmSet out{spec, {}, {}};
  for (int j = 0; j < count; ++j) {
    if (spec.particles() == 1) {
      const Eigen::VectorXcd& v = full.entries();
      out.rho.push_back(v * v.adjoint());
    } else {
      const Eigen::MatrixXcd m = flatten(full, {j});
      out.rho.push_back(m * m.adjoint());
    }
    Eigen::MatrixXcd& rho = out.rho.back();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    out.spectra.push_back(descending_eigenvalues(rho));
  }
  return out;
}

double mu_norm_sq(const ProjectiveState& state) {
  const RdmSet r = rdm(state);
  double total = 0.0;
  for (const auto& rho : r.rho) {
    const auto n = rho.rows();
    const Eigen::MatrixXcd shifted = rho - Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(n);
    total += (shifted * shifted).trace().real();
  }
  return total / 4.0;
}

std::vector<int> mlrank(const Tensor& t, double tol) {
  const Tensor full = expand_full(t);
  const int L = t.spec().particles();
  std::vector<int> out;
  if (L == 1) {
    out.push_back(t.is_zero() ? 0 : 1);
    return out;
  }
  for (int j = 0; j < L; ++j) out.push_back(numerical_rank(flatten(full, {j}), tol));
  return out;
}

cd hyperdet_222(const Tensor& t) {
  if (!(t.spec() == SystemSpec::distinguishable({2, 2, 2})))
    throw Error(ErrorCode::SpecMismatch, "hyperdeterminant needs a 2x2x2 distinguishable tensor, got " +
                                             t.spec().describe());
  auto a = [&](int i, int j, int k) { return t.entries()[4 * i + 2 * j + k]; };
  const cd a000 = a(0, 0, 0), a001 = a(0, 0, 1), a010 = a(0, 1, 0), a011 = a(0, 1, 1);
  const cd a100 = a(1, 0, 0), a101 = a(1, 0, 1), a110 = a(1, 1, 0), a111 = a(1, 1, 1);
  return a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
         a100 * a100 * a011 * a011 - 2.0 * (a000 * a111) * (a011 * a100 + a101 * a010 + a110 * a001) -
         2.0 * (a011 * a100) * (a101 * a010 + a110 * a001) - 2.0 * (a101 * a010) * (a110 * a001) +
         4.0 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111);
}

bool spectra_equal(const RdmSet& a, const RdmSet& b, double tol) {
  if (!(a.spec == b.spec)) throw Error(ErrorCode::SpecMismatch, "spectra of different systems");
  for (std::size_t j = 0; j < a.spectra.size(); ++j)
    if ((a.spectra[j] - b.spectra[j]).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

std::optional<LuWitness> lu_witness_bipartite(const ProjectiveState& a, const ProjectiveState& b, double tol) {
  const SystemSpec& spec = a.spec();
  if (!(spec == b.spec()) || spec.kind() != Kind::Distinguishable || spec.particles() != 2)
    throw Error(ErrorCode::SpecMismatch, "LU witness needs two states of the same two-party distinguishable space");
  const Eigen::MatrixXcd ma = flatten(a.rep(), {0});
  const Eigen::MatrixXcd mb = flatten(b.rep(), {0});
  Eigen::JacobiSVD<Eigen::MatrixXcd> sa(ma, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::JacobiSVD<Eigen::MatrixXcd> sb(mb, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if ((sa.singularValues() - sb.singularValues()).cwiseAbs().maxCoeff() > tol) return std::nullopt;

  // (U1 (x) U2) acts on the coefficient matrix as M -> U1 M U2^T.
  LuWitness w;
  w.u1 = sb.matrixU() * sa.matrixU().adjoint();
  w.u2 = sb.matrixV().conjugate() * sa.matrixV().transpose();
  w.residual = (w.u1 * ma * w.u2.transpose() - mb).norm();
  return w;
}

}  // namespace secanta
