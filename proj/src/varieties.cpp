#include "secanta/varieties.hpp"

#include <algorithm>
#include <cmath>

#include "secanta/linalg.hpp"

namespace secanta {

namespace {

// The single secant index at which each higher-degree AH exception is defective.
int ah_defective_r(int n, int L) {
  if (n == 3 && L == 4) return 5;
  if (n == 4 && L == 4) return 9;
  if (n == 5 && L == 4) return 14;
  if (n == 5 && L == 3) return 7;
  return 0;
}

bool all_qubits(const SystemSpec& spec) {
  return spec.kind() == Kind::Distinguishable &&
         std::all_of(spec.dims().begin(), spec.dims().end(), [](int d) { return d == 2; });
}

}  // namespace

Tensor coherent_point(const SystemSpec& spec, const LocalVectors& vectors) {
  const CoherentModel model(spec);
  Tensor t(spec, model.point(vectors));
  if (spec.kind() == Kind::Fermionic) {
    double scale = 1.0;
    for (const auto& u : vectors) scale *= u.norm();
    if (!(norm(t) > 1e-13 * scale))
      throw Error(ErrorCode::DependentFermionVectors, "the wedge product of the given vectors vanishes");
  }
  return t;
}

LocalVectors random_local_vectors(const SystemSpec& spec, Rng& rng) {
  const CoherentModel model(spec);
  while (true) {
    LocalVectors v;
    for (int j = 0; j < model.blocks(); ++j) v.push_back(complex_gaussian(model.block_dim(j), rng));
    if (spec.kind() != Kind::Fermionic) return v;
    Eigen::MatrixXcd u(spec.local_dim(0), spec.particles());
    for (int k = 0; k < spec.particles(); ++k) u.col(k) = v[static_cast<std::size_t>(k)];
    const Eigen::VectorXd s = singular_values(u);
    if (s[s.size() - 1] > 0.0 && s[0] / s[s.size() - 1] < 1e6) return v;
  }
}

Tensor random_coherent(const SystemSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return coherent_point(spec, random_local_vectors(spec, rng));
}

std::vector<Tensor> tangent_space(const SystemSpec& spec, const LocalVectors& vectors) {
  const CoherentModel model(spec);
  Eigen::VectorXcd pt;
  Eigen::MatrixXcd jac;
  model.evaluate(vectors, pt, jac);
  if (spec.kind() == Kind::Fermionic) coherent_point(spec, vectors);  // rejects dependent vectors

  std::vector<Tensor> out;
  out.emplace_back(spec, pt);
  // Bosonic derivatives are L * w v^{L-1}; report w v^{L-1} itself.
  const double scale = spec.kind() == Kind::Bosonic ? 1.0 / spec.particles() : 1.0;
  for (int c = 0; c < jac.cols(); ++c) {
    const Eigen::VectorXcd col = scale * jac.col(c);
    if (col.isZero(0.0)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Tensor& t) { return t.entries() == col; });
    if (!dup) out.emplace_back(spec, col);
  }
  return out;
}

SecantProfile expected_secant_dim(const SystemSpec& spec, int r) {
  if (r < 1) throw Error(ErrorCode::BadParams, "secant index r must be at least 1");
  SecantProfile p{spec, r, 0, 0, std::nullopt, std::nullopt};
  const long n_minus_1 = static_cast<long>(spec.ambient_dim()) - 1;
  const long dimx = spec.coherent_dim();
  p.ambient_dim_minus_1 = n_minus_1;
  p.expected_dim = std::min(r * dimx + (r - 1), n_minus_1);

  const int L = spec.particles();
  if (L == 1) {
    p.known_actual_dim = p.expected_dim;
  } else if (all_qubits(spec)) {
    p.known_actual_dim = (r == 3 && L == 4) ? 13 : p.expected_dim;
  } else if (spec.kind() == Kind::Bosonic) {
    const int n = spec.local_dim(0);
    if (L == 2) {
      // Symmetric n x n matrices of rank <= r.
      const long rr = std::min(r, n);
      p.known_actual_dim = std::min(rr * n - rr * (rr - 1) / 2 - 1, n_minus_1);
    } else if (ah_defective_r(n, L) == r) {
      p.defective = true;
    } else {
      p.known_actual_dim = p.expected_dim;
    }
  } else if (spec.kind() == Kind::Fermionic) {
    const int n = spec.local_dim(0);
    if (L >= 3 && L * r <= n) p.known_actual_dim = p.expected_dim;
    if (L == 2 && r > 1 && r < n / 2) p.defective = true;
  }
  if (p.known_actual_dim) p.defective = *p.known_actual_dim < p.expected_dim;
  return p;
}

int expected_generic_rank(const SystemSpec& spec) {
  const auto n = static_cast<long>(spec.ambient_dim());
  const long d = spec.coherent_dim() + 1;
  return static_cast<int>((n + d - 1) / d);
}

bool ah_exceptional(int n, int L) {
  if (n < 2 || L < 2) return false;
  return L == 2 || ah_defective_r(n, L) != 0;
}

bool is_spherical(const SystemSpec& spec) {
  const int L = spec.particles();
  if (L == 1) return true;
  if (spec.kind() == Kind::Fermionic) return std::min(L, spec.local_dim(0) - L) <= 2;
  return L == 2;
}

}  // namespace secanta
