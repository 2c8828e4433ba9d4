#include "secanta/degenerations.hpp"

#include <cmath>

#include "secanta/ket.hpp"

namespace secanta {

namespace {

Tensor wedge(const SystemSpec& spec, const MultiIndex& idx) { return make_tensor(spec, {{idx, cd(1.0)}}); }

// Scales packed entries by prod_l d[i_l]; the action of a diagonal matrix.
Tensor apply_diagonal(const Tensor& t, const Eigen::VectorXcd& d) {
  const auto indices = packed_indices(t.spec());
  Eigen::VectorXcd e = t.entries();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    cd f = 1.0;
    for (int k : indices[i]) f *= d[k];
    e[static_cast<Eigen::Index>(i)] *= f;
  }
  return Tensor(t.spec(), e);
}

std::vector<Eigen::MatrixXcd> local_maps(const CurveSpec& c, const Eigen::MatrixXcd& m) {
  if (c.spec.kind() == Kind::Distinguishable) return std::vector<Eigen::MatrixXcd>(3, m);
  return {m};
}

Eigen::VectorXcd a1_diagonal(const CurveSpec& c, cd a) {
  const int dim = static_cast<int>(c.g0.rows());
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(dim);
  switch (c.family) {
    case CurveFamily::Qubit3:
      d << a, 1.0 / a;
      break;
    case CurveFamily::Boson:
      d[0] = a;
      d[dim - 1] = 1.0 / a;
      break;
    case CurveFamily::Fermion36:
      // Inverse of the displayed torus: the displayed A1(a) sends the start
      // state to the coherent point e345 as a -> 0.
      for (int i = 0; i < 3; ++i) {
        d[i] = 1.0 / a;
        d[i + 3] = a;
      }
      break;
  }
  return d;
}

}  // namespace

const char* to_string(CurveFamily f) {
  switch (f) {
    case CurveFamily::Qubit3:
      return "qubit3";
    case CurveFamily::Boson:
      return "boson";
    case CurveFamily::Fermion36:
      return "fermion36";
  }
  return "?";
}

CurveFamily curve_family_from_string(const std::string& name) {
  if (name == "qubit3") return CurveFamily::Qubit3;
  if (name == "boson") return CurveFamily::Boson;
  if (name == "fermion36") return CurveFamily::Fermion36;
  throw Error(ErrorCode::BadParams, "unknown curve family '" + name + "' (expected qubit3, boson or fermion36)");
}

Eigen::MatrixXcd CurveSpec::a1(cd a) const { return a1_diagonal(*this, a).asDiagonal(); }

Eigen::MatrixXcd CurveSpec::matrix(cd a) const { return g0 * a1(a) * g0.adjoint(); }

Eigen::MatrixXcd CurveSpec::printed_matrix(cd a) const {
  const int dim = static_cast<int>(g0.rows());
  const cd p = a + 1.0 / a;
  const cd m = a - 1.0 / a;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
  switch (family) {
    case CurveFamily::Qubit3:
      out << p, m, m, p;
      return 0.5 * out;
    case CurveFamily::Boson:
      out(0, 0) = out(dim - 1, dim - 1) = 0.5 * p;
      out(0, dim - 1) = out(dim - 1, 0) = 0.5 * m;
      return out;
    case CurveFamily::Fermion36:
      out.setZero();
      for (int i = 0; i < 6; ++i) {
        out(i, i) = p;
        out(i, 5 - i) = m;
      }
      return out / 8.0;
  }
  return out;
}

CurveSpec make_curve(CurveFamily family, int n, int L) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (family) {
    case CurveFamily::Qubit3: {
      const SystemSpec spec = SystemSpec::distinguishable({2, 2, 2});
      Eigen::MatrixXcd g0(2, 2);
      g0 << h, -h, h, h;
      const Tensor w = parse_ket("|011>+|101>+|110>", spec);
      CurveSpec c{family, 2, 3, spec, ProjectiveState(parse_ket("|000>+|111>", spec)), ProjectiveState(w),
                  {parse_ket("|000>", spec), parse_ket("|111>", spec)}, g0};
      c.target = ProjectiveState(apply_local(w, local_maps(c, g0)));
      return c;
    }
    case CurveFamily::Boson: {
      if (n < 2 || L < 3) throw Error(ErrorCode::BadParams, "boson curve needs n >= 2 and L >= 3");
      const SystemSpec spec = SystemSpec::bosonic(n, L);
      Eigen::MatrixXcd g0 = Eigen::MatrixXcd::Identity(n, n);
      g0(0, 0) = h;
      g0(0, n - 1) = -h;
      g0(n - 1, 0) = h;
      g0(n - 1, n - 1) = h;
      const Tensor first = make_tensor(spec, {{MultiIndex(static_cast<std::size_t>(L), 0), cd(1.0)}});
      const Tensor last = make_tensor(spec, {{MultiIndex(static_cast<std::size_t>(L), n - 1), cd(L % 2 == 1 ? 1.0 : -1.0)}});
      MultiIndex w(static_cast<std::size_t>(L), n - 1);
      w[0] = 0;
      const Tensor phi = make_tensor(spec, {{w, cd(1.0)}});
      CurveSpec c{family, n, L, spec, ProjectiveState(first + last), ProjectiveState(phi), {first, last}, g0};
      c.target = ProjectiveState(apply_local(phi, {g0}));
      return c;
    }
    case CurveFamily::Fermion36: {
      const SystemSpec spec = SystemSpec::fermionic(6, 3);
      Eigen::MatrixXcd g0 = Eigen::MatrixXcd::Zero(6, 6);
      for (int i = 0; i < 3; ++i) {
        g0(i, i) = h;
        g0(i, 5 - i) = -h;
        g0(5 - i, i) = h;
        g0(5 - i, 5 - i) = h;
      }
      const Tensor phi = parse_ket("|013>-|024>+|125>", spec);
      CurveSpec c{family, 6, 3, spec, ProjectiveState(wedge(spec, {0, 1, 2}) + wedge(spec, {3, 4, 5})),
                  ProjectiveState(phi), {wedge(spec, {0, 1, 2}), wedge(spec, {3, 4, 5})}, g0};
      c.target = ProjectiveState(apply_local(phi, {g0}));
      return c;
    }
  }
  throw Error(ErrorCode::BadParams, "unknown curve family");
}

ProjectiveState evaluate(const CurveSpec& curve, cd a) {
  if (a == cd(0.0)) throw Error(ErrorCode::ZeroParameter, "curve parameter must be nonzero");
  // g0 (A1(a) (g0^{-1} psi)); the diagonal acts on packed entries directly so
  // that tiny and huge factors never meet in one matrix product.
  const Tensor core = apply_local(curve.start.rep(), local_maps(curve, curve.g0.adjoint()));
  const Tensor moved = apply_diagonal(core, a1_diagonal(curve, a));
  return ProjectiveState(apply_local(moved, local_maps(curve, curve.g0)));
}

std::vector<Tensor> evaluate_summands(const CurveSpec& curve, cd a) {
  if (a == cd(0.0)) throw Error(ErrorCode::ZeroParameter, "curve parameter must be nonzero");
  std::vector<Tensor> out;
  for (const auto& s : curve.start_summands) out.push_back(apply_local(s, local_maps(curve, curve.matrix(a))));
  return out;
}

std::vector<double> default_ladder() {
  std::vector<double> out;
  for (int k = 2; k <= 8; ++k) out.push_back(std::pow(10.0, -0.5 * k));
  return out;
}

LimitCheck verify_limit(const CurveSpec& curve, const std::vector<double>& ladder) {
  if (ladder.empty()) throw Error(ErrorCode::BadParams, "empty ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0)) throw Error(ErrorCode::BadParams, "ladder values must be positive");
    if (i > 0 && !(ladder[i] < ladder[i - 1])) throw Error(ErrorCode::BadParams, "ladder must be decreasing");
  }
  LimitCheck out;
  out.ladder = ladder;
  for (double a : ladder) out.distances.push_back(proj_distance(evaluate(curve, a), curve.target));
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.distances.size(); ++i)
    if (!(out.distances[i] < out.distances[i - 1])) out.strictly_decreasing = false;

  if (ladder.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      if (!(out.distances[i] > 0.0)) continue;
      const double x = std::log(ladder[i]);
      const double y = std::log(out.distances[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++m;
    }
    const double den = m * sxx - sx * sx;
    if (m >= 2 && den != 0.0) out.fitted_order = (m * sxy - sx * sy) / den;
  }
  return out;
}

}  // namespace secanta
