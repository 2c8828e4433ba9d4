#include "secanta/rank_engine.hpp"

#include <algorithm>
#include <cmath>

#include "secanta/random.hpp"
#include "secanta/varieties.hpp"

namespace secanta {

namespace {

constexpr double kPenaltyWeight = 1e3;  // sqrt of the hinge penalty weight
// Stop when the objective falls by less than this fraction over 10 iterations.
constexpr double kStallRelative = 1e-6;

using Params = std::vector<Eigen::VectorXcd>;

struct Problem {
  SystemSpec spec;
  CoherentModel model;
  Eigen::VectorXcd psi;
  Eigen::VectorXd w;
  Eigen::VectorXd s;

  explicit Problem(const Tensor& state)
      : spec(state.spec()),
        model(state.spec()),
        psi(ProjectiveState(state).rep().entries()),
        w(packed_weights(state.spec())),
        s(w.cwiseSqrt()) {}

  double wnorm(const Eigen::VectorXcd& x) const { return std::sqrt((w.array() * x.array().abs2()).sum()); }
};

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Moves scale between blocks without changing the coherent point.
void balance(const Problem& pb, Eigen::VectorXcd& p) {
  const CoherentModel& m = pb.model;
  const int L = pb.spec.particles();
  if (pb.spec.kind() == Kind::Distinguishable) {
    double logsum = 0.0;
    for (int j = 0; j < m.blocks(); ++j) {
      const double nj = p.segment(m.block_offset(j), m.block_dim(j)).norm();
      if (nj == 0.0) return;
      logsum += std::log(nj);
    }
    const double g = std::exp(logsum / m.blocks());
    for (int j = 0; j < m.blocks(); ++j) {
      auto seg = p.segment(m.block_offset(j), m.block_dim(j));
      seg *= g / seg.norm();
    }
  } else if (pb.spec.kind() == Kind::Fermionic) {
    const int n = pb.spec.local_dim(0);
    Eigen::MatrixXcd u(n, L);
    for (int k = 0; k < L; ++k) u.col(k) = p.segment(m.block_offset(k), n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(u);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, L);
    cd d = 1.0;
    for (int k = 0; k < L; ++k) d *= qr.matrixQR()(k, k);
    const double mag = std::abs(d);
    if (!(mag > 0.0) || !std::isfinite(mag)) return;
    const double g = std::pow(mag, 1.0 / L);
    for (int k = 0; k < L; ++k) p.segment(m.block_offset(k), n) = g * q.col(k);
    p.segment(m.block_offset(0), n) *= d / mag;
  }
}

// Multiplies the coherent point by t > 0.
void scale_point(const Problem& pb, Eigen::VectorXcd& p, double t) {
  const CoherentModel& m = pb.model;
  if (pb.spec.kind() == Kind::Bosonic)
    p *= std::pow(t, 1.0 / pb.spec.particles());
  else
    p.segment(m.block_offset(0), m.block_dim(0)) *= t;
  balance(pb, p);
}

void project(const Problem& pb, Params& p, double bound) {
  if (!std::isfinite(bound)) return;
  for (auto& pk : p) {
    const double nk = pb.wnorm(pb.model.point(pb.model.unpack(pk)));
    if (nk > bound) scale_point(pb, pk, bound / nk);
  }
}

// Stacked real residual [Re e; Im e; hinge rows] for e = s * (psi - sum x_k)
// and, optionally, its Jacobian with respect to (Re p_k, Im p_k) blocks.
double assemble(const Problem& pb, const Params& p, double bound, bool with_jac, Eigen::VectorXd& res,
                Eigen::MatrixXd& jac) {
  const auto N = pb.psi.size();
  const int P = pb.model.num_params();
  const int r = static_cast<int>(p.size());
  const Eigen::Index D = 2 * static_cast<Eigen::Index>(r) * P;

  std::vector<Eigen::VectorXcd> xs(static_cast<std::size_t>(r));
  std::vector<Eigen::MatrixXcd> js(static_cast<std::size_t>(r));
  Eigen::VectorXcd e = pb.psi;
  for (int k = 0; k < r; ++k) {
    const LocalVectors v = pb.model.unpack(p[static_cast<std::size_t>(k)]);
    if (with_jac)
      pb.model.evaluate(v, xs[static_cast<std::size_t>(k)], js[static_cast<std::size_t>(k)]);
    else
      xs[static_cast<std::size_t>(k)] = pb.model.point(v);
    e -= xs[static_cast<std::size_t>(k)];
  }
  e = (pb.s.array() * e.array()).matrix();

  // One hinge row per summand (zero while inside the bound) so that the
  // residual dimension stays fixed.
  const bool bounded = std::isfinite(bound);
  const Eigen::Index rows = 2 * N + (bounded ? r : 0);
  res.resize(rows);
  res.head(N) = e.real();
  res.segment(N, N) = e.imag();
  std::vector<double> norms(static_cast<std::size_t>(r), 0.0);
  if (bounded)
    for (int k = 0; k < r; ++k) {
      norms[static_cast<std::size_t>(k)] = pb.wnorm(xs[static_cast<std::size_t>(k)]);
      res[2 * N + k] = kPenaltyWeight * std::max(0.0, norms[static_cast<std::size_t>(k)] - bound);
    }

  if (with_jac) {
    jac.setZero(rows, D);
    for (int k = 0; k < r; ++k) {
      const Eigen::MatrixXcd sj = pb.s.asDiagonal() * js[static_cast<std::size_t>(k)];
      const Eigen::Index c0 = 2 * static_cast<Eigen::Index>(k) * P;
      jac.block(0, c0, N, P) = -sj.real();
      jac.block(N, c0, N, P) = -sj.imag();
      jac.block(0, c0 + P, N, P) = sj.imag();
      jac.block(N, c0 + P, N, P) = -sj.real();
      const double nk = norms[static_cast<std::size_t>(k)];
      if (bounded && nk > bound) {
        const Eigen::VectorXcd q = (pb.w.array() * xs[static_cast<std::size_t>(k)].array()).matrix() / nk;
        const Eigen::RowVectorXcd h = q.adjoint() * js[static_cast<std::size_t>(k)];
        jac.block(2 * N + k, c0, 1, P) = kPenaltyWeight * h.real();
        jac.block(2 * N + k, c0 + P, 1, P) = -kPenaltyWeight * h.imag();
      }
    }
  }
  return 0.5 * res.squaredNorm();
}

// One block of every summand is a linear function of that block, so each
// ALS step is a regularized linear least-squares solve.
void als_sweeps(const Problem& pb, Params& p, int sweeps) {
  const CoherentModel& m = pb.model;
  const int r = static_cast<int>(p.size());
  const Eigen::VectorXcd rhs = (pb.s.array() * pb.psi.array()).matrix();
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int j = 0; j < m.blocks(); ++j) {
      const int dj = m.block_dim(j);
      Eigen::MatrixXcd b(pb.psi.size(), static_cast<Eigen::Index>(r) * dj);
      for (int k = 0; k < r; ++k) {
        const Eigen::MatrixXcd jk = m.jacobian(m.unpack(p[static_cast<std::size_t>(k)]));
        b.middleCols(static_cast<Eigen::Index>(k) * dj, dj) = pb.s.asDiagonal() * jk.middleCols(m.block_offset(j), dj);
      }
      Eigen::MatrixXcd g = b.adjoint() * b;
      const double mu = 1e-10 * std::max(1e-300, g.diagonal().real().maxCoeff());
      g.diagonal().array() += mu;
      const Eigen::VectorXcd z = g.ldlt().solve(b.adjoint() * rhs);
      if (!z.allFinite()) return;
      for (int k = 0; k < r; ++k)
        p[static_cast<std::size_t>(k)].segment(m.block_offset(j), dj) = z.segment(static_cast<Eigen::Index>(k) * dj, dj);
    }
    for (auto& pk : p) balance(pb, pk);
  }
}

Params step(const Params& p, const Eigen::VectorXd& delta, int P) {
  Params out = p;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Eigen::Index c0 = 2 * static_cast<Eigen::Index>(k) * P;
    for (int i = 0; i < P; ++i) out[k][i] += cd(delta[c0 + i], delta[c0 + P + i]);
  }
  return out;
}

// Levenberg-Marquardt with geodesic acceleration: the second directional
// derivative of the residual along the first-order step bends the step
// along curved valleys, which is where border-rank fits spend their time.
// Steps come from an SVD of the Jacobian rather than the normal equations;
// near a border point the Jacobian condition number grows with the summand
// norms and squaring it would exhaust double precision around norm 1e4.
void levenberg_marquardt(const Problem& pb, Params& p, double bound, int max_iters, double stop_residual) {
  const int P = pb.model.num_params();
  constexpr double kProbe = 0.1;
  constexpr double kMaxAccelRatio = 0.75;

  Eigen::VectorXd res, res_probe, res_new;
  Eigen::MatrixXd jac, unused;
  double cost = 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd;
  auto linearize = [&]() {
    cost = assemble(pb, p, bound, true, res, jac);
    svd.compute(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
  };
  // argmin |J d + b|^2 + lambda |d|^2
  auto damped_solve = [&](const Eigen::VectorXd& b, double lambda) -> Eigen::VectorXd {
    const Eigen::VectorXd& sv = svd.singularValues();
    const Eigen::VectorXd f = (sv.array() / (sv.array().square() + lambda)).matrix();
    return -(svd.matrixV() * (f.asDiagonal() * (svd.matrixU().transpose() * b)));
  };
  linearize();
  const double smax = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  double lambda = 1e-6 * std::max(1e-12, smax * smax);
  double nu = 2.0;
  std::vector<double> history{std::sqrt(2.0 * cost)};

  for (int it = 0; it < max_iters; ++it) {
    if (std::sqrt(2.0 * cost) < stop_residual) break;
    const Eigen::VectorXd g = jac.transpose() * res;
    const Eigen::VectorXd d1 = damped_solve(res, lambda);

    bool accepted = false;
    if (d1.allFinite()) {
      assemble(pb, step(p, kProbe * d1, P), bound, false, res_probe, unused);
      const Eigen::VectorXd rvv = (2.0 / kProbe) * ((res_probe - res) / kProbe - jac * d1);
      const Eigen::VectorXd d2 = 0.5 * damped_solve(rvv, lambda);
      Eigen::VectorXd delta = d1;
      if (d2.allFinite() && 2.0 * d2.norm() <= kMaxAccelRatio * d1.norm()) delta += d2;

      Params trial = step(p, delta, P);
      const double cost_new = assemble(pb, trial, bound, false, res_new, unused);
      const double predicted = 0.5 * d1.dot(lambda * d1 - g);
      const double gain = predicted > 0.0 ? (cost - cost_new) / predicted : -1.0;
      if (gain > 0.0 && cost_new < cost) {
        p = std::move(trial);
        for (auto& pk : p) balance(pb, pk);
        linearize();
        lambda *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * std::min(gain, 1.0) - 1.0, 3));
        nu = 2.0;
        accepted = true;
      }
    }
    if (!accepted) {
      lambda *= nu;
      nu *= 2.0;
    }
    history.push_back(std::sqrt(2.0 * cost));
    const std::size_t n = history.size();
    if (n > 20 && history[n - 11] - history[n - 1] < kStallRelative * history[n - 1] + 1e-15) break;
    if (lambda > 1e20) break;
  }
}

Summand summand_from_params(const Problem& pb, const Eigen::VectorXcd& pk) {
  const CoherentModel& m = pb.model;
  const int L = pb.spec.particles();
  LocalVectors v = m.unpack(pk);
  Summand s;
  if (pb.spec.kind() == Kind::Fermionic) {
    const int n = pb.spec.local_dim(0);
    Eigen::MatrixXcd u(n, L);
    for (int k = 0; k < L; ++k) u.col(k) = v[static_cast<std::size_t>(k)];
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(u);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, L);
    cd d = 1.0;
    for (int k = 0; k < L; ++k) d *= qr.matrixQR()(k, k);
    for (int k = 0; k < L; ++k) s.factors.push_back(q.col(k));
    s.coefficient = d * std::sqrt(factorial(L));
    return s;
  }
  double c = 1.0;
  for (auto& f : v) {
    const double nf = f.norm();
    c *= pb.spec.kind() == Kind::Bosonic ? std::pow(nf, L) : nf;
    if (nf > 0.0)
      f /= nf;
    else
      f = Eigen::VectorXcd::Unit(f.size(), 0);
  }
  s.factors = std::move(v);
  s.coefficient = c;
  return s;
}

Eigen::VectorXcd params_from_summand(const Problem& pb, const Summand& s) {
  const CoherentModel& m = pb.model;
  Eigen::VectorXcd p = m.pack(s.factors);
  const int L = pb.spec.particles();
  if (pb.spec.kind() == Kind::Bosonic) {
    p *= std::pow(s.coefficient, 1.0 / L);
  } else {
    const double unit = pb.spec.kind() == Kind::Fermionic ? std::sqrt(factorial(L)) : 1.0;
    p.segment(m.block_offset(0), m.block_dim(0)) *= s.coefficient / unit;
  }
  balance(pb, p);
  return p;
}

Decomposition finish(const Problem& pb, Params p, double bound) {
  project(pb, p, bound);
  Decomposition d;
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(pb.psi.size());
  for (const auto& pk : p) {
    d.summands.push_back(summand_from_params(pb, pk));
    d.max_norm = std::max(d.max_norm, std::abs(d.summands.back().coefficient));
    sum += pb.model.point(pb.model.unpack(pk));
  }
  d.residual = pb.wnorm(pb.psi - sum);
  return d;
}

Params params_from(const Problem& pb, const Decomposition& d) {
  Params p;
  for (const auto& s : d.summands) p.push_back(params_from_summand(pb, s));
  return p;
}

bool better(const Decomposition& a, const Decomposition& b) {
  if (std::abs(a.residual - b.residual) > 1e-12) return a.residual < b.residual;
  return a.max_norm < b.max_norm;
}

Params random_params(const Problem& pb, int r, Rng& rng) {
  Params p;
  for (int k = 0; k < r; ++k) {
    Eigen::VectorXcd pk = complex_gaussian(pb.model.num_params(), rng);
    balance(pb, pk);
    const double nk = pb.wnorm(pb.model.point(pb.model.unpack(pk)));
    if (nk > 0.0) scale_point(pb, pk, 1.0 / (nk * std::sqrt(static_cast<double>(r))));
    p.push_back(std::move(pk));
  }
  return p;
}

Decomposition fit_once(const Problem& pb, int r, const FitOptions& opts, std::uint64_t restart) {
  Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r), restart));
  Params p = random_params(pb, r, rng);
  int budget = opts.max_iters;
  if (pb.spec.kind() != Kind::Bosonic && pb.spec.particles() > 1) {
    const int sweeps = std::min(25, opts.max_iters / 4);
    als_sweeps(pb, p, sweeps);
    project(pb, p, opts.coeff_bound);
    budget -= sweeps;
  }
  levenberg_marquardt(pb, p, opts.coeff_bound, budget, 1e-14);
  return finish(pb, std::move(p), opts.coeff_bound);
}

// Every restart's result, best first; stops early once accept_residual is met.
std::vector<Decomposition> fit_all(const Problem& pb, int r, const FitOptions& opts) {
  std::vector<Decomposition> out;
  for (int i = 0; i < std::max(1, opts.restarts); ++i) {
    out.push_back(fit_once(pb, r, opts, static_cast<std::uint64_t>(i)));
    const Decomposition& d = out.back();
    if (d.residual < opts.accept_residual && d.max_norm <= opts.coeff_bound * (1.0 + 1e-12)) break;
  }
  std::stable_sort(out.begin(), out.end(), better);
  return out;
}

}  // namespace

Tensor summand_tensor(const SystemSpec& spec, const Summand& s) {
  Tensor t(spec, CoherentModel(spec).point(s.factors));
  const double n = norm(t);
  if (n > 0.0) t *= s.coefficient / n;
  return t;
}

Tensor decomposition_sum(const SystemSpec& spec, const Decomposition& d) {
  Tensor t = Tensor::zeros(spec);
  for (const auto& s : d.summands) t += summand_tensor(spec, s);
  return t;
}

Decomposition best_rank_r(const Tensor& state, int r, const FitOptions& opts) {
  if (r < 1) throw Error(ErrorCode::BadParams, "r must be at least 1");
  const Problem pb(state);
  return fit_all(pb, r, opts).front();
}

Decomposition refine(const Tensor& state, const Decomposition& start, double coeff_bound, int max_iters) {
  const Problem pb(state);
  Params p = params_from(pb, start);
  levenberg_marquardt(pb, p, coeff_bound, max_iters, 1e-14);
  Decomposition d = finish(pb, std::move(p), coeff_bound);
  return better(start, d) && start.max_norm <= coeff_bound ? start : d;
}

int flattening_lower_bound(const Tensor& state, double tol) {
  const SystemSpec& spec = state.spec();
  const int L = spec.particles();
  if (L == 1) return state.is_zero() ? 0 : 1;
  const Tensor full = expand_full(state);
  const int max_size = L <= 6 ? L / 2 : 1;
  int best = 0;
  for (int k = 1; k <= max_size; ++k) {
    // Symmetric kinds: every k-subset gives the same flattening up to
    // permutation, so the first one suffices.
    std::vector<bool> pick(static_cast<std::size_t>(L), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> modes;
      for (int j = 0; j < L; ++j)
        if (pick[static_cast<std::size_t>(j)]) modes.push_back(j);
      int rank = numerical_rank(flatten(full, modes), tol);
      if (spec.kind() == Kind::Fermionic) {
        const int c = static_cast<int>(binomial(L, k));
        rank = (rank + c - 1) / c;
      }
      best = std::max(best, rank);
      if (spec.symmetric_kind()) break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return best;
}

RankReport matrix_rank_exact(const Tensor& state, double tol) {
  const SystemSpec& spec = state.spec();
  if (spec.particles() != 2)
    throw Error(ErrorCode::SpecMismatch, "matrix rank needs L = 2, got " + spec.describe());
  int rank = numerical_rank(flatten(expand_full(state), {0}), tol);
  if (spec.kind() == Kind::Fermionic) rank /= 2;
  RankReport rep;
  rep.lower_bound = rep.upper_bound = rep.border_estimate = rank;
  rep.lower_certificate = "matrix";
  rep.upper_certified = rep.border_certified = true;
  rep.border_witness.r = rank;
  return rep;
}

RankReport estimate_rank(const Tensor& state, const RankOptions& opts) {
  const Problem pb(state);
  RankReport rep;
  rep.lower_bound = std::max(1, flattening_lower_bound(state, opts.rank_tol));
  rep.lower_certificate = "flattening";
  const int max_rank = opts.max_rank > 0 ? opts.max_rank : static_cast<int>(state.spec().ambient_dim());

  std::vector<std::vector<Decomposition>> bounded;  // fits at r = lower, lower + 1, ...
  FitOptions fit = opts.fit;
  fit.coeff_bound = opts.upper_bound_norm;
  fit.accept_residual = opts.upper_residual;
  for (int r = rep.lower_bound; r <= std::max(max_rank, rep.lower_bound); ++r) {
    std::vector<Decomposition> all = fit_all(pb, r, fit);
    const Decomposition& best = all.front();
    if (best.residual < opts.upper_residual && best.max_norm <= fit.coeff_bound * (1.0 + 1e-12)) {
      rep.upper_bound = r;
      rep.upper_certified = true;
      rep.upper_witness = best;
      break;
    }
    rep.upper_bound = r;
    rep.upper_witness = best;
    bounded.push_back(std::move(all));
  }

  rep.border_estimate = rep.upper_bound;
  rep.border_certified = rep.upper_certified;
  rep.border_witness.r = rep.upper_bound;
  rep.border_witness.decomposition = rep.upper_witness;
  if (!rep.upper_certified) return rep;

  // Border ladder: loosen the bound rung by rung, carrying the best few fits
  // forward. Warm starts follow two-point collisions well; when they stop
  // making progress (higher-order collisions put the optimum far along a
  // flat valley) fresh fits at the new bound are added.
  for (int r = rep.lower_bound; r < rep.upper_bound; ++r) {
    const std::vector<Decomposition>& first = bounded[static_cast<std::size_t>(r - rep.lower_bound)];
    const auto keep = static_cast<std::size_t>(std::max(1, opts.ladder_starts));
    std::vector<Decomposition> carried(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(std::min(keep, first.size())));
    BorderWitness bw;
    bw.r = r;
    bw.monotone = true;
    bool found = false;
    std::vector<double> rungs = opts.ladder;
    for (std::size_t i = 0; i < rungs.size(); ++i) {
      const double bound = rungs[i];
      std::vector<Decomposition> next;
      for (const auto& d : carried)
        next.push_back(i == 0 && bound == opts.upper_bound_norm ? d : refine(state, d, bound, opts.fit.max_iters));
      std::stable_sort(next.begin(), next.end(), better);
      const bool stalled = !bw.residuals.empty() && !(next.front().residual < 0.5 * bw.residuals.back());
      if (stalled || (i == 0 && bound != opts.upper_bound_norm)) {
        FitOptions fresh = opts.fit;
        fresh.coeff_bound = bound;
        fresh.accept_residual = opts.border_residual;
        for (auto& d : fit_all(pb, r, fresh)) next.push_back(std::move(d));
        std::stable_sort(next.begin(), next.end(), better);
      }
      if (next.size() > keep) next.resize(keep);
      carried = std::move(next);
      const Decomposition& best = carried.front();
      if (!bw.residuals.empty() && best.residual > bw.residuals.back() * (1.0 + 1e-9) + 1e-15) bw.monotone = false;
      bw.bounds.push_back(bound);
      bw.residuals.push_back(best.residual);
      bw.max_norms.push_back(best.max_norm);
      bw.decomposition = best;
      if (best.residual < opts.border_residual) {
        found = true;
        break;
      }
      const std::size_t n = bw.residuals.size();
      const bool improving = n < 2 || bw.residuals[n - 1] < 0.5 * bw.residuals[n - 2];
      if (i + 1 == rungs.size() && improving && bound * 10.0 <= opts.max_ladder_bound * (1.0 + 1e-12))
        rungs.push_back(bound * 10.0);
    }
    if (found) {
      rep.border_estimate = r;
      rep.border_witness = bw;
      rep.border_certified = bw.monotone && bw.decomposition.max_norm > opts.divergence_norm;
      break;
    }
  }
  rep.exceptional = rep.upper_certified && rep.border_certified && rep.border_estimate < rep.upper_bound;
  return rep;
}

SecantMeasurement secant_dim(const SystemSpec& spec, int r, std::uint64_t seed, int trials, double tol) {
  if (r < 1) throw Error(ErrorCode::BadParams, "r must be at least 1");
  const CoherentModel model(spec);
  SecantMeasurement out;
  out.expected = expected_secant_dim(spec, r).expected_dim;
  out.measured = -1;
  for (int t = 0; t < std::max(1, trials); ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t)));
    Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(spec.ambient_dim()), 0);
    for (int k = 0; k < r; ++k) {
      const LocalVectors v = random_local_vectors(spec, rng);
      Eigen::VectorXcd pt;
      Eigen::MatrixXcd jac;
      model.evaluate(v, pt, jac);
      Eigen::MatrixXcd block(pt.size(), jac.cols() + 1);
      block << pt, jac;
      for (Eigen::Index c = 0; c < block.cols(); ++c) {
        const double n = block.col(c).norm();
        if (n > 0.0) block.col(c) /= n;
      }
      Eigen::MatrixXcd grown(stacked.rows(), stacked.cols() + block.cols());
      grown << stacked, block;
      stacked = std::move(grown);
    }
    const long dim = numerical_rank(stacked, tol) - 1;
    out.per_seed.push_back(dim);
    out.measured = std::max(out.measured, dim);
  }
  out.defect = out.expected - out.measured;
  return out;
}

Json decomposition_to_json(const SystemSpec& spec, const Decomposition& d) {
  (void)spec;
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json factors = Json::array();
    for (const auto& f : s.factors) {
      Json vec = Json::array();
      for (Eigen::Index i = 0; i < f.size(); ++i) vec.push_back(complex_to_json(f[i]));
      factors.push_back(std::move(vec));
    }
    summands.push_back(Json{{"coefficient", complex_to_json(s.coefficient)}, {"factors", std::move(factors)}});
  }
  return Json{{"residual", d.residual}, {"max_norm", d.max_norm}, {"summands", std::move(summands)}};
}

Json rank_report_to_json(const SystemSpec& spec, const RankReport& rep) {
  Json border{{"r", rep.border_witness.r},
              {"bounds", rep.border_witness.bounds},
              {"residuals", rep.border_witness.residuals},
              {"max_norms", rep.border_witness.max_norms},
              {"monotone", rep.border_witness.monotone},
              {"decomposition", decomposition_to_json(spec, rep.border_witness.decomposition)}};
  return Json{{"lower", rep.lower_bound},
              {"upper", rep.upper_bound},
              {"border", rep.border_estimate},
              {"exceptional", rep.exceptional},
              {"lower_certificate", rep.lower_certificate},
              {"upper_certified", rep.upper_certified},
              {"border_certified", rep.border_certified},
              {"upper_witness", decomposition_to_json(spec, rep.upper_witness)},
              {"border_witness", std::move(border)}};
}

}  // namespace secanta
