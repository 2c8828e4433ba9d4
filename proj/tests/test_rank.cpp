#include "doctest.h"
#include "oracles.hpp"
#include "secanta/catalog.hpp"
#include "secanta/ket.hpp"
#include "secanta/linalg.hpp"
#include "secanta/rank_engine.hpp"

using namespace secanta;

namespace {
const SystemSpec kQ3 = SystemSpec::distinguishable({2, 2, 2});
Tensor ket(const std::string& s, const SystemSpec& spec = kQ3) { return parse_ket(s, spec); }

Tensor w_state(int L) {
  SparseEntries e;
  for (int k = 0; k < L; ++k) {
    MultiIndex idx(static_cast<std::size_t>(L), 0);
    idx[static_cast<std::size_t>(k)] = 1;
    e.emplace_back(idx, 1.0);
  }
  return make_tensor(SystemSpec::distinguishable(std::vector<int>(static_cast<std::size_t>(L), 2)), e);
}

// Residual recomputed from the witness itself.
double witness_residual(const Tensor& state, const Decomposition& d) {
  return norm(ProjectiveState(state).rep() - decomposition_sum(state.spec(), d));
}
}  // namespace

TEST_CASE("rank-2 fits") {
  const Tensor ghz = ket("|000>+|111>");
  const Decomposition g = best_rank_r(ghz, 2);
  CHECK(g.residual < 1e-10);
  CHECK(g.summands.size() == 2);
  CHECK(std::abs(witness_residual(ghz, g) - g.residual) < 1e-12);
  for (const auto& s : g.summands) CHECK(numerical_rank(flatten(summand_tensor(kQ3, s), {0})) == 1);

  const Tensor w = ket("|001>+|010>+|100>");
  FitOptions bounded;
  bounded.coeff_bound = 10;
  const Decomposition wb = best_rank_r(w, 2, bounded);
  CHECK(wb.max_norm <= 10 + 1e-9);
  // Approaching W within norm C costs about 1/(12 sqrt(3) C^2).
  CHECK(wb.residual > 1e-4);
  CHECK(witness_residual(w, wb) == doctest::Approx(wb.residual).epsilon(1e-6));

  FitOptions open;
  open.coeff_bound = kUnbounded;
  const Decomposition wu = best_rank_r(w, 2, open);
  CHECK(wu.residual < 1e-6);
  CHECK(wu.max_norm > 1e2);
}

TEST_CASE("residual is monotone in r") {
  std::mt19937_64 rng(6);
  const Tensor t = oracle::random_state(SystemSpec::distinguishable({2, 2, 3}), rng);
  FitOptions o;
  o.restarts = 8;
  double last = 2.0;
  for (int r = 1; r <= 3; ++r) {
    const double res = best_rank_r(t, r, o).residual;
    CHECK(res <= last + 1e-12);
    last = res;
  }
  CHECK(last < 1e-8);
}

TEST_CASE("fermionic and bosonic fits") {
  const Tensor f = ket("|012>+|345>", SystemSpec::fermionic(6, 3));
  const Decomposition d = best_rank_r(f, 2);
  CHECK(d.residual < 1e-10);
  CHECK(witness_residual(f, d) < 1e-9);
  const Tensor b = ket("|000>+|111>", SystemSpec::bosonic(2, 3));
  CHECK(best_rank_r(b, 2).residual < 1e-10);
  CHECK(best_rank_r(ket("|011>", SystemSpec::bosonic(2, 3)), 3).residual < 1e-8);
}

TEST_CASE("fits are deterministic under the seed") {
  const Tensor w = ket("|001>+|010>+|100>");
  FitOptions o;
  o.restarts = 4;
  o.seed = 42;
  const Decomposition a = best_rank_r(w, 2, o), b = best_rank_r(w, 2, o);
  CHECK(a.residual == b.residual);
  CHECK(a.max_norm == b.max_norm);
}

TEST_CASE("estimate_rank on three qubits") {
  const RankReport w = estimate_rank(ket("|001>+|010>+|100>"));
  CHECK(w.lower_bound == 2);
  CHECK(w.upper_bound == 3);
  CHECK(w.upper_certified);
  CHECK(w.border_estimate == 2);
  CHECK(w.border_certified);
  CHECK(w.exceptional);
  CHECK(w.border_witness.monotone);
  CHECK(w.border_witness.max_norms.back() > 1e2);

  const RankReport g = estimate_rank(ket("|000>+|111>"));
  CHECK(g.lower_bound == 2);
  CHECK(g.upper_bound == 2);
  CHECK(g.border_estimate == 2);
  CHECK_FALSE(g.exceptional);

  const RankReport p = estimate_rank(ket("|000>"));
  CHECK(p.upper_bound == 1);
  CHECK(p.border_estimate == 1);
}

TEST_CASE("W states of L qubits") {
  for (int L = 3; L <= 5; ++L) {
    const RankReport r = estimate_rank(w_state(L));
    CAPTURE(L);
    CHECK(r.upper_bound == L);
    CHECK(r.border_estimate == 2);
    CHECK(r.exceptional);
  }
}

TEST_CASE("exact matrix ranks") {
  const auto q2 = SystemSpec::distinguishable({2, 2});
  const RankReport bell = matrix_rank_exact(ket("|00>+|11>", q2));
  CHECK(bell.upper_bound == 2);
  CHECK(bell.border_estimate == 2);
  CHECK(bell.lower_bound == 2);
  CHECK_FALSE(bell.exceptional);
  CHECK(matrix_rank_exact(ket("|01>", SystemSpec::bosonic(2, 2))).upper_bound == 2);
  CHECK(matrix_rank_exact(ket("|01>+|23>", SystemSpec::fermionic(4, 2))).upper_bound == 2);
  CHECK_THROWS(matrix_rank_exact(ket("|000>")));
}

TEST_CASE("flattening lower bounds") {
  CHECK(flattening_lower_bound(ket("|001>+|010>+|100>")) == 2);
  CHECK(flattening_lower_bound(ket("|000>")) == 1);
  CHECK(flattening_lower_bound(ket("|0>(|00>+|12>+|23>)+|1>(|01>+|13>)", SystemSpec::distinguishable({2, 3, 4}))) == 4);
  CHECK(flattening_lower_bound(ket("|012>", SystemSpec::fermionic(6, 3))) == 1);
  CHECK(flattening_lower_bound(ket("|012>+|345>", SystemSpec::fermionic(6, 3))) == 2);
  // Balanced bipartitions see more than single modes.
  const auto q4 = SystemSpec::distinguishable({2, 2, 2, 2});
  CHECK(flattening_lower_bound(ket("|0000>+|0101>+|1010>+|1111>", q4)) == 4);
}

TEST_CASE("lower bound never exceeds the border estimate on the catalog") {
  for (const auto& e : exceptional_catalog()) {
    CAPTURE(e.id);
    CHECK(flattening_lower_bound(e.tensor()) <= e.border_rank);
  }
}

TEST_CASE("Terracini measurements") {
  const auto q4 = secant_dim(SystemSpec::distinguishable({2, 2, 2, 2}), 3, 0);
  CHECK(q4.measured == 13);
  CHECK(q4.expected == 14);
  CHECK(q4.defect == 1);
  CHECK(q4.per_seed == std::vector<long>{13, 13, 13});
  const auto q3 = secant_dim(SystemSpec::distinguishable({2, 2, 2}), 2, 0);
  CHECK(q3.measured == 7);
  CHECK(q3.defect == 0);
  const auto v = secant_dim(SystemSpec::bosonic(3, 4), 5, 0);
  CHECK(v.measured == 13);
  CHECK(v.expected == 14);
  // Skew forms of rank 4 on C^6 fill the Pfaffian hypersurface (dim 13).
  const auto g = secant_dim(SystemSpec::fermionic(6, 2), 2, 0);
  CHECK(g.measured == 13);
  CHECK(g.expected == 14);
}

TEST_CASE("report json") {
  const Tensor w = ket("|001>+|010>+|100>");
  const RankReport r = estimate_rank(w);
  const Json j = rank_report_to_json(kQ3, r);
  CHECK(j["lower"] == 2);
  CHECK(j["upper"] == 3);
  CHECK(j["border"] == 2);
  CHECK(j["exceptional"] == true);
  CHECK(j["upper_witness"]["summands"].size() == 3);
  CHECK(j["border_witness"]["bounds"].size() == r.border_witness.bounds.size());
}
