#include "doctest.h"
#include "oracles.hpp"
#include "secanta/error.hpp"
#include "secanta/linalg.hpp"
#include "secanta/tensor.hpp"

using namespace secanta;

namespace {

Tensor w3() {
  return make_tensor(SystemSpec::distinguishable({2, 2, 2}), {{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}});
}
Tensor ghz3() { return make_tensor(SystemSpec::distinguishable({2, 2, 2}), {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}); }

}  // namespace

TEST_CASE("packed layouts") {
  CHECK(packed_indices(SystemSpec::distinguishable({2, 3})).size() == 6);
  CHECK(packed_indices(SystemSpec::bosonic(3, 3)).size() == 10);
  CHECK(packed_indices(SystemSpec::fermionic(6, 3)).size() == 20);
  CHECK(SystemSpec::fermionic(6, 3).ambient_dim() == 20);
  CHECK(binomial(6, 3) == 20);
  const auto spec = SystemSpec::fermionic(5, 2);
  const auto idx = packed_indices(spec);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(packed_position(spec, idx[i]) == i);
  CHECK_THROWS_AS(SystemSpec::fermionic(2, 3), Error);
  CHECK_THROWS_AS(SystemSpec::distinguishable({2, 0}), Error);
}

TEST_CASE("make_tensor accumulates with signs and multiplicities") {
  const Tensor w = w3();
  int nonzero = 0;
  for (Eigen::Index i = 0; i < w.entries().size(); ++i) nonzero += w.entries()[i] != cd(0);
  CHECK(nonzero == 3);

  const auto f = SystemSpec::fermionic(6, 3);
  const Tensor t = make_tensor(f, {{{1, 0, 2}, 1}});
  CHECK(t.entries()[static_cast<Eigen::Index>(packed_position(f, {0, 1, 2}))] == cd(-1));
  CHECK(t.at({2, 1, 0}) == cd(1));
  CHECK(t.at({0, 2, 1}) == cd(1));
  CHECK(t.at({0, 0, 1}) == cd(0));
  CHECK_THROWS_AS(make_tensor(f, {{{1, 1, 2}, 1}}), Error);

  const auto b = SystemSpec::bosonic(2, 3);
  const Tensor s = make_tensor(b, {{{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}});
  CHECK(s.entries()[static_cast<Eigen::Index>(packed_position(b, {0, 1, 1}))] == cd(3));
  CHECK_THROWS_AS(make_tensor(b, {{{0, 2, 1}, 1}}), Error);
}

TEST_CASE("inner product matches the expanded arrays") {
  std::mt19937_64 rng(11);
  for (const auto& spec : {SystemSpec::distinguishable({2, 3, 2}), SystemSpec::bosonic(3, 3),
                           SystemSpec::fermionic(5, 3), SystemSpec::bosonic(2, 4)}) {
    const Tensor a = oracle::random_state(spec, rng), b = oracle::random_state(spec, rng);
    const cd expected = oracle::inner(a, b);
    CHECK(std::abs(inner(a, b) - expected) < 1e-10 * std::abs(expected));
    CHECK(norm(a) == doctest::Approx(std::sqrt(oracle::inner(a, a).real())).epsilon(1e-12));
  }
}

TEST_CASE("expand_full and pack_full") {
  const Tensor m = make_tensor(SystemSpec::bosonic(2, 3), {{{0, 1, 1}, 1}});
  const Tensor full = expand_full(m);
  CHECK(full.spec() == SystemSpec::distinguishable({2, 2, 2}));
  int ones = 0;
  for (Eigen::Index i = 0; i < full.entries().size(); ++i) ones += full.entries()[i] == cd(1);
  CHECK(ones == 3);
  CHECK(pack_full(full, Kind::Bosonic).entries() == m.entries());

  const Tensor e01 = make_tensor(SystemSpec::fermionic(2, 2), {{{0, 1}, 1}});
  const Tensor fe = expand_full(e01);
  CHECK(fe.at({0, 1}) == cd(1));
  CHECK(fe.at({1, 0}) == cd(-1));
  CHECK(fe.at({0, 0}) == cd(0));

  const Tensor cube = make_tensor(SystemSpec::bosonic(2, 3), {{{0, 0, 0}, 1}});
  const Tensor fc = expand_full(cube);
  CHECK(fc.entries().cwiseAbs().sum() == doctest::Approx(1.0));
  CHECK(fc.at({0, 0, 0}) == cd(1));
}

TEST_CASE("flattenings") {
  CHECK(numerical_rank(flatten(w3(), {0})) == 2);
  CHECK(flatten(w3(), {0}).rows() == 2);
  CHECK(flatten(w3(), {0}).cols() == 4);
  CHECK(numerical_rank(flatten(ghz3(), {0})) == 2);
  const Tensor prod = make_tensor(SystemSpec::distinguishable({2, 2, 2}), {{{0, 0, 0}, 1}});
  for (const auto& modes : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 2}}) CHECK(numerical_rank(flatten(prod, modes)) == 1);
  // Entry layout: row = first mode, column = remaining modes row-major.
  const Eigen::MatrixXcd m = flatten(w3(), {1});
  CHECK(m(0, 1) == cd(1));  // (0, 0, 1)
  CHECK(m(1, 0) == cd(1));  // (0, 1, 0)
  CHECK(m(0, 2) == cd(1));  // (1, 0, 0)
  CHECK_THROWS_AS(flatten(w3(), {}), Error);
  CHECK_THROWS_AS(flatten(w3(), {0, 1, 2}), Error);
}

TEST_CASE("projective distance") {
  const ProjectiveState g(ghz3()), w(w3());
  CHECK(proj_distance(g, g) == doctest::Approx(0.0));
  CHECK(proj_distance(g, w) == doctest::Approx(1.0));
  const auto spec = SystemSpec::distinguishable({2, 2, 2});
  CHECK(proj_distance(ProjectiveState(make_tensor(spec, {{{0, 0, 0}, 1}})),
                      ProjectiveState(make_tensor(spec, {{{1, 1, 1}, 1}}))) == doctest::Approx(1.0));
  // Global phase and scale do not matter.
  CHECK(proj_distance(g, ProjectiveState(cd(0, -3) * ghz3())) < 1e-12);
  CHECK(std::abs(norm(ProjectiveState(cd(0, -3) * ghz3()).rep()) - 1.0) < 1e-14);
  CHECK_THROWS_AS(ProjectiveState(Tensor::zeros(spec)), Error);
}

TEST_CASE("embed by coordinate inclusions") {
  auto inclusion = [](int from, int to) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to, from);
    m.topRows(from).setIdentity();
    return m;
  };
  const auto target = SystemSpec::distinguishable({3, 3, 4});
  const Tensor e = embed(w3(), target, {inclusion(2, 3), inclusion(2, 3), inclusion(2, 4)});
  CHECK(e.at({0, 0, 1}) == cd(1));
  CHECK(e.at({0, 1, 0}) == cd(1));
  CHECK(e.at({1, 0, 0}) == cd(1));
  CHECK(e.entries().cwiseAbs().sum() == doctest::Approx(3.0));

  const Tensor f = make_tensor(SystemSpec::fermionic(6, 3), {{{0, 1, 2}, 1}});
  const Tensor f7 = embed(f, SystemSpec::fermionic(7, 3), {inclusion(6, 7)});
  CHECK(f7.at({0, 1, 2}) == cd(1));
  CHECK(f7.entries().cwiseAbs().sum() == doctest::Approx(1.0));

  Eigen::MatrixXcd degenerate = Eigen::MatrixXcd::Zero(3, 2);
  degenerate(0, 0) = degenerate(0, 1) = 1;
  CHECK_THROWS_AS(embed(w3(), target, {degenerate, inclusion(2, 3), inclusion(2, 4)}), Error);
}

TEST_CASE("apply_local acts slotwise") {
  std::mt19937_64 rng(3);
  const auto spec = SystemSpec::bosonic(3, 3);
  const Tensor t = oracle::random_state(spec, rng);
  const Eigen::MatrixXcd g = oracle::random_matrix(3, 3, rng);
  const Tensor gt = apply_local(t, {g});
  // Compare with the full array transformed slot by slot.
  const auto idx = oracle::all_indices({3, 3, 3});
  for (const auto& out : idx) {
    cd s = 0;
    for (const auto& in : idx) s += g(out[0], in[0]) * g(out[1], in[1]) * g(out[2], in[2]) * t.at(in);
    CHECK(std::abs(gt.at(out) - s) < 1e-10);
  }
}
