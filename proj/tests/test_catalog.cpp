#include "doctest.h"
#include "oracles.hpp"
#include "secanta/catalog.hpp"
#include "secanta/error.hpp"
#include "secanta/invariants.hpp"
#include "secanta/ket.hpp"

using namespace secanta;

namespace {
const SystemSpec kQ3 = SystemSpec::distinguishable({2, 2, 2});
OrbitLabel label3(const std::string& s) { return classify_three_qubit(parse_ket(s, kQ3)); }
}  // namespace

TEST_CASE("catalog contents") {
  const auto all = exceptional_catalog();
  CHECK(all.size() == 11);
  for (const auto& e : all) {
    CAPTURE(e.id);
    CHECK(e.rank > e.border_rank);
    CHECK_FALSE(e.tensor().is_zero());
    CHECK_FALSE(e.citation.empty());
  }
  const auto psi = exceptional_catalog("2x3xN");
  REQUIRE(psi.size() == 6);
  CHECK(psi.back().id == "Psi6");
  CHECK(psi.back().rank == 5);
  CHECK(psi.back().border_rank == 4);
  CHECK(psi.back().min_N == 4);
  const auto q4 = exceptional_catalog("4qubit");
  CHECK(q4.size() == 2);
  const auto b = exceptional_catalog("bosonic", 2, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].rank == 3);
  CHECK(b[0].border_rank == 2);
  CHECK(b[0].tensor().at({1, 0, 1}) == cd(1));
  CHECK(exceptional_catalog("bosonic", 4, 5)[0].rank == 5);
  CHECK_THROWS_AS(exceptional_catalog("5qubit"), Error);
  const Json j = catalog_entry_to_json(psi.front());
  CHECK(j["id"] == "Psi1");
  CHECK(j["state"]["entries"].size() == 3);
}

TEST_CASE("three-qubit orbits") {
  CHECK(label3("|000>+|111>").label == QubitOrbit::GHZ);
  CHECK(label3("|001>+|010>+|100>").label == QubitOrbit::W);
  CHECK(label3("|0>(|00>+|11>)").label == QubitOrbit::BISEP_1);
  CHECK(label3("|000>+|101>").label == QubitOrbit::BISEP_2);
  CHECK(label3("|000>+|110>").label == QubitOrbit::BISEP_3);
  CHECK(label3("(|0>+|1>)|1>(|0>-2|1>)").label == QubitOrbit::SEP);
  CHECK_THROWS_AS(classify_three_qubit(parse_ket("|00>", SystemSpec::distinguishable({2, 2}))), Error);

  // Orbits are preserved by random invertible local maps.
  std::mt19937_64 rng(12);
  for (const char* s : {"|000>+|111>", "|001>+|010>+|100>", "|0>(|00>+|11>)", "|000>"}) {
    const QubitOrbit want = label3(s).label;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Eigen::MatrixXcd> g;
      for (int k = 0; k < 3; ++k) g.push_back(oracle::random_unitary(2, rng) * Eigen::Vector2cd(1.0, 0.5).asDiagonal());
      CHECK(classify_three_qubit(apply_local(parse_ket(s, kQ3), g)).label == want);
    }
  }
}

TEST_CASE("2x2xN orbits") {
  const auto d4 = SystemSpec::distinguishable({2, 2, 4});
  CHECK(classify_22N(parse_ket("|001>+|010>+|100>", d4)).label == QubitOrbit::W);
  CHECK(classify_22N(parse_ket("|000>+|111>", SystemSpec::distinguishable({2, 2, 3}))).label == QubitOrbit::GHZ);
  std::mt19937_64 rng(1);
  const OrbitLabel top = classify_22N(oracle::random_state(d4, rng));
  CHECK(top.label == QubitOrbit::C224);
  CHECK(top.mlrank == std::vector<int>{2, 2, 4});
  const auto d3 = SystemSpec::distinguishable({2, 2, 3});
  CHECK(classify_22N(oracle::random_state(d3, rng)).label == QubitOrbit::C223_GENERIC);
  CHECK(classify_22N(parse_ket("|000>+|011>+|102>", d3)).label == QubitOrbit::C223_DEGENERATE);
  CHECK_THROWS_AS(classify_22N(parse_ket("|000>", SystemSpec::distinguishable({2, 3, 3}))), Error);
}
