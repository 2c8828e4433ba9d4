#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "secanta/error.hpp"
#include "secanta/ket.hpp"
#include "secanta/tensor_io.hpp"

using namespace secanta;

TEST_CASE("tensor json round trip") {
  std::mt19937_64 rng(5);
  for (const auto& spec : {SystemSpec::distinguishable({2, 3, 2}), SystemSpec::bosonic(3, 2), SystemSpec::fermionic(6, 3)}) {
    const Tensor t = oracle::random_state(spec, rng);
    const Json doc = tensor_to_json(t);
    const Tensor back = tensor_from_json(Json::parse(doc.dump()));
    CHECK(back.spec() == spec);
    CHECK((back.entries() - t.entries()).norm() == 0.0);
  }
}

TEST_CASE("tensor json layout") {
  const Tensor t = parse_ket("|012> - 2i|345>", SystemSpec::fermionic(6, 3));
  const Json doc = tensor_to_json(t);
  CHECK(doc["kind"] == "fermionic");
  CHECK(doc["L"] == 3);
  CHECK(doc["entries"].size() == 2);
  CHECK(doc["entries"][1] == Json::parse("[3, 4, 5, 0.0, -2.0]"));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"kind":"bosonic","L":2,"dims":[2],"entries":[[0,2,1,0]]})")), Error);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"kind":"fermionic","L":2,"dims":[3],"entries":[[1,1,1,0]]})")), Error);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"kind":"nope","L":2,"dims":[3],"entries":[]})")), Error);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"([1,2])")), Error);
}

TEST_CASE("state files, bare or wrapped") {
  const Tensor t = parse_ket("|001>+|010>+|100>", SystemSpec::distinguishable({2, 2, 2}));
  const std::string path = "secanta_io_test.json";
  for (const Json& doc : {tensor_to_json(t), Json{{"schema", kSchema}, {"state", tensor_to_json(t)}},
                          Json{{"catalog", Json::array({Json{{"id", "W"}, {"state", tensor_to_json(t)}}})}}}) {
    std::ofstream(path) << doc.dump();
    CHECK((read_tensor_file(path).entries() - t.entries()).norm() == 0.0);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_tensor_file("does/not/exist.json"), Error);
}
