#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "secanta/cli.hpp"
#include "secanta/tensor_io.hpp"

using namespace secanta;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "secanta");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli rank report") {
  const Run r = run({"rank", "--kind", "distinguishable", "--dims", "2,2,2", "--state", "|001>+|010>+|100>"});
  REQUIRE(r.code == kExitOk);
  const Json d = r.doc();
  CHECK(d["schema"] == "secanta/1");
  CHECK(d["seed"] == 0);
  CHECK(d["lower"] == 2);
  CHECK(d["upper"] == 3);
  CHECK(d["border"] == 2);
  CHECK(d["exceptional"] == true);
  CHECK(r.err.find("exceptional") != std::string::npos);
}

TEST_CASE("cli measurements and closed forms") {
  const Run s = run({"secant-dim", "--kind", "distinguishable", "--dims", "2,2,2,2", "--r", "3", "--seed", "7", "--quiet"});
  REQUIRE(s.code == kExitOk);
  CHECK(s.doc()["measured"] == 13);
  CHECK(s.doc()["expected"] == 14);
  CHECK(s.doc()["defect"] == 1);
  CHECK(s.err.empty());

  const Run w = run({"waring", "--exponents", "1,3"});
  REQUIRE(w.code == kExitOk);
  CHECK(w.doc()["rank"] == 4);
  CHECK(run({"waring", "--exponents", "1,2,0,0;0,0,1,2"}).doc()["rank"] == 6);

  const Run e = run({"expected", "--kind", "bosonic", "--n", "3", "--L", "4", "--r", "5"});
  CHECK(e.doc()["expected_generic_rank"] == 5);
  CHECK(e.doc()["secant"]["expected_dim"] == 14);
  CHECK(run({"spherical", "--kind", "fermionic", "--n", "6", "--L", "3"}).doc()["spherical"] == false);
}

TEST_CASE("cli state commands") {
  const std::vector<std::string> w = {"--kind", "distinguishable", "--dims", "2,2,2", "--state", "|100>+|010>+|001>"};
  auto with = [&](const std::string& cmd) {
    std::vector<std::string> a{cmd};
    a.insert(a.end(), w.begin(), w.end());
    return run(a);
  };
  CHECK(with("parse").doc()["ket"] == "|001> + |010> + |100>");
  CHECK(with("classify").doc()["label"] == "W");
  CHECK(with("mlrank").doc()["mlrank"] == Json::parse("[2,2,2]"));
  CHECK(with("mu-norm").doc()["mu_norm_sq"].get<double>() == doctest::Approx(1.0 / 24));
  CHECK(with("hyperdet").doc()["hyperdet"] == Json::parse("[0.0, 0.0]"));
  CHECK(with("rdm").doc()["spectra"][0][0].get<double>() == doctest::Approx(2.0 / 3));
  CHECK(with("border-rank").doc()["border"] == 2);
}

TEST_CASE("cli degenerations and catalog") {
  const Run d = run({"degenerate", "--family", "qubit3", "--quiet"});
  REQUIRE(d.code == kExitOk);
  CHECK(d.doc()["strictly_decreasing"] == true);
  CHECK(d.doc()["rows"].size() == 7);
  const Run c = run({"catalog", "--family", "2x3xN", "--quiet"});
  REQUIRE(c.code == kExitOk);
  CHECK(c.doc()["catalog"].size() == 6);
}

TEST_CASE("cli catalog entries feed back into rank") {
  const Run c = run({"catalog", "--family", "fermionic", "--quiet"});
  REQUIRE(c.code == kExitOk);
  const std::string path = "secanta_cli_test.json";
  std::ofstream(path) << c.out;
  const Run r = run({"rank", "--file", path, "--quiet"});
  std::remove(path.c_str());
  REQUIRE(r.code == kExitOk);
  CHECK(r.doc()["upper"] == 3);
  CHECK(r.doc()["border"] == 2);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> a = {"rank", "--kind", "bosonic", "--n", "2", "--L", "3", "--state", "|011>", "--seed", "3", "--quiet"};
  CHECK(run(a).out == run(a).out);
}

TEST_CASE("cli errors") {
  Run r = run({"rank", "--kind", "distinguishable", "--dims", "2,x", "--state", "|00>"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("--dims") != std::string::npos);
  r = run({"rank", "--dims", "2,2", "--state", "|00>"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("--kind") != std::string::npos);
  r = run({"parse", "--kind", "distinguishable", "--dims", "2,2", "--state", "|0>"});
  CHECK(r.code == kExitInput);
  CHECK(run({"secant-dim", "--kind", "bosonic", "--n", "3", "--L", "3"}).err.find("--r") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"rank", "--bogus"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"waring", "--exponents", "1,2;1,2"}).code == kExitInput);
  CHECK(run({"degenerate", "--family", "qutrit"}).err.find("--family") != std::string::npos);
}
