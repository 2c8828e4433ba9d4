#include "secanta/catalog.hpp"

#include <algorithm>

#include "secanta/invariants.hpp"
#include "secanta/ket.hpp"
#include "secanta/linalg.hpp"

namespace secanta {

namespace {

OrbitLabel classify_from_mlrank(const std::vector<int>& ml) {
  OrbitLabel out{QubitOrbit::SEP, ml, 0.0, false};
  const int ones = static_cast<int>(std::count(ml.begin(), ml.end(), 1));
  if (ones >= 2) return out;
  if (ones == 1) {
    out.label = ml[0] == 1 ? QubitOrbit::BISEP_1 : (ml[1] == 1 ? QubitOrbit::BISEP_2 : QubitOrbit::BISEP_3);
    return out;
  }
  return out;
}

CatalogEntry entry(std::string id, std::string family, SystemSpec spec, std::string ket, int rank, int border,
                   std::optional<int> min_n, std::string citation) {
  return CatalogEntry{std::move(id), std::move(family), std::move(spec), std::move(ket), rank, border, min_n,
                      std::move(citation)};
}

}  // namespace

Tensor CatalogEntry::tensor() const { return parse_ket(ket, spec); }

std::vector<CatalogEntry> exceptional_catalog(const std::string& family, int n, int L) {
  static const std::vector<std::string> kFamilies = {"2x2xN", "2x3xN", "4qubit", "bosonic", "fermionic"};
  const bool all = family.empty() || family == "all";
  if (!all && std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end())
    throw Error(ErrorCode::BadParams,
                "unknown catalog family '" + family + "' (expected 2x2xN, 2x3xN, 4qubit, bosonic, fermionic or all)");
  const int bn = n > 0 ? n : 2;
  const int bl = L > 0 ? L : 3;
  if (bn < 2 || bl < 3) throw Error(ErrorCode::BadParams, "bosonic W-type entry needs n >= 2 and L >= 3");
  if (bn > 10) throw Error(ErrorCode::BadParams, "bosonic W-type entry is written in ket syntax, n <= 10");

  std::vector<CatalogEntry> out;
  auto want = [&](const char* f) { return all || family == f; };
  if (want("2x2xN"))
    out.push_back(entry("W", "2x2xN", SystemSpec::distinguishable({2, 2, 2}), "|100>+|010>+|001>", 3, 2, 2,
                        "2x2xN orbits: the only exceptional orbit, through W"));
  if (want("2x3xN")) {
    const char* cite = "2x3xN exceptional states with the smallest N where they appear";
    out.push_back(entry("Psi1", "2x3xN", SystemSpec::distinguishable({2, 3, 2}), "|100>+|010>+|001>", 3, 2, 2, cite));
    out.push_back(entry("Psi2", "2x3xN", SystemSpec::distinguishable({2, 3, 3}), "|0>(|00>+|11>)+|1>(|01>+|22>)", 4,
                        3, 3, cite));
    out.push_back(entry("Psi3", "2x3xN", SystemSpec::distinguishable({2, 3, 3}),
                        "|0>(|00>+|11>+|22>)+|1>(|01>+|12>)", 4, 3, 3, cite));
    out.push_back(entry("Psi4", "2x3xN", SystemSpec::distinguishable({2, 3, 3}), "|0>(|00>+|11>+|22>)+|101>", 4, 3, 3,
                        cite));
    out.push_back(entry("Psi5", "2x3xN", SystemSpec::distinguishable({2, 3, 3}), "|0>(|00>+|12>)+|1>(|01>+|22>)", 4,
                        3, 3, cite));
    out.push_back(entry("Psi6", "2x3xN", SystemSpec::distinguishable({2, 3, 4}),
                        "|0>(|00>+|12>+|23>)+|1>(|01>+|13>)", 5, 4, 4, cite));
  }
  if (want("4qubit")) {
    out.push_back(entry("0xW3", "4qubit", SystemSpec::distinguishable({2, 2, 2, 2}), "|0>(|001>+|010>+|100>)", 3, 2,
                        std::nullopt, "four qubits: closure of the orbit of |0>(|000>+|111>)"));
    out.push_back(entry("W4", "4qubit", SystemSpec::distinguishable({2, 2, 2, 2}), "|0001>+|0010>+|0100>+|1000>", 4,
                        2, std::nullopt, "four qubits: closure of the orbit of |0000>+|1111>"));
  }
  if (want("bosonic")) {
    std::string label(static_cast<std::size_t>(bl), static_cast<char>('0' + bn - 1));
    label[0] = '0';
    out.push_back(entry("v1vn^" + std::to_string(bl - 1), "bosonic", SystemSpec::bosonic(bn, bl), "|" + label + ">",
                        bl, 2, std::nullopt, "W-type boson state v_1 v_n^{L-1}, Waring rank L"));
  }
  if (want("fermionic"))
    out.push_back(entry("phi", "fermionic", SystemSpec::fermionic(6, 3), "|013>-|024>+|125>", 3, 2, std::nullopt,
                        "three fermions in six modes: limit of the orbit of e012 + e345"));
  return out;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j{{"id", e.id},         {"family", e.family},           {"ket", e.ket},
         {"rank", e.rank},     {"border_rank", e.border_rank}, {"min_N", nullptr},
         {"citation", e.citation}, {"state", tensor_to_json(e.tensor())}};
  if (e.min_N) j["min_N"] = *e.min_N;
  return j;
}

const char* to_string(QubitOrbit o) {
  switch (o) {
    case QubitOrbit::SEP:
      return "SEP";
    case QubitOrbit::BISEP_1:
      return "BISEP_1";
    case QubitOrbit::BISEP_2:
      return "BISEP_2";
    case QubitOrbit::BISEP_3:
      return "BISEP_3";
    case QubitOrbit::GHZ:
      return "GHZ";
    case QubitOrbit::W:
      return "W";
    case QubitOrbit::C223_GENERIC:
      return "C223_GENERIC";
    case QubitOrbit::C223_DEGENERATE:
      return "C223_DEGENERATE";
    case QubitOrbit::C224:
      return "C224";
  }
  return "?";
}

OrbitLabel classify_three_qubit(const Tensor& t) {
  if (!(t.spec() == SystemSpec::distinguishable({2, 2, 2})))
    throw Error(ErrorCode::SpecMismatch, "three-qubit classifier needs a 2x2x2 tensor, got " + t.spec().describe());
  OrbitLabel out = classify_from_mlrank(mlrank(t));
  if (std::count(out.mlrank.begin(), out.mlrank.end(), 2) != 3) return out;
  out.abs_hyperdet = std::abs(hyperdet_222(ProjectiveState(t).rep()));
  if (out.abs_hyperdet > kHyperdetThreshold) {
    out.label = QubitOrbit::GHZ;
  } else {
    out.label = QubitOrbit::W;
    out.near_boundary = out.abs_hyperdet > 1e-13;
  }
  return out;
}

OrbitLabel classify_22N(const Tensor& t) {
  const auto& dims = t.spec().dims();
  if (t.spec().kind() != Kind::Distinguishable || dims.size() != 3 || dims[0] != 2 || dims[1] != 2 || dims[2] < 2)
    throw Error(ErrorCode::SpecMismatch, "2x2xN classifier needs dims (2, 2, N), got " + t.spec().describe());
  const std::vector<int> ml = mlrank(t);
  OrbitLabel out = classify_from_mlrank(ml);
  if (std::count(ml.begin(), ml.end(), 1) >= 1) return out;

  // Restrict factor 3 to the span of the slices.
  const Eigen::MatrixXcd basis = column_basis(flatten(t, {2}));
  const int k = static_cast<int>(basis.cols());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  const Tensor core = apply_local(t, {id, id, basis.adjoint()});
  if (k == 2) {
    OrbitLabel inner = classify_three_qubit(core);
    inner.mlrank = ml;
    return inner;
  }
  if (k == 4) {
    out.label = QubitOrbit::C224;
    return out;
  }
  // k == 3: the slices span a hyperplane of 2x2 matrices, annihilated by one
  // matrix M under the bilinear pairing; its rank separates the two orbits.
  const Eigen::MatrixXcd ns = null_space(flatten(core, {2}));
  Eigen::MatrixXcd m(2, 2);
  m << ns(0, 0), ns(1, 0), ns(2, 0), ns(3, 0);
  out.label = numerical_rank(m) == 2 ? QubitOrbit::C223_GENERIC : QubitOrbit::C223_DEGENERATE;
  return out;
}

}  // namespace secanta
