#include "secanta/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "secanta/catalog.hpp"
#include "secanta/degenerations.hpp"
#include "secanta/invariants.hpp"
#include "secanta/ket.hpp"
#include "secanta/rank_engine.hpp"
#include "secanta/tensor_io.hpp"
#include "secanta/varieties.hpp"
#include "secanta/waring.hpp"

namespace secanta {

namespace {

struct Flags {
  std::string kind;
  std::string dims;
  std::string state;
  std::string file;
  std::string exponents;
  std::string family;
  int n = 0;
  int L = 0;
  int r = 0;
  int restarts = 32;
  int max_iters = 500;
  std::uint64_t seed = 0;
  double tol = kRankTolerance;
  bool quiet = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

SystemSpec spec_from_flags(const Flags& f) {
  if (f.kind.empty()) throw UsageError("--kind is required (distinguishable, bosonic or fermionic)");
  Kind kind;
  try {
    kind = kind_from_string(f.kind);
  } catch (const Error&) {
    throw UsageError("--kind: unknown kind '" + f.kind + "'");
  }
  if (kind == Kind::Distinguishable) {
    if (f.dims.empty()) throw UsageError("--dims is required for distinguishable systems");
    return SystemSpec::distinguishable(parse_int_list(f.dims, "--dims"));
  }
  int n = f.n;
  if (n == 0 && !f.dims.empty()) {
    const auto d = parse_int_list(f.dims, "--dims");
    if (d.size() != 1) throw UsageError("--dims: bosonic and fermionic systems take a single local dimension");
    n = d[0];
  }
  if (n <= 0) throw UsageError("--n is required for bosonic and fermionic systems");
  if (f.L <= 0) throw UsageError("--L is required for bosonic and fermionic systems");
  return SystemSpec::make(kind, f.L, {n});
}

Tensor state_from_flags(const Flags& f) {
  if (!f.file.empty() && !f.state.empty()) throw UsageError("--state and --file are mutually exclusive");
  if (!f.file.empty()) return read_tensor_file(f.file);
  if (f.state.empty()) throw UsageError("--state or --file is required");
  return parse_ket(f.state, spec_from_flags(f));
}

RankOptions rank_options(const Flags& f) {
  if (f.restarts < 1) throw UsageError("--restarts must be at least 1");
  if (f.max_iters < 1) throw UsageError("--max-iters must be at least 1");
  if (!(f.tol > 0.0)) throw UsageError("--tol must be positive");
  RankOptions o;
  o.fit.restarts = f.restarts;
  o.fit.max_iters = f.max_iters;
  o.fit.seed = f.seed;
  o.rank_tol = f.tol;
  return o;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

using Handler = std::function<void(const Flags&, Json&, std::ostream&)>;

void cmd_parse(const Flags& f, Json& doc, std::ostream& log) {
  const Tensor t = state_from_flags(f);
  doc["state"] = tensor_to_json(t);
  doc["ket"] = format_ket(t);
  log << t.spec().describe() << ": " << format_ket(t) << "\n";
}

void cmd_classify(const Flags& f, Json& doc, std::ostream& log) {
  const Tensor t = state_from_flags(f);
  const auto& d = t.spec().dims();
  if (t.spec().kind() != Kind::Distinguishable || d.size() != 3 || d[0] != 2 || d[1] != 2)
    throw UsageError("classify: needs a distinguishable 2x2xN state");
  const OrbitLabel o = d[2] == 2 ? classify_three_qubit(t) : classify_22N(t);
  doc["label"] = to_string(o.label);
  doc["mlrank"] = o.mlrank;
  doc["abs_hyperdet"] = o.abs_hyperdet;
  doc["near_boundary"] = o.near_boundary;
  log << "orbit " << to_string(o.label) << " (mlrank " << join(o.mlrank) << ")"
      << (o.near_boundary ? ", near the GHZ/W boundary" : "") << "\n";
}

void cmd_rdm(const Flags& f, Json& doc, std::ostream& log) {
  const RdmSet r = rdm(ProjectiveState(state_from_flags(f)));
  Json rho = Json::array(), spectra = Json::array();
  for (std::size_t i = 0; i < r.rho.size(); ++i) {
    rho.push_back(matrix_to_json(r.rho[i]));
    spectra.push_back(vector_to_json(r.spectra[i]));
    log << "rho_" << i + 1 << " spectrum:";
    for (Eigen::Index k = 0; k < r.spectra[i].size(); ++k) log << " " << r.spectra[i][k];
    log << "\n";
  }
  doc["rho"] = std::move(rho);
  doc["spectra"] = std::move(spectra);
}

void cmd_mu_norm(const Flags& f, Json& doc, std::ostream& log) {
  const double v = mu_norm_sq(ProjectiveState(state_from_flags(f)));
  doc["mu_norm_sq"] = v;
  log << "||mu||^2 = " << v << "\n";
}

void cmd_hyperdet(const Flags& f, Json& doc, std::ostream& log) {
  const Tensor t = state_from_flags(f);
  const cd det = hyperdet_222(t);
  doc["hyperdet"] = complex_to_json(det);
  doc["abs_hyperdet_unit"] = std::abs(hyperdet_222(ProjectiveState(t).rep()));
  log << "Det = " << det.real() << (det.imag() < 0 ? " - " : " + ") << std::abs(det.imag()) << "i\n";
}

void cmd_mlrank(const Flags& f, Json& doc, std::ostream& log) {
  const auto ml = mlrank(state_from_flags(f), f.tol);
  doc["mlrank"] = ml;
  log << "multilinear rank (" << join(ml) << ")\n";
}

void cmd_rank(const Flags& f, Json& doc, std::ostream& log) {
  const Tensor t = state_from_flags(f);
  const RankReport rep = estimate_rank(t, rank_options(f));
  doc["seed"] = f.seed;
  const Json report = rank_report_to_json(t.spec(), rep);
  for (const auto& [key, value] : report.items()) doc[key] = value;
  log << "rank: lower " << rep.lower_bound << " (" << rep.lower_certificate << "), upper " << rep.upper_bound
      << (rep.upper_certified ? "" : " (not certified)") << ", border " << rep.border_estimate
      << (rep.border_certified ? "" : " (not certified)") << (rep.exceptional ? ", exceptional" : "") << "\n";
}

void cmd_border_rank(const Flags& f, Json& doc, std::ostream& log) {
  const Tensor t = state_from_flags(f);
  const RankReport rep = estimate_rank(t, rank_options(f));
  const Json full = rank_report_to_json(t.spec(), rep);
  doc["seed"] = f.seed;
  doc["border"] = rep.border_estimate;
  doc["border_certified"] = rep.border_certified;
  doc["upper"] = rep.upper_bound;
  doc["exceptional"] = rep.exceptional;
  doc["border_witness"] = full["border_witness"];
  log << "border rank estimate " << rep.border_estimate;
  const auto& bw = rep.border_witness;
  if (!bw.bounds.empty()) {
    log << "; ladder";
    for (std::size_t i = 0; i < bw.bounds.size(); ++i)
      log << " (" << bw.bounds[i] << ": " << bw.residuals[i] << ")";
  }
  log << "\n";
}

void cmd_secant_dim(const Flags& f, Json& doc, std::ostream& log) {
  const SystemSpec spec = spec_from_flags(f);
  if (f.r < 1) throw UsageError("--r is required and must be at least 1");
  const SecantMeasurement m = secant_dim(spec, f.r, f.seed, 3, f.tol);
  doc["seed"] = f.seed;
  doc["measured"] = m.measured;
  doc["expected"] = m.expected;
  doc["defect"] = m.defect;
  doc["per_seed"] = m.per_seed;
  log << "dim sigma_" << f.r << " = " << m.measured << " (expected " << m.expected << ", defect " << m.defect << ")\n";
}

void cmd_expected(const Flags& f, Json& doc, std::ostream& log) {
  const SystemSpec spec = spec_from_flags(f);
  doc["system"] = spec_to_json(spec);
  doc["ambient_dim"] = spec.ambient_dim();
  doc["coherent_dim"] = spec.coherent_dim();
  doc["expected_generic_rank"] = expected_generic_rank(spec);
  doc["spherical"] = is_spherical(spec);
  log << spec.describe() << ": N = " << spec.ambient_dim() << ", dim X = " << spec.coherent_dim()
      << ", expected generic rank " << expected_generic_rank(spec) << "\n";
  if (f.r > 0) {
    const SecantProfile p = expected_secant_dim(spec, f.r);
    Json prof{{"r", p.r}, {"expected_dim", p.expected_dim}, {"ambient_dim_minus_1", p.ambient_dim_minus_1},
              {"known_actual_dim", nullptr}, {"defective", nullptr}};
    if (p.known_actual_dim) prof["known_actual_dim"] = *p.known_actual_dim;
    if (p.defective) prof["defective"] = *p.defective;
    doc["secant"] = std::move(prof);
    log << "expected dim sigma_" << p.r << " = " << p.expected_dim << "\n";
  }
}

void cmd_waring(const Flags& f, Json& doc, std::ostream& log) {
  if (f.exponents.empty()) throw UsageError("--exponents is required (e.g. 1,3 or 1,2,0,0;0,0,1,2)");
  std::vector<Monomial> ms;
  std::stringstream ss(f.exponents);
  std::string item;
  while (std::getline(ss, item, ';')) ms.push_back(Monomial{parse_int_list(item, "--exponents")});
  Json ranks = Json::array();
  for (const auto& m : ms) ranks.push_back(monomial_rank(m));
  const std::uint64_t rank = ms.size() == 1 ? monomial_rank(ms[0]) : coprime_sum_rank(ms);
  doc["rank"] = rank;
  if (ms.size() > 1) doc["monomial_ranks"] = std::move(ranks);
  log << "Waring rank " << rank << "\n";
}

void cmd_spherical(const Flags& f, Json& doc, std::ostream& log) {
  const SystemSpec spec = spec_from_flags(f);
  doc["system"] = spec_to_json(spec);
  doc["spherical"] = is_spherical(spec);
  log << spec.describe() << (is_spherical(spec) ? " is spherical: no exceptional states\n"
                                                 : " is not spherical: exceptional states exist\n");
}

void cmd_degenerate(const Flags& f, Json& doc, std::ostream& log) {
  if (f.family.empty()) throw UsageError("--family is required (qubit3, boson or fermion36)");
  CurveFamily fam;
  try {
    fam = curve_family_from_string(f.family);
  } catch (const Error& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
  const CurveSpec c = make_curve(fam, f.n > 0 ? f.n : 3, f.L > 0 ? f.L : 3);
  const LimitCheck lc = verify_limit(c);
  doc["family"] = to_string(fam);
  doc["system"] = spec_to_json(c.spec);
  Json rows = Json::array();
  for (std::size_t i = 0; i < lc.ladder.size(); ++i) rows.push_back(Json::array({lc.ladder[i], lc.distances[i]}));
  doc["rows"] = std::move(rows);
  doc["fitted_order"] = lc.fitted_order;
  doc["strictly_decreasing"] = lc.strictly_decreasing;
  doc["start_distance_at_1"] = proj_distance(evaluate(c, 1.0), c.start);
  doc["target"] = tensor_to_json(c.target.rep());
  log << "a, distance to target\n";
  for (std::size_t i = 0; i < lc.ladder.size(); ++i) log << lc.ladder[i] << ", " << lc.distances[i] << "\n";
  log << "fitted order " << lc.fitted_order << "\n";
}

void cmd_catalog(const Flags& f, Json& doc, std::ostream& log) {
  const auto entries = exceptional_catalog(f.family.empty() ? "all" : f.family, f.n, f.L);
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back(catalog_entry_to_json(e));
    log << e.id << " [" << e.family << "] " << e.ket << ": rank " << e.rank << ", border rank " << e.border_rank << "\n";
  }
  doc["catalog"] = std::move(list);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank, border rank and entanglement invariants of quantum states"};
  app.require_subcommand(1);
  Flags flags;

  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"parse", {"Parse a state and print it in canonical form", cmd_parse}},
      {"classify", {"SLOCC class of a 2x2xN state", cmd_classify}},
      {"rdm", {"One-particle reduced density matrices", cmd_rdm}},
      {"mu-norm", {"Squared norm of the momentum map", cmd_mu_norm}},
      {"hyperdet", {"Cayley hyperdeterminant of a three-qubit state", cmd_hyperdet}},
      {"mlrank", {"Multilinear rank", cmd_mlrank}},
      {"rank", {"Rank bounds, border-rank estimate and witnesses", cmd_rank}},
      {"border-rank", {"Border-rank estimate with its ladder witness", cmd_border_rank}},
      {"secant-dim", {"Terracini measurement of a secant variety dimension", cmd_secant_dim}},
      {"expected", {"Expected dimensions and generic rank", cmd_expected}},
      {"waring", {"Waring rank of monomials and coprime sums", cmd_waring}},
      {"spherical", {"Whether the system has exceptional states", cmd_spherical}},
      {"degenerate", {"Distance ladder along a degeneration curve", cmd_degenerate}},
      {"catalog", {"Known exceptional states", cmd_catalog}},
  };
  std::map<CLI::App*, std::pair<std::string, Handler>> dispatch;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--kind", flags.kind, "distinguishable, bosonic or fermionic");
    sub->add_option("--dims", flags.dims, "comma-separated local dimensions");
    sub->add_option("--n", flags.n, "single-particle dimension (bosons, fermions)");
    sub->add_option("--L", flags.L, "particle count (bosons, fermions)");
    sub->add_option("--state", flags.state, "state in ket syntax, e.g. \"|001>+|010>+|100>\"");
    sub->add_option("--file", flags.file, "state in the canonical JSON tensor format");
    sub->add_option("--seed", flags.seed, "random seed")->capture_default_str();
    sub->add_option("--r", flags.r, "secant index");
    sub->add_option("--exponents", flags.exponents, "monomial exponents, monomials separated by ';'");
    sub->add_option("--family", flags.family, "catalog family or degeneration curve");
    sub->add_option("--tol", flags.tol, "numerical rank tolerance")->capture_default_str();
    sub->add_option("--restarts", flags.restarts, "fitting restarts per rank")->capture_default_str();
    sub->add_option("--max-iters", flags.max_iters, "iterations per fit")->capture_default_str();
    sub->add_flag("--quiet", flags.quiet, "no summary on stderr");
    dispatch[sub] = {name, entry.second};
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [name, handler] = dispatch.at(chosen);
  Json doc{{"schema", kSchema}, {"command", name}};
  std::ostringstream log;
  try {
    handler(flags, doc, log);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  out << doc.dump(2) << "\n";
  if (!flags.quiet) err << log.str();
  return kExitOk;
}

}  // namespace secanta
