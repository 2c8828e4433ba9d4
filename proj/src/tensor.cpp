#include "secanta/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "secanta/linalg.hpp"

namespace secanta {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RepeatedFermionIndex: return "RepeatedFermionIndex";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::EmptyOrFullModeSet: return "EmptyOrFullModeSet";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficientInjection: return "RankDeficientInjection";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::LabelLengthMismatch: return "LabelLengthMismatch";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::FermionRepeatedDigit: return "FermionRepeatedDigit";
    case ErrorCode::DependentFermionVectors: return "DependentFermionVectors";
    case ErrorCode::ZeroMonomial: return "ZeroMonomial";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Distinguishable: return "distinguishable";
    case Kind::Bosonic: return "bosonic";
    case Kind::Fermionic: return "fermionic";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& name) {
  if (name == "distinguishable") return Kind::Distinguishable;
  if (name == "bosonic") return Kind::Bosonic;
  if (name == "fermionic") return Kind::Fermionic;
  throw Error(ErrorCode::InvalidSpec, "unknown kind '" + name + "'");
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::size_t>(n - k + i) / i;
  return result;
}

// ---------------------------------------------------------------------------
// SystemSpec

SystemSpec::SystemSpec(Kind kind, int particles, std::vector<int> dims)
    : kind_(kind), particles_(particles), dims_(std::move(dims)) {
  if (particles_ < 1) throw Error(ErrorCode::InvalidSpec, "particle count must be positive");
  if (dims_.empty()) throw Error(ErrorCode::InvalidSpec, "dims must be nonempty");
  for (int d : dims_)
    if (d < 1) throw Error(ErrorCode::InvalidSpec, "local dimensions must be positive");
  if (kind_ == Kind::Distinguishable) {
    if (static_cast<int>(dims_.size()) != particles_)
      throw Error(ErrorCode::InvalidSpec, "distinguishable spec needs one dimension per particle");
  } else {
    if (dims_.size() != 1)
      throw Error(ErrorCode::InvalidSpec, "bosonic/fermionic spec takes a single dimension n");
    if (kind_ == Kind::Fermionic && particles_ > dims_[0])
      throw Error(ErrorCode::InvalidSpec, "fermionic spec requires L <= n");
  }
}

SystemSpec SystemSpec::distinguishable(std::vector<int> dims) {
  const int particles = static_cast<int>(dims.size());
  return SystemSpec(Kind::Distinguishable, particles, std::move(dims));
}

SystemSpec SystemSpec::bosonic(int n, int particles) { return SystemSpec(Kind::Bosonic, particles, {n}); }

SystemSpec SystemSpec::fermionic(int n, int particles) {
  return SystemSpec(Kind::Fermionic, particles, {n});
}

SystemSpec SystemSpec::make(Kind kind, int particles, std::vector<int> dims) {
  return SystemSpec(kind, particles, std::move(dims));
}

std::size_t SystemSpec::ambient_dim() const {
  switch (kind_) {
    case Kind::Distinguishable: {
      std::size_t n = 1;
      for (int d : dims_) n *= static_cast<std::size_t>(d);
      return n;
    }
    case Kind::Bosonic: return binomial(particles_ + dims_[0] - 1, particles_);
    case Kind::Fermionic: return binomial(dims_[0], particles_);
  }
  return 0;
}

int SystemSpec::coherent_dim() const {
  switch (kind_) {
    case Kind::Distinguishable: {
      int sum = 0;
      for (int d : dims_) sum += d - 1;
      return sum;
    }
    case Kind::Bosonic: return dims_[0] - 1;
    case Kind::Fermionic: return particles_ * (dims_[0] - particles_);
  }
  return 0;
}

std::vector<int> SystemSpec::full_dims() const {
  if (kind_ == Kind::Distinguishable) return dims_;
  return std::vector<int>(static_cast<std::size_t>(particles_), dims_[0]);
}

std::string SystemSpec::describe() const {
  std::string out = to_string(kind_);
  out += " L=" + std::to_string(particles_) + " dims=[";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims_[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Packed indexing

namespace {

void gen_monotone(int n, int length, bool strict, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  int start = 0;
  if (!cur.empty()) start = cur.back() + (strict ? 1 : 0);
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    gen_monotone(n, length, strict, cur, out);
    cur.pop_back();
  }
}

// Lexicographic rank of a strictly increasing tuple drawn from [0, n).
std::size_t combination_rank(int n, const MultiIndex& c) {
  const int k = static_cast<int>(c.size());
  std::size_t rank = 0;
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    for (int v = prev + 1; v < c[j]; ++v) rank += binomial(n - 1 - v, k - 1 - j);
    prev = c[j];
  }
  return rank;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

void check_index(const SystemSpec& spec, const MultiIndex& index) {
  if (static_cast<int>(index.size()) != spec.particles())
    throw Error(ErrorCode::IndexOutOfRange, "multi-index has " + std::to_string(index.size()) +
                                                " entries, expected " + std::to_string(spec.particles()));
  for (std::size_t j = 0; j < index.size(); ++j)
    if (index[j] < 0 || index[j] >= spec.local_dim(static_cast<int>(j)))
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(index[j]) + " out of range in slot " +
                                                  std::to_string(j));
}

// Advances a row-major multi-index; returns false after the last one.
bool next_index(MultiIndex& idx, const std::vector<int>& dims) {
  for (int j = static_cast<int>(dims.size()) - 1; j >= 0; --j) {
    if (++idx[j] < dims[j]) return true;
    idx[j] = 0;
  }
  return false;
}

// Mode-j product of a row-major array with a matrix acting on that index.
Eigen::VectorXcd mode_product(const Eigen::VectorXcd& data, std::vector<int>& dims, int mode,
                              const Eigen::MatrixXcd& map) {
  std::size_t pre = 1, post = 1;
  for (int j = 0; j < mode; ++j) pre *= static_cast<std::size_t>(dims[j]);
  for (std::size_t j = mode + 1; j < dims.size(); ++j) post *= static_cast<std::size_t>(dims[j]);
  const int in_dim = dims[mode];
  const int out_dim = static_cast<int>(map.rows());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pre * out_dim * post));
  for (std::size_t p = 0; p < pre; ++p)
    for (int b = 0; b < in_dim; ++b)
      for (std::size_t q = 0; q < post; ++q) {
        const cd v = data[static_cast<Eigen::Index>((p * in_dim + b) * post + q)];
        if (v == cd(0.0)) continue;
        for (int a = 0; a < out_dim; ++a)
          out[static_cast<Eigen::Index>((p * out_dim + a) * post + q)] += map(a, b) * v;
      }
  dims[mode] = out_dim;
  return out;
}

}  // namespace

std::vector<MultiIndex> packed_indices(const SystemSpec& spec) {
  std::vector<MultiIndex> out;
  out.reserve(spec.ambient_dim());
  if (spec.kind() == Kind::Distinguishable) {
    MultiIndex idx(spec.dims().size(), 0);
    do {
      out.push_back(idx);
    } while (next_index(idx, spec.dims()));
    return out;
  }
  MultiIndex cur;
  gen_monotone(spec.dims()[0], spec.particles(), spec.kind() == Kind::Fermionic, cur, out);
  return out;
}

std::size_t packed_position(const SystemSpec& spec, const MultiIndex& canonical) {
  switch (spec.kind()) {
    case Kind::Distinguishable: {
      std::size_t pos = 0;
      for (std::size_t j = 0; j < canonical.size(); ++j)
        pos = pos * static_cast<std::size_t>(spec.dims()[j]) + static_cast<std::size_t>(canonical[j]);
      return pos;
    }
    case Kind::Bosonic: {
      MultiIndex shifted(canonical);
      for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] += static_cast<int>(j);
      return combination_rank(spec.dims()[0] + spec.particles() - 1, shifted);
    }
    case Kind::Fermionic: return combination_rank(spec.dims()[0], canonical);
  }
  return 0;
}

Eigen::VectorXd packed_weights(const SystemSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.ambient_dim());
  if (spec.kind() == Kind::Distinguishable) return Eigen::VectorXd::Ones(n);
  const double lfact = static_cast<double>(factorial(spec.particles()));
  if (spec.kind() == Kind::Fermionic) return Eigen::VectorXd::Constant(n, lfact);
  Eigen::VectorXd w(n);
  Eigen::Index pos = 0;
  for (const auto& idx : packed_indices(spec)) {
    double denom = 1.0;
    std::size_t run = 1;
    for (std::size_t j = 1; j <= idx.size(); ++j) {
      if (j < idx.size() && idx[j] == idx[j - 1]) {
        ++run;
      } else {
        denom *= static_cast<double>(factorial(static_cast<int>(run)));
        run = 1;
      }
    }
    w[pos++] = lfact / denom;
  }
  return w;
}

int canonicalize(const SystemSpec& spec, MultiIndex& index) {
  if (spec.kind() == Kind::Distinguishable) return 1;
  int sign = 1;
  for (std::size_t i = 1; i < index.size(); ++i)
    for (std::size_t j = i; j > 0 && index[j - 1] > index[j]; --j) {
      std::swap(index[j - 1], index[j]);
      sign = -sign;
    }
  if (spec.kind() == Kind::Fermionic)
    for (std::size_t j = 1; j < index.size(); ++j)
      if (index[j] == index[j - 1]) return 0;
  return spec.kind() == Kind::Fermionic ? sign : 1;
}

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(SystemSpec spec, Eigen::VectorXcd entries) : spec_(std::move(spec)), entries_(std::move(entries)) {
  if (static_cast<std::size_t>(entries_.size()) != spec_.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(entries_.size()) +
                                                  " does not match ambient dimension of " + spec_.describe());
}

Tensor Tensor::zeros(const SystemSpec& spec) {
  return Tensor(spec, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(spec.ambient_dim())));
}

cd Tensor::at(const MultiIndex& index) const {
  check_index(spec_, index);
  MultiIndex canonical(index);
  const int sign = canonicalize(spec_, canonical);
  if (sign == 0) return 0.0;
  return static_cast<double>(sign) * entries_[static_cast<Eigen::Index>(packed_position(spec_, canonical))];
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (!(spec_ == other.spec_)) throw Error(ErrorCode::SpecMismatch, "adding tensors of different specs");
  entries_ += other.entries_;
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (!(spec_ == other.spec_)) throw Error(ErrorCode::SpecMismatch, "subtracting tensors of different specs");
  entries_ -= other.entries_;
  return *this;
}

Tensor& Tensor::operator*=(cd scale) {
  entries_ *= scale;
  return *this;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
Tensor operator*(cd scale, Tensor t) { return t *= scale; }

cd inner(const Tensor& a, const Tensor& b) {
  if (!(a.spec() == b.spec())) throw Error(ErrorCode::SpecMismatch, "inner product of different specs");
  if (a.spec().kind() == Kind::Distinguishable) return a.entries().dot(b.entries());
  const Eigen::VectorXd w = packed_weights(a.spec());
  cd sum = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) sum += w[i] * std::conj(a.entries()[i]) * b.entries()[i];
  return sum;
}

double norm(const Tensor& t) { return std::sqrt(std::max(0.0, inner(t, t).real())); }

Tensor make_tensor(const SystemSpec& spec, const SparseEntries& entries) {
  Tensor out = Tensor::zeros(spec);
  Eigen::VectorXcd data = out.entries();
  for (const auto& [index, value] : entries) {
    check_index(spec, index);
    MultiIndex canonical(index);
    const int sign = canonicalize(spec, canonical);
    if (sign == 0) throw Error(ErrorCode::RepeatedFermionIndex, "fermionic multi-index repeats a slot");
    data[static_cast<Eigen::Index>(packed_position(spec, canonical))] += static_cast<double>(sign) * value;
  }
  if (data.isZero(0.0)) throw Error(ErrorCode::AllZero, "tensor has no nonzero entry");
  return Tensor(spec, std::move(data));
}

Tensor expand_full(const Tensor& t) {
  const SystemSpec& spec = t.spec();
  if (spec.kind() == Kind::Distinguishable) return t;
  const SystemSpec full = spec.full_spec();
  Eigen::VectorXcd data(static_cast<Eigen::Index>(full.ambient_dim()));
  MultiIndex idx(full.dims().size(), 0);
  Eigen::Index pos = 0;
  do {
    data[pos++] = t.at(idx);
  } while (next_index(idx, full.dims()));
  return Tensor(full, std::move(data));
}

Tensor pack_full(const Tensor& full, Kind kind) {
  if (full.spec().kind() != Kind::Distinguishable)
    throw Error(ErrorCode::SpecMismatch, "pack_full expects a full (distinguishable) array");
  if (kind == Kind::Distinguishable) return full;
  const auto& dims = full.spec().dims();
  for (int d : dims)
    if (d != dims[0]) throw Error(ErrorCode::SpecMismatch, "pack_full needs equal local dimensions");
  const SystemSpec target = SystemSpec::make(kind, static_cast<int>(dims.size()), {dims[0]});
  const auto indices = packed_indices(target);
  Eigen::VectorXcd data(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) data[static_cast<Eigen::Index>(i)] = full.at(indices[i]);
  return Tensor(target, std::move(data));
}

Eigen::MatrixXcd flatten(const Tensor& t, const std::vector<int>& modes) {
  const int particles = t.spec().particles();
  std::vector<int> rows(modes);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.empty() || static_cast<int>(rows.size()) >= particles)
    throw Error(ErrorCode::EmptyOrFullModeSet, "flattening needs a nonempty proper subset of modes");
  for (int m : rows)
    if (m < 0 || m >= particles) throw Error(ErrorCode::IndexOutOfRange, "mode out of range");

  const Tensor full = expand_full(t);
  const auto& dims = full.spec().dims();
  std::vector<bool> is_row(static_cast<std::size_t>(particles), false);
  for (int m : rows) is_row[static_cast<std::size_t>(m)] = true;
  Eigen::Index nrows = 1, ncols = 1;
  for (int j = 0; j < particles; ++j) (is_row[j] ? nrows : ncols) *= dims[j];

  Eigen::MatrixXcd out(nrows, ncols);
  MultiIndex idx(dims.size(), 0);
  Eigen::Index pos = 0;
  do {
    Eigen::Index r = 0, c = 0;
    for (int j = 0; j < particles; ++j) {
      if (is_row[j])
        r = r * dims[j] + idx[j];
      else
        c = c * dims[j] + idx[j];
    }
    out(r, c) = full.entries()[pos++];
  } while (next_index(idx, dims));
  return out;
}

Tensor apply_local(const Tensor& t, const std::vector<Eigen::MatrixXcd>& maps) {
  const SystemSpec& spec = t.spec();
  const int particles = spec.particles();
  if (spec.kind() == Kind::Distinguishable) {
    if (static_cast<int>(maps.size()) != particles)
      throw Error(ErrorCode::DimensionMismatch, "need one local map per factor");
  } else if (maps.size() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "symmetric kinds take a single-particle map");
  }
  std::vector<int> dims = spec.full_dims();
  Eigen::VectorXcd data = expand_full(t).entries();
  for (int j = 0; j < particles; ++j) {
    const auto& map = spec.kind() == Kind::Distinguishable ? maps[static_cast<std::size_t>(j)] : maps[0];
    if (map.cols() != dims[j]) throw Error(ErrorCode::DimensionMismatch, "local map has wrong column count");
    data = mode_product(data, dims, j, map);
  }
  Tensor full(SystemSpec::distinguishable(dims), std::move(data));
  return pack_full(full, spec.kind());
}

Tensor embed(const Tensor& t, const SystemSpec& target_spec, const std::vector<Eigen::MatrixXcd>& injections) {
  const SystemSpec& spec = t.spec();
  if (spec.kind() != target_spec.kind() || spec.particles() != target_spec.particles())
    throw Error(ErrorCode::SpecMismatch, "embedding must keep kind and particle count");
  const std::size_t expected = spec.kind() == Kind::Distinguishable ? static_cast<std::size_t>(spec.particles()) : 1;
  if (injections.size() != expected) throw Error(ErrorCode::DimensionMismatch, "wrong number of injections");
  for (std::size_t j = 0; j < injections.size(); ++j) {
    const auto& m = injections[j];
    const int jj = static_cast<int>(j);
    if (m.cols() != spec.local_dim(jj) || m.rows() != target_spec.local_dim(jj))
      throw Error(ErrorCode::DimensionMismatch, "injection " + std::to_string(j) + " has shape " +
                                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (numerical_rank(m, 1e-10) < static_cast<int>(m.cols()))
      throw Error(ErrorCode::RankDeficientInjection, "injection " + std::to_string(j) + " is not injective");
  }
  return apply_local(t, injections);
}

// ---------------------------------------------------------------------------
// ProjectiveState

namespace {

Tensor normalized(const Tensor& t) {
  const double n = norm(t);
  if (!(n > 0.0)) throw Error(ErrorCode::AllZero, "the zero vector is not a state");
  Eigen::VectorXcd data = t.entries() / n;
  const double cutoff = 1e-12 * data.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    const double mag = std::abs(data[i]);
    if (mag > cutoff) {
      data *= std::conj(data[i]) / mag;
      data[i] = mag;
      break;
    }
  }
  return Tensor(t.spec(), std::move(data));
}

double one_sided_distance(const Tensor& a, const Tensor& b) {
  const cd overlap = inner(b, a);
  return std::min(1.0, norm(a - overlap * b));
}

}  // namespace

ProjectiveState::ProjectiveState(const Tensor& t) : rep_(normalized(t)) {}

double proj_distance(const ProjectiveState& a, const ProjectiveState& b) {
  if (!(a.spec() == b.spec())) throw Error(ErrorCode::SpecMismatch, "distance between different specs");
  return 0.5 * (one_sided_distance(a.rep(), b.rep()) + one_sided_distance(b.rep(), a.rep()));
}

}  // namespace secanta
