#include "secanta/waring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace secanta {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<int> Monomial::canonical() const {
  std::vector<int> nz, out;
  for (int a : exponents)
    if (a > 0) nz.push_back(a);
  std::sort(nz.begin(), nz.end());
  out = nz;
  out.resize(exponents.size(), 0);
  return out;
}

std::uint64_t monomial_rank(const Monomial& m) {
  if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int a) { return a < 0; }))
    throw Error(ErrorCode::ZeroMonomial, "negative exponent");
  if (m.degree() == 0) throw Error(ErrorCode::ZeroMonomial, "monomial has degree 0");
  const std::vector<int> c = m.canonical();
  std::uint64_t rank = 1;
  for (std::size_t j = 1; j < c.size() && c[j] > 0; ++j) rank *= static_cast<std::uint64_t>(c[j]) + 1;
  return rank;
}

std::uint64_t coprime_sum_rank(const std::vector<Monomial>& ms) {
  if (ms.empty()) throw Error(ErrorCode::ZeroMonomial, "empty monomial list");
  const int degree = ms.front().degree();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "monomial " + std::to_string(i) + " has degree " +
                                                 std::to_string(ms[i].degree()) + ", expected " +
                                                 std::to_string(degree));
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t n = std::min(ms[i].exponents.size(), ms[j].exponents.size());
      for (std::size_t v = 0; v < n; ++v)
        if (ms[i].exponents[v] > 0 && ms[j].exponents[v] > 0)
          throw Error(ErrorCode::NotCoprime, "monomials " + std::to_string(j) + " and " + std::to_string(i) +
                                                 " share variable " + std::to_string(v));
    }
  }
  std::uint64_t total = 0;
  for (const auto& m : ms) total += monomial_rank(m);
  return total;
}

Tensor monomial_tensor(const Monomial& m, int n) {
  if (static_cast<int>(m.exponents.size()) > n)
    throw Error(ErrorCode::DimensionMismatch, "monomial has more variables than the space");
  const int degree = m.degree();
  if (degree == 0) throw Error(ErrorCode::ZeroMonomial, "monomial has degree 0");
  MultiIndex idx;
  for (std::size_t v = 0; v < m.exponents.size(); ++v)
    for (int k = 0; k < m.exponents[v]; ++k) idx.push_back(static_cast<int>(v));
  return make_tensor(SystemSpec::bosonic(n, degree), {{idx, cd(1.0)}});
}

Tensor monomial_sum_tensor(const std::vector<Monomial>& ms, int n) {
  if (ms.empty()) throw Error(ErrorCode::ZeroMonomial, "empty monomial list");
  Tensor t = monomial_tensor(ms.front(), n);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (ms[i].degree() != ms.front().degree()) throw Error(ErrorCode::DegreeMismatch, "monomials differ in degree");
    t += monomial_tensor(ms[i], n);
  }
  return t;
}

}  // namespace secanta
