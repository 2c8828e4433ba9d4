#pragma once

#include <cstdint>
#include <vector>

#include "secanta/tensor.hpp"

namespace secanta {

/// x_1^{a_1} ... x_n^{a_n}, one exponent per variable.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  /// Nonzero exponents ascending, zeros trailing.
  std::vector<int> canonical() const;
};

/// Product of (a_j + 1) over all sorted nonzero exponents but the smallest.
/// Throws ZeroMonomial for the constant monomial or negative exponents.
std::uint64_t monomial_rank(const Monomial& m);

/// Sum of the monomial ranks of pairwise coprime monomials of equal degree.
/// Throws NotCoprime or DegreeMismatch.
std::uint64_t coprime_sum_rank(const std::vector<Monomial>& ms);

/// The symmetric tensor of a monomial in n >= exponents.size() variables:
/// a single packed entry 1 at the sorted index multiset.
Tensor monomial_tensor(const Monomial& m, int n);

/// Sum of monomial tensors.
Tensor monomial_sum_tensor(const std::vector<Monomial>& ms, int n);

}  // namespace secanta
