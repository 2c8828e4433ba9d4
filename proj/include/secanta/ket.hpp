#pragma once

#include <string>
#include <utility>
#include <vector>

#include "secanta/tensor.hpp"

namespace secanta {

/// A parsed bra-ket expression before it is bound to a system: a list of
/// (coefficient, label) terms. Labels are digit strings, one digit per slot.
struct KetExpr {
  std::vector<std::pair<cd, std::string>> terms;
};

/// Parses expressions such as "|001> + |010> + |100>",
/// "|0>(|00>+|11>) + |1>(|01>+|22>)" or "1/sqrt(2)(|00> - i|11>)".
/// Juxtaposition of kets and parenthesized groups is the tensor product.
KetExpr parse_ket_expr(const std::string& text);

/// Binds an expression to a system. For fermions a label "abc" is
/// e_a ^ e_b ^ e_c (a permuted label picks up the permutation sign); for
/// bosons it is the symmetrized monomial with packed value equal to the
/// coefficient.
Tensor parse_ket(const std::string& text, const SystemSpec& spec);

/// Prints the nonzero packed entries in canonical order, e.g.
/// "|001> + |010> + |100>" or "0.5|00> - 0.25i|11>".
std::string format_ket(const Tensor& t);

}  // namespace secanta
