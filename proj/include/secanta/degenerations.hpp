#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "secanta/rank_engine.hpp"
#include "secanta/tensor.hpp"

namespace secanta {

enum class CurveFamily { Qubit3, Boson, Fermion36 };

const char* to_string(CurveFamily f);
CurveFamily curve_family_from_string(const std::string& name);

/// A one-parameter family a -> A(a) = g0 A1(a) g0^{-1} acting on a rank-2
/// start state, whose orbit closes up on the exceptional state g0 * phi.
struct CurveSpec {
  CurveFamily family;
  int n;
  int L;
  SystemSpec spec;
  ProjectiveState start;
  ProjectiveState target;
  /// Coherent summands of the start state; A(a) maps them to a two-term
  /// decomposition of every curve point.
  std::vector<Tensor> start_summands;
  Eigen::MatrixXcd g0;

  /// Diagonal torus element A1(a).
  Eigen::MatrixXcd a1(cd a) const;
  /// g0 A1(a) g0^{-1}.
  Eigen::MatrixXcd matrix(cd a) const;
  /// The single-particle matrix as displayed for the family, entries in
  /// a +- 1/a. For the fermion curve the display uses 1/8 as prefactor and
  /// reaches the target as the displayed parameter grows, so
  /// 4 * printed_matrix(a) equals matrix(1/a).
  Eigen::MatrixXcd printed_matrix(cd a) const;
};

/// Qubit3: GHZ -> g0^{(x)3} W. Boson(n, L): v_1^L + (-1)^{L+1} v_n^L ->
/// g0 v_1 v_n^{L-1}, needs n >= 2 and L >= 3. Fermion36: e012 + e345 ->
/// g0 (e013 - e024 + e125). Throws BadParams.
CurveSpec make_curve(CurveFamily family, int n = 0, int L = 0);

/// Projective image of the start state under A(a). Throws ZeroParameter.
ProjectiveState evaluate(const CurveSpec& curve, cd a);

/// The two coherent summands A(a) x_1 and A(a) x_2.
std::vector<Tensor> evaluate_summands(const CurveSpec& curve, cd a);

struct LimitCheck {
  std::vector<double> ladder;
  std::vector<double> distances;
  /// Least-squares slope of log(distance) against log(a).
  double fitted_order = 0.0;
  bool strictly_decreasing = false;
};

/// 10^-1, 10^-1.5, ..., 10^-4.
std::vector<double> default_ladder();

/// Throws BadParams unless the ladder is positive and decreasing.
LimitCheck verify_limit(const CurveSpec& curve, const std::vector<double>& ladder = default_ladder());

}  // namespace secanta
