#include "secanta/linalg.hpp"

#include <algorithm>

namespace secanta {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  return Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || !(s[0] > 0.0)) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++rank;
  return rank;
}

Eigen::MatrixXcd column_basis(const Eigen::MatrixXcd& m, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  int rank = 0;
  if (s.size() > 0 && s[0] > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s[i] > tol * s[0]) ++rank;
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  int rank = 0;
  if (s.size() > 0 && s[0] > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s[i] > tol * s[0]) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

}  // namespace secanta
