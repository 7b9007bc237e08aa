#include "sbdsal/linalg.hpp"

#include <stdexcept>

namespace sbdsal {

SymmetricEigen eigen_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_sym: matrix not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_sym: eigendecomposition failed");
  SymmetricEigen out;
  // SelfAdjointEigenSolver sorts ascending; flip to descending.
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

}  // namespace sbdsal
