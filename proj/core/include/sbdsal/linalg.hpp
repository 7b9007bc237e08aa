#pragma once

#include <Eigen/Dense>

namespace sbdsal {

/// Result of a symmetric eigendecomposition, eigenvalues in descending order
/// with matching eigenvector columns.
struct SymmetricEigen {
  Eigen::MatrixXd vectors;  // orthonormal columns
  Eigen::VectorXd values;
};

/// Eigendecomposition of a symmetric matrix. Contract: vectors'*vectors = I
/// and vectors*diag(values)*vectors' = m, both to 1e-8 relative accuracy.
SymmetricEigen eigen_sym(const Eigen::MatrixXd& m);

}  // namespace sbdsal
