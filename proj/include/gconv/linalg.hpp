#pragma once

// Small dense kernels used per dual point. Both are Jacobi methods, which
// keep high relative accuracy on the tiny matrices (N, M <= 8) that the
// symbol analysis feeds them.

#include <Eigen/Dense>
#include <vector>

namespace gconv::linalg {

/// Singular values of `a` in descending order (min(rows, cols) of them),
/// by one-sided Jacobi rotations on the columns.
std::vector<double> singular_values(const Eigen::MatrixXcd& a);

/// Largest singular value; 0 for an empty matrix.
double spectral_norm(const Eigen::MatrixXcd& a);

/// Eigenvalues of the Hermitian part (h + h^*) / 2 in ascending order, by
/// cyclic two-sided Jacobi.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h);

/// ||h - h^*||_2.
double hermitian_deviation(const Eigen::MatrixXcd& h);

}  // namespace gconv::linalg
