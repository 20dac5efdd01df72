#pragma once

#include <Eigen/Dense>
#include <vector>

namespace szb {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius mass falls below tol times the
/// matrix Frobenius norm. Plenty at desk scale (n <= a few dozen).
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol = 1e-10);

/// Largest absolute eigenvalue of a real symmetric matrix (operator norm).
double sym_operator_norm(const Eigen::MatrixXd& a, double tol = 1e-10);

}  // namespace szb
