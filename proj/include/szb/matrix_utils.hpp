#pragma once

#include <Eigen/Dense>
#include <vector>

#include "szb/rng.hpp"

namespace szb {

inline Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint());
}

// (M - M*) / 2i, the positive-semidefiniteness carrier of Def-style data
inline Eigen::MatrixXcd imaginary_part(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()) / std::complex<double>(0.0, 2.0);
}

inline double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

inline double min_eig_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(m));
  return es.eigenvalues().minCoeff();
}

inline Eigen::MatrixXcd random_complex_matrix(Rng& rng, int rows, int cols, double box = 1.0) {
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.complex_in_box(box);
  return m;
}

inline Eigen::MatrixXcd random_hermitian(Rng& rng, int dim, double box = 1.0) {
  return hermitian_part(random_complex_matrix(rng, dim, dim, box));
}

inline Eigen::MatrixXcd random_psd(Rng& rng, int dim, double box = 1.0) {
  Eigen::MatrixXcd w = random_complex_matrix(rng, dim, dim, box);
  return hermitian_part(w * w.adjoint());
}

// random matrix rescaled so its operator norm is exactly norm_bound
inline Eigen::MatrixXcd random_contraction(Rng& rng, int dim, double norm_bound) {
  Eigen::MatrixXcd m = random_complex_matrix(rng, dim, dim);
  double nm = operator_norm(m);
  if (nm == 0.0) return m;
  return m * (norm_bound / nm);
}

/// PSD family B_1..B_n with sum exactly rebalanced to the identity:
/// B_j = S^{-1/2} G_j S^{-1/2}, G_j = W_j W_j^*, S = sum G_j.
/// Throws after bounded retries if S stays near singular.
std::vector<Eigen::MatrixXcd> random_psd_partition(Rng& rng, int dim, int n);

}  // namespace szb
