#include "szb/matrix_utils.hpp"

#include <stdexcept>

namespace szb {

std::vector<Eigen::MatrixXcd> random_psd_partition(Rng& rng, int dim, int n) {
  if (dim < 1 || n < 1) throw std::invalid_argument("random_psd_partition: bad sizes");
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Eigen::MatrixXcd> g;
    g.reserve(n);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
      g.push_back(random_psd(rng, dim));
      s += g.back();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(s));
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-8 * ev.maxCoeff()) continue;  // redraw
    Eigen::MatrixXcd inv_sqrt = es.eigenvectors() *
                                ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                                es.eigenvectors().adjoint();
    std::vector<Eigen::MatrixXcd> b;
    b.reserve(n);
    for (int j = 0; j < n; ++j) b.push_back(hermitian_part(inv_sqrt * g[j] * inv_sqrt));
    return b;
  }
  throw std::runtime_error("random_psd_partition: sum stayed near singular");
}

}  // namespace szb
