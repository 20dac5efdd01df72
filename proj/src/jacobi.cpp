#include "szb/jacobi.hpp"

#include <cmath>

namespace szb {

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {};
  if (n == 1) return {a(0, 0)};

  const double scale = a.norm();
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    if (std::sqrt(off) <= tol * scale) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        // smaller-magnitude root of t^2 + 2 theta t - 1 = 0
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }

  std::vector<double> eig(n);
  for (int k = 0; k < n; ++k) eig[k] = a(k, k);
  return eig;
}

double sym_operator_norm(const Eigen::MatrixXd& a, double tol) {
  double out = 0.0;
  for (double e : jacobi_eigenvalues(a, tol)) out = std::max(out, std::abs(e));
  return out;
}

}  // namespace szb
