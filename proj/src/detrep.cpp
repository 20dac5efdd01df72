#include "szb/detrep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "szb/errors.hpp"
#include "szb/matrix_utils.hpp"
#include "szb/rng.hpp"

namespace szb {

namespace {

Complex int_power(Complex z, int k) {
  Complex out(1.0, 0.0);
  for (int t = 0; t < k; ++t) out *= z;
  return out;
}

// columns re-orthonormalized in place (modified Gram-Schmidt, two passes)
void orthonormalize_columns(Eigen::MatrixXcd& u) {
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < u.cols(); ++j) {
      for (int k = 0; k < j; ++k) u.col(j) -= u.col(k).dot(u.col(j)) * u.col(k);
      double nm = u.col(j).norm();
      if (nm < 1e-12) throw std::runtime_error("orthonormalize_columns: rank collapse");
      u.col(j) /= nm;
    }
}

// unitary whose first s columns span the right singular directions of M with
// singular value <= cut, remaining columns the rest (order preserved inside
// each group)
Eigen::MatrixXcd split_basis_from_svd(const Eigen::MatrixXcd& m, double cut, int* null_dim) {
  const int d = static_cast<int>(m.rows());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::MatrixXcd u(d, d);
  int s = 0;
  for (int j = 0; j < d; ++j)
    if (sv(j) <= cut) u.col(s++) = svd.matrixV().col(j);
  int pos = s;
  for (int j = 0; j < d; ++j)
    if (sv(j) > cut) u.col(pos++) = svd.matrixV().col(j);
  orthonormalize_columns(u);
  *null_dim = s;
  return u;
}

}  // namespace

Complex eval_detrep(const DetRep& rep, std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != rep.nvars())
    throw std::invalid_argument("eval_detrep: point dimension mismatch");
  Eigen::MatrixXcd m = rep.A;
  for (int j = 0; j < rep.nvars(); ++j) m += z[j] * rep.B[j];
  return rep.c * Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

DetRepCheck check_detrep(const DetRep& rep, double eps) {
  DetRepCheck out;
  out.eps = eps;
  out.im_a_min_eig = min_eig_hermitian(imaginary_part(rep.A));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (const auto& b : rep.B) {
    out.b_min_eig.push_back(min_eig_hermitian(b));
    sum += b;
  }
  sum -= Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(sum));
  out.sum_b_deviation = es.eigenvalues().cwiseAbs().maxCoeff();
  out.pass = out.im_a_min_eig >= -eps && out.sum_b_deviation <= eps;
  for (double b : out.b_min_eig) out.pass = out.pass && b >= -eps;
  return out;
}

FixedSpaceSplit fixed_space_split(const Eigen::MatrixXcd& D, double tol) {
  const int d = static_cast<int>(D.rows());
  if (D.cols() != d) throw std::invalid_argument("fixed_space_split: square matrix required");
  if (operator_norm(D) > 1.0 + tol)
    throw hypothesis_error("fixed_space_split: matrix is not a contraction");

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d) - D;
  const double nm = operator_norm(m);
  FixedSpaceSplit out;
  out.U = split_basis_from_svd(m, tol * nm, &out.fixed_dim);
  const int k = d - out.fixed_dim;

  Eigen::MatrixXcd conj = out.U.adjoint() * D * out.U;
  out.K = conj.bottomRightCorner(k, k);

  const int s = out.fixed_dim;
  double corner = std::max({operator_norm(conj.topRightCorner(s, k)),
                            operator_norm(conj.bottomLeftCorner(k, s)),
                            s > 0 ? operator_norm(conj.topLeftCorner(s, s) -
                                                  Eigen::MatrixXcd::Identity(s, s))
                                  : 0.0});
  if (corner > 10.0 * std::max(tol, 1e-14) * std::max(1.0, operator_norm(D)))
    throw std::runtime_error("fixed_space_split: near-defective splitting, loosen tol");
  return out;
}

DetRep bidisk_to_halfplane(const BidiskRep& brep, double tol) {
  const int d = brep.dim();
  if (brep.D.cols() != d) throw std::invalid_argument("bidisk_to_halfplane: D must be square");
  if (brep.n < 0 || brep.m < 0 || brep.n + brep.m != d)
    throw std::invalid_argument("bidisk_to_halfplane: bidegrees must sum to the size of D");
  if (operator_norm(brep.D) > 1.0 + tol)
    throw hypothesis_error("bidisk_to_halfplane: D is not a contraction");

  FixedSpaceSplit split = fixed_space_split(brep.D, tol);
  const int s = split.fixed_dim;
  const int k = d - s;
  if (k == 0)
    throw hypothesis_error("bidisk_to_halfplane: represented polynomial is constant (D = I)");

  Eigen::MatrixXcd ik = Eigen::MatrixXcd::Identity(k, k) - split.K;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ik);
  if (svd.singularValues().minCoeff() <= 1e-14 * svd.singularValues().maxCoeff())
    throw hypothesis_error("bidisk_to_halfplane: I - K numerically singular");

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(ik);
  Eigen::MatrixXcd a = Complex(0.0, 1.0) *
                       (Eigen::MatrixXcd::Identity(k, k) + split.K) *
                       lu.solve(Eigen::MatrixXcd::Identity(k, k));

  Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(d, d);
  p1.topLeftCorner(brep.n, brep.n).setIdentity();
  Eigen::MatrixXcd p2 = Eigen::MatrixXcd::Identity(d, d) - p1;

  DetRep rep;
  rep.A = a;
  rep.B.push_back(hermitian_part((split.U.adjoint() * p1 * split.U).bottomRightCorner(k, k)));
  rep.B.push_back(hermitian_part((split.U.adjoint() * p2 * split.U).bottomRightCorner(k, k)));
  rep.c = brep.c * lu.determinant() * int_power(Complex(0.0, 2.0), s);

  DetRepCheck chk = check_detrep(rep, std::max(tol, 1e-8));
  if (!chk.pass)
    throw std::runtime_error("bidisk_to_halfplane: converted representation fails invariants");
  return rep;
}

KernelSplit kernel_split_psd_imag(const Eigen::MatrixXcd& A, double tol) {
  const int d = static_cast<int>(A.rows());
  if (A.cols() != d) throw std::invalid_argument("kernel_split_psd_imag: square matrix required");
  if (min_eig_hermitian(imaginary_part(A)) < -tol)
    throw hypothesis_error("kernel_split_psd_imag: Im A is not PSD within tolerance");

  const double nm = operator_norm(A);
  KernelSplit out;
  out.U = split_basis_from_svd(A, tol * nm, &out.kernel_dim);
  const int s = out.kernel_dim;
  const int c = d - s;

  Eigen::MatrixXcd conj = out.U.adjoint() * A * out.U;
  out.C = conj.bottomRightCorner(c, c);

  const double bound = 10.0 * std::max(tol, 1e-14) * std::max(1.0, nm);
  if (operator_norm(conj.topRightCorner(s, c)) > bound ||
      operator_norm(conj.bottomLeftCorner(c, s)) > bound ||
      (s > 0 && operator_norm(conj.topLeftCorner(s, s)) > bound))
    throw std::runtime_error("kernel_split_psd_imag: residual block too large");
  if (min_eig_hermitian(imaginary_part(out.C)) < -bound)
    throw std::runtime_error("kernel_split_psd_imag: Im C lost positivity");
  if (c > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(out.C);
    if (svd.singularValues().minCoeff() <= tol * nm)
      throw std::runtime_error("kernel_split_psd_imag: C not invertible at this tolerance");
  }
  return out;
}

MultiPoly detrep_to_poly(const DetRep& rep) {
  const int d = rep.dim();
  const int n = rep.nvars();
  if (d > 10 || n > 3)
    throw std::invalid_argument("detrep_to_poly: desk-scale limits are dim <= 10, nvars <= 3");
  if (d < 1 || n < 1) throw std::invalid_argument("detrep_to_poly: empty representation");

  // Chebyshev nodes keep the per-axis Vandermonde solves well conditioned.
  const int npts = d + 1;
  std::vector<double> nodes(npts);
  for (int t = 0; t < npts; ++t)
    nodes[t] = std::cos(std::numbers::pi * (2.0 * t + 1.0) / (2.0 * npts));

  Eigen::MatrixXcd vand(npts, npts);
  for (int r = 0; r < npts; ++r)
    for (int c = 0; c < npts; ++c) vand(r, c) = int_power(nodes[r], c);
  Eigen::PartialPivLU<Eigen::MatrixXcd> vlu(vand);

  // tensor of values, flattened with stride npts^axis
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= npts;
  std::vector<Complex> values(total);
  std::vector<Complex> z(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int j = 0; j < n; ++j) {
      z[j] = nodes[rest % npts];
      rest /= npts;
    }
    values[idx] = eval_detrep(rep, z);
  }

  // invert the Vandermonde along each axis in turn
  std::size_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    Eigen::VectorXcd fiber(npts);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % npts != 0) continue;
      for (int t = 0; t < npts; ++t) fiber(t) = values[base + stride * t];
      Eigen::VectorXcd coef = vlu.solve(fiber);
      for (int t = 0; t < npts; ++t) values[base + stride * t] = coef(t);
    }
    stride *= npts;
  }

  double biggest = 0.0;
  for (const Complex& c : values) biggest = std::max(biggest, std::abs(c));
  const double drop = 1e-10 * (1.0 + biggest);

  MultiPoly out(n);
  Exponent e(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int j = 0; j < n; ++j) {
      e[j] = static_cast<int>(rest % npts);
      rest /= npts;
    }
    if (std::abs(values[idx]) > drop) out.add_term(e, values[idx]);
  }

  // residual check at fresh points
  Rng rng(0xC0FFEEu);
  for (int t = 0; t < 20; ++t) {
    for (int j = 0; j < n; ++j) z[j] = rng.complex_in_box(1.0);
    Complex direct = eval_detrep(rep, z);
    Complex via_poly = evaluate(out, z);
    if (std::abs(direct - via_poly) > 1e-8 * (1.0 + std::abs(direct)))
      throw std::runtime_error("detrep_to_poly: interpolation residual too large");
  }
  return out;
}

TraceIdentities trace_identities(const DetRep& rep) {
  const int d = rep.dim();
  const int n = rep.nvars();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rep.A);
  if (d == 0 || svd.singularValues().minCoeff() <= 1e-12 * svd.singularValues().maxCoeff())
    throw hypothesis_error("trace_identities: A singular (p(0) = 0)");
  Complex det = Eigen::PartialPivLU<Eigen::MatrixXcd>(rep.A).determinant();
  if (std::abs(rep.c * det - 1.0) > 1e-8)
    throw hypothesis_error("trace_identities: representation not normalized to p(0) = 1");

  Eigen::MatrixXcd ainv =
      Eigen::PartialPivLU<Eigen::MatrixXcd>(rep.A).solve(Eigen::MatrixXcd::Identity(d, d));
  std::vector<Eigen::MatrixXcd> x;
  x.reserve(n);
  for (int j = 0; j < n; ++j) x.push_back(rep.B[j] * ainv);

  TraceIdentities out;
  out.hessian = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) out.gradient.push_back(x[j].trace());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out.hessian(j, k) = -(x[j] * x[k]).trace() + out.gradient[j] * out.gradient[k];
  return out;
}

}  // namespace szb
