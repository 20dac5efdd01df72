#include "szb/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "szb/errors.hpp"
#include "szb/jacobi.hpp"

namespace szb {

namespace {

constexpr double kNormalizationTol = 1e-10;

void require_normalized(const MultiPoly& p) {
  Exponent zero(p.nvars(), 0);
  if (std::abs(p.coeff(zero) - 1.0) > kNormalizationTol)
    throw hypothesis_error("bound requires p(0) = 1");
}

Complex coeff_1d(const MultiPoly& p, int k) { return p.coeff(Exponent{k}); }

// sum_j |a(e_j)| in index order
double linear_abs_sum(const MultiPoly& p) {
  double s = 0.0;
  Exponent e(p.nvars(), 0);
  for (int j = 0; j < p.nvars(); ++j) {
    e[j] = 1;
    s += std::abs(p.coeff(e));
    e[j] = 0;
  }
  return s;
}

// a(e_j + e_k) for the ordered pair (j, k); diagonal entries read a(2 e_j)
Complex pair_coeff(const MultiPoly& p, int j, int k) {
  Exponent e(p.nvars(), 0);
  e[j] += 1;
  e[k] += 1;
  return p.coeff(e);
}

double grad_euclid_norm(const std::vector<Complex>& g) {
  double s = 0.0;
  for (const Complex& c : g) s += std::norm(c);
  return std::sqrt(s);
}

double real_hessian_op_norm(const MultiPoly& p) {
  Eigen::MatrixXcd h = hessian_at_zero(p);
  return sym_operator_norm(h.real());
}

double l1_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::abs(c);
  return s;
}

}  // namespace

ExpBound szasz_original(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("szasz_original: one variable required");
  require_normalized(p);
  const double c1 = std::abs(coeff_1d(p, 1));
  const double c2 = std::abs(coeff_1d(p, 2));
  ExpBound b;
  b.linear_abs = c1;
  b.quad = 3.0 * (c1 * c1 + c2);
  b.linear_complex.assign(1, Complex(0.0, 0.0));
  b.norm = NormKind::EuclidNorm;
  return b;
}

ExpBound szasz_improved(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("szasz_improved: one variable required");
  require_normalized(p);
  const Complex p1 = coeff_1d(p, 1);
  const Complex p2 = coeff_1d(p, 2);
  ExpBound b;
  b.linear_complex.assign(1, p1);
  b.quad = 0.5 * (std::norm(p1) - 2.0 * p2.real());
  b.norm = NormKind::EuclidNorm;
  return b;
}

ExpBound szasz_1d_vanishing(const MultiPoly& p, int k) {
  if (p.nvars() != 1) throw std::invalid_argument("szasz_1d_vanishing: one variable required");
  if (k < 0) throw std::invalid_argument("szasz_1d_vanishing: negative order");
  const Complex pk = coeff_1d(p, k);
  if (std::abs(pk) == 0.0)
    throw hypothesis_error("szasz_1d_vanishing: leading coefficient vanishes at declared order");
  const Complex r1 = coeff_1d(p, k + 1) / pk;
  const Complex r2 = coeff_1d(p, k + 2) / pk;
  ExpBound b;
  b.log_prefactor = std::log(std::abs(pk)) - static_cast<double>(k);
  b.linear_abs = static_cast<double>(k);
  b.linear_complex.assign(1, r1);
  b.quad = 0.5 * (std::norm(r1) - 2.0 * r2.real());
  b.norm = NormKind::EuclidNorm;
  return b;
}

ExpBound bb_bound(const MultiPoly& p) {
  require_normalized(p);
  const int n = p.nvars();
  const double e = std::numbers::e;
  const double prefactor =
      std::pow(2.0, n - 1) * std::sqrt(2.0 * e * e - e) / (e - 1.0);
  double pair_abs = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) pair_abs += std::abs(pair_coeff(p, j, k));
  const double lin = linear_abs_sum(p);
  ExpBound b;
  b.log_prefactor = std::log(prefactor);
  b.quad = 6.0 * e * e * lin * lin + 4.0 * e * e * pair_abs;
  b.linear_complex.assign(n, Complex(0.0, 0.0));
  b.norm = NormKind::SupNorm;
  return b;
}

ExpBound det_bound(const MultiPoly& p) {
  require_normalized(p);
  // Built from the degree-1 and degree-2 homogeneous sums so that the r = 0
  // vanishing-order certificate collapses onto this one bit for bit.
  HomogeneousExpansion h = homogeneous_parts(p, 0.0);
  const Complex s1 = homog_data_at_ones(h, 1).first;
  const Complex s2 = homog_data_at_ones(h, 2).first;
  ExpBound b;
  b.linear_complex = gradient_at_zero(p);
  b.quad = 0.5 * (std::norm(s1) - 2.0 * s2.real());
  b.norm = NormKind::SupNorm;
  return b;
}

ExpBound two_var_coeff_bound(const MultiPoly& p) {
  if (p.nvars() != 2) throw std::invalid_argument("two_var_coeff_bound: two variables required");
  require_normalized(p);
  double pair_re = 0.0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) pair_re += std::abs(pair_coeff(p, j, k).real());
  const double lin = linear_abs_sum(p);
  ExpBound b;
  b.log_prefactor = 0.5;
  b.quad = lin * lin + pair_re;
  b.linear_complex.assign(2, Complex(0.0, 0.0));
  b.norm = NormKind::SupNorm;
  return b;
}

ExpBound nvar_coeff_bound(const MultiPoly& p) {
  require_normalized(p);
  const int n = p.nvars();
  double pair_re = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) pair_re += std::abs(pair_coeff(p, j, k).real());
  const double lin = linear_abs_sum(p);
  ExpBound b;
  b.log_prefactor = 0.5;
  b.quad = 2.0 * lin * lin + 2.0 * pair_re;
  b.linear_complex.assign(n, Complex(0.0, 0.0));
  b.norm = NormKind::SupNorm;
  return b;
}

ExpBound msz_bound(const MultiPoly& p) {
  require_normalized(p);
  auto g = gradient_at_zero(p);
  const double gn = grad_euclid_norm(g);
  ExpBound b;
  b.linear_abs = std::numbers::sqrt2 * gn;
  b.quad = gn * gn + real_hessian_op_norm(p);
  b.linear_complex.assign(p.nvars(), Complex(0.0, 0.0));
  b.norm = NormKind::EuclidNorm;
  return b;
}

ExpBound real_axis_bound(const MultiPoly& p) {
  require_normalized(p);
  auto g = gradient_at_zero(p);
  const double gn = grad_euclid_norm(g);
  ExpBound b;
  b.linear_complex = std::move(g);
  b.quad = 0.5 * (gn * gn + real_hessian_op_norm(p));
  b.norm = NormKind::EuclidNorm;
  b.domain = BoundDomain::RealPointsOnly;
  return b;
}

ExpBound bisz2_bound(const MultiPoly& p, const HomogeneousExpansion& h) {
  if (p.nvars() != 2) throw std::invalid_argument("bisz2_bound: two variables required");
  const int r = h.vanishing_order;
  auto [pr, grad_pr] = homog_data_at_ones(h, r);
  auto [pr1, grad_pr1] = homog_data_at_ones(h, r + 1);
  auto [pr2, grad_pr2] = homog_data_at_ones(h, r + 2);

  double biggest = 0.0;
  for (const auto& [d, part] : h.parts)
    for (const auto& [e, c] : part.terms()) biggest = std::max(biggest, std::abs(c));
  if (std::abs(pr) <= 1e-12 * biggest)
    throw hypothesis_error("bisz2_bound: P_r(1,1) vanishes; certificate undefined");

  const Complex ratio1 = pr1 / pr;
  const Complex ratio2 = pr2 / pr;
  ExpBound b;
  b.log_prefactor = std::log(std::abs(pr)) - 0.5 * static_cast<double>(r);
  b.linear_complex.resize(2);
  // The linear coefficient is tr(J X_j) of the compressed representation,
  // which works out to (grad P_{r+1} - ratio * grad P_r) / P_r; the version
  // with an extra grad P_r / P_r term fails already for z1 z2 at (-1, -1).
  for (int j = 0; j < 2; ++j)
    b.linear_complex[j] = (grad_pr1[j] - ratio1 * grad_pr[j]) / pr;
  b.quad = 0.5 * (std::norm(ratio1) - 2.0 * ratio2.real() + static_cast<double>(r));
  b.norm = NormKind::SupNorm;
  return b;
}

ExpBound msz2_bound(const MultiPoly& p, const HomogeneousExpansion& h) {
  const int n = p.nvars();
  const int r = h.vanishing_order;
  auto [pr, grad_pr] = homog_data_at_ones(h, r);
  auto [pr1, grad_pr1] = homog_data_at_ones(h, r + 1);
  auto [pr2, grad_pr2] = homog_data_at_ones(h, r + 2);

  double biggest = 0.0;
  for (const auto& [d, part] : h.parts)
    for (const auto& [e, c] : part.terms()) biggest = std::max(biggest, std::abs(c));
  if (std::abs(pr) <= 1e-12 * biggest)
    throw hypothesis_error("msz2_bound: P_r(1,...,1) vanishes; certificate undefined");

  const double abs_pr = std::abs(pr);
  const Complex ratio1 = pr1 / pr;
  const Complex ratio2 = pr2 / pr;
  const double g1 = l1_norm(grad_pr);
  const double g2 = l1_norm(grad_pr1);

  const double c0 = static_cast<double>(r) * (std::numbers::ln2 - 0.25) +
                    g1 / (std::numbers::sqrt2 * abs_pr);
  const double c1 = std::numbers::sqrt2 / abs_pr * (g1 * std::abs(ratio1) + g2);
  const double c2 = std::norm(ratio1) - 2.0 * ratio2.real();

  ExpBound b;
  b.lead_degree = r;
  b.log_prefactor = std::log(abs_pr) + c0;
  b.linear_abs = c1;
  b.quad = c2;
  b.linear_complex.assign(n, Complex(0.0, 0.0));
  b.norm = NormKind::SupNorm;
  return b;
}

double norm_of(NormKind kind, std::span<const Complex> z) {
  if (kind == NormKind::SupNorm) {
    double s = 0.0;
    for (const Complex& c : z) s = std::max(s, std::abs(c));
    return s;
  }
  double s = 0.0;
  for (const Complex& c : z) s += std::norm(c);
  return std::sqrt(s);
}

double evaluate_log(const ExpBound& b, std::span<const Complex> z) {
  if (b.domain == BoundDomain::RealPointsOnly)
    for (const Complex& c : z)
      if (std::abs(c.imag()) > 1e-12)
        throw hypothesis_error("evaluate_log: certificate is valid on real points only");
  if (!b.linear_complex.empty() && b.linear_complex.size() != z.size())
    throw std::invalid_argument("evaluate_log: point dimension mismatch");

  const double nz = norm_of(b.norm, z);
  double value = b.log_prefactor + b.linear_abs * nz + b.quad * nz * nz;
  for (std::size_t j = 0; j < b.linear_complex.size(); ++j)
    value += (b.linear_complex[j] * z[j]).real();
  if (b.lead_degree > 0) {
    if (nz == 0.0) return -std::numeric_limits<double>::infinity();
    value += static_cast<double>(b.lead_degree) * std::log(nz);
  }
  return value;
}

}  // namespace szb
