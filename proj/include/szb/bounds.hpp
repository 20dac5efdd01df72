#pragma once

#include <span>
#include <vector>

#include "szb/poly.hpp"

namespace szb {

enum class NormKind { SupNorm, EuclidNorm };
enum class BoundDomain { AllComplex, RealPointsOnly };

/// Unified exponential bound certificate. Every evaluator below produces one;
/// its value in log scale at z is
///
///   lead_degree * log N(z) + log_prefactor + Re sum_j c_j z_j
///     + linear_abs * N(z) + quad * N(z)^2
///
/// with N the sup or Euclidean norm of z. The certificate is conditional:
/// it upper-bounds log|p(z)| when p satisfies the producing theorem's
/// hypotheses (stability is never tested here).
struct ExpBound {
  int lead_degree = 0;
  double log_prefactor = 0.0;
  std::vector<Complex> linear_complex;
  double linear_abs = 0.0;  // nonnegative
  double quad = 0.0;        // may be negative; still a valid certificate
  NormKind norm = NormKind::SupNorm;
  BoundDomain domain = BoundDomain::AllComplex;

  bool operator==(const ExpBound&) const = default;
};

// --- one variable, p(0) = 1 ---

/// kappa = |c1|, quad = 3(|c1|^2 + |c2|).
ExpBound szasz_original(const MultiPoly& p);

/// c = (p1), quad = (|p1|^2 - 2 Re p2) / 2. Dominates szasz_original.
ExpBound szasz_improved(const MultiPoly& p);

/// One variable with a zero of order k at 0; uses log|z|^k <= k(|z| - 1).
ExpBound szasz_1d_vanishing(const MultiPoly& p, int k);

// --- several variables, p(0) = 1 ---

/// Prefactor 2^{n-1} sqrt(2e^2-e)/(e-1), quad from the first two coefficient
/// layers; the double sum counts ordered pairs.
ExpBound bb_bound(const MultiPoly& p);

/// c = grad p(0), quad = (|sum_j p_j(0)|^2 - Re sum_jk p_jk(0)) / 2.
/// Unconditional for stable two-variable p; for n > 2 valid when p carries a
/// determinantal representation certificate.
ExpBound det_bound(const MultiPoly& p);

/// sqrt(e) prefactor corollaries in coefficient form.
ExpBound two_var_coeff_bound(const MultiPoly& p);
ExpBound nvar_coeff_bound(const MultiPoly& p);

/// kappa = sqrt(2)|grad p(0)|, quad = |grad p(0)|^2 + opnorm(Re Hp(0)).
ExpBound msz_bound(const MultiPoly& p);

/// Real points only; same data as msz_bound with the quad halved and the
/// linear term kept complex.
ExpBound real_axis_bound(const MultiPoly& p);

// --- vanishing order r at 0, via the homogeneous expansion ---

/// Two-variable certificate built from P_r, P_{r+1}, P_{r+2} at (1, 1).
ExpBound bisz2_bound(const MultiPoly& p, const HomogeneousExpansion& h);

/// n-variable certificate with the N(z)^r leading factor and the C0, C1, C2
/// constants.
ExpBound msz2_bound(const MultiPoly& p, const HomogeneousExpansion& h);

/// Log-scale value of the certificate at z. Returns -infinity when
/// lead_degree > 0 and N(z) = 0. Throws on a RealPointsOnly domain violation.
double evaluate_log(const ExpBound& b, std::span<const Complex> z);

double norm_of(NormKind kind, std::span<const Complex> z);

}  // namespace szb
