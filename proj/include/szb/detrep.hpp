#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "szb/poly.hpp"

namespace szb {

/// Half-plane determinantal data: p(z) = c det(A + sum_j z_j B_j) with
/// Im A >= 0, each B_j >= 0 Hermitian, and sum_j B_j = I.
struct DetRep {
  Complex c{1.0, 0.0};
  Eigen::MatrixXcd A;
  std::vector<Eigen::MatrixXcd> B;

  int dim() const { return static_cast<int>(A.rows()); }
  int nvars() const { return static_cast<int>(B.size()); }
};

/// Bidisk contraction data: q(z) = c det(I - D (z1 P1 + z2 P2)) where P1, P2
/// are the coordinate projections onto the first n and last m coordinates.
struct BidiskRep {
  Complex c{1.0, 0.0};
  Eigen::MatrixXcd D;
  int n = 0;
  int m = 0;

  int dim() const { return static_cast<int>(D.rows()); }
};

/// Measured slack of each DetRep invariant. Negative slack means violated.
struct DetRepCheck {
  double im_a_min_eig = 0.0;
  std::vector<double> b_min_eig;
  double sum_b_deviation = 0.0;  // operator norm of sum B_j - I
  double eps = 0.0;
  bool pass = false;
};

struct FixedSpaceSplit {
  Eigen::MatrixXcd U;  // unitary, first fixed_dim columns span ker(I - D)
  Eigen::MatrixXcd K;  // compression of D to the complement; 1 not an eigenvalue
  int fixed_dim = 0;
};

struct KernelSplit {
  Eigen::MatrixXcd U;  // unitary, first kernel_dim columns span ker A
  Eigen::MatrixXcd C;  // invertible block with Im C >= 0
  int kernel_dim = 0;
};

struct TraceIdentities {
  std::vector<Complex> gradient;   // tr X_j = p_j(0)
  Eigen::MatrixXcd hessian;        // -tr(X_j X_k) + tr X_j tr X_k = p_jk(0)
};

Complex eval_detrep(const DetRep& rep, std::span<const Complex> z);

DetRepCheck check_detrep(const DetRep& rep, double eps = 1e-8);

/// Splits a contraction as U* D U = diag(I_s, K) where s is the dimension of
/// the eigenvalue-1 fixed space (found as the near-null space of I - D).
FixedSpaceSplit fixed_space_split(const Eigen::MatrixXcd& D, double tol = 1e-8);

/// The bidisk-to-half-plane conversion pipeline: split off the fixed space of
/// D, set A = i (I + K)(I - K)^{-1}, compress the coordinate projections, and
/// fold det(I - K) det(2i I_s) into the constant. The result represents
/// p(z) = q(phiinv(z1), phiinv(z2)) (z1 + i)^n (z2 + i)^m.
DetRep bidisk_to_halfplane(const BidiskRep& brep, double tol = 1e-8);

/// For A with Im A >= 0, the kernel is reducing: U* A U = diag(0_s, C) with
/// C invertible and Im C >= 0.
KernelSplit kernel_split_psd_imag(const Eigen::MatrixXcd& A, double tol = 1e-8);

/// Exact coefficients by tensor-grid interpolation (desk scale: dim <= 10,
/// nvars <= 3). The result is residual-checked at fresh random points.
MultiPoly detrep_to_poly(const DetRep& rep);

/// With p(0) = 1 (so c det A = 1) and X_j = B_j A^{-1}:
/// p_j(0) = tr X_j and p_jk(0) = -tr(X_j X_k) + tr X_j tr X_k.
TraceIdentities trace_identities(const DetRep& rep);

}  // namespace szb
