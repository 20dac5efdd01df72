#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace szb {

using Complex = std::complex<double>;
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over complex doubles.
///
/// Terms are keyed by exponent vector in a lexicographically ordered map, so
/// iteration order (and hence evaluation and serialization) is deterministic.
/// Canonical form: no stored coefficient has magnitude <= the canonical zero
/// tolerance, and every exponent vector has length nvars().
class MultiPoly {
public:
  static constexpr double kCanonicalZeroTol = 1e-12;

  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, Complex value);
  static MultiPoly variable(int nvars, int j);  // z_j, 0-based
  static MultiPoly monomial(int nvars, Exponent exp, Complex coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // 0 for the zero polynomial by convention
  int degree_in(int j) const;
  std::pair<int, int> bidegree() const;  // (deg in z1, deg in z2), nvars == 2

  Complex coeff(const Exponent& exp) const;
  const std::map<Exponent, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Accumulates coeff onto the term; drops the entry if it cancels away.
  void add_term(const Exponent& exp, Complex coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(Complex scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly p, Complex s) { return p *= s; }
  friend MultiPoly operator*(Complex s, MultiPoly p) { return p *= s; }

  MultiPoly negate() const;

  bool operator==(const MultiPoly& rhs) const = default;

private:
  int nvars_;
  std::map<Exponent, Complex> terms_;
};

/// p split by total degree: p = sum of parts, each homogeneous.
struct HomogeneousExpansion {
  int nvars = 0;
  int vanishing_order = 0;
  std::vector<std::pair<int, MultiPoly>> parts;  // strictly increasing degrees

  const MultiPoly* part(int degree) const;
};

Complex evaluate(const MultiPoly& p, std::span<const Complex> z);

MultiPoly partial_derivative(const MultiPoly& p, int j);  // d/dz_j, 0-based

/// Entries a(e_j): the linear coefficients, equal to grad p(0).
std::vector<Complex> gradient_at_zero(const MultiPoly& p);

/// Matrix of second partials at 0: diagonal 2 a(2 e_j), off-diagonal a(e_j + e_k).
Eigen::MatrixXcd hessian_at_zero(const MultiPoly& p);

/// Groups terms by total degree. Parts whose largest coefficient magnitude is
/// at most zero_tol are dropped before the vanishing order is decided.
HomogeneousExpansion homogeneous_parts(const MultiPoly& p, double zero_tol = 1e-9);

/// (P_j(1,...,1), grad P_j(1,...,1)); (0, 0) when the degree is absent.
std::pair<Complex, std::vector<Complex>> homog_data_at_ones(const HomogeneousExpansion& h,
                                                            int degree);

/// Exact expansion of p(w1*u + w2*v) as a polynomial in (w1, w2).
MultiPoly restrict_to_plane(const MultiPoly& p, std::span<const Complex> u,
                            std::span<const Complex> v);

/// With phi(t) = i(1+t)/(1-t): q(z) = p(phi(z1), phi(z2)) ((1-z1)/2i)^n ((1-z2)/2i)^m.
/// Maps half-plane-stable p of bidegree (n, m) to bidisk-zero-free q. The
/// bidegree is taken from p itself unless allow_padded_bidegree permits a
/// larger declared (n, m).
MultiPoly cayley_substitute(const MultiPoly& p, int n, int m,
                            bool allow_padded_bidegree = false);
MultiPoly cayley_substitute(const MultiPoly& p);

/// Reverse direction: p(z) = q(phiinv(z1), phiinv(z2)) (z1+i)^n (z2+i)^m with
/// phiinv(t) = (t-i)/(t+i).
MultiPoly inverse_cayley_substitute(const MultiPoly& q, int n, int m);

}  // namespace szb
