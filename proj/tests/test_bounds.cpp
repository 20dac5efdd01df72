#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "corpus.hpp"
#include "szb/bounds.hpp"
#include "szb/errors.hpp"
#include "szb/jacobi.hpp"
#include "szb/poly.hpp"
#include "szb/rng.hpp"
#include "szb/stability.hpp"

using szb::Complex;
using szb::ExpBound;
using szb::MultiPoly;

namespace {

const Complex I(0.0, 1.0);
const double E = std::numbers::e;

MultiPoly poly_1d(std::vector<Complex> coeffs) {
  MultiPoly p(1);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) p.add_term({k}, coeffs[k]);
  return p;
}

MultiPoly one_plus_z1_z2() {
  MultiPoly p(2);
  p.add_term({0, 0}, 1.0);
  p.add_term({1, 0}, 1.0);
  p.add_term({0, 1}, 1.0);
  p.add_term({1, 1}, 1.0);
  return p;
}

double log_bound_at(const ExpBound& b, std::vector<Complex> z) {
  return szb::evaluate_log(b, z);
}

}  // namespace

TEST_CASE("jacobi eigenvalues agree with Eigen on random symmetric matrices") {
  szb::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + rng.index(8);
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= r; ++c) m(r, c) = m(c, r) = rng.uniform(-2.0, 2.0);
    auto eig = szb::jacobi_eigenvalues(m);
    std::sort(eig.begin(), eig.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    for (int k = 0; k < n; ++k) CHECK(std::abs(eig[k] - es.eigenvalues()(k)) < 1e-9);
    CHECK(std::abs(szb::sym_operator_norm(m) -
                   es.eigenvalues().cwiseAbs().maxCoeff()) < 1e-9);
  }
}

TEST_CASE("szasz_original") {
  ExpBound b1 = szb::szasz_original(poly_1d({1.0}));
  CHECK(b1.linear_abs == 0.0);
  CHECK(b1.quad == 0.0);
  CHECK(log_bound_at(b1, {Complex(0.5, 0.5)}) == 0.0);

  ExpBound b2 = szb::szasz_original(poly_1d({1.0, 1.0}));
  CHECK(b2.linear_abs == 1.0);
  CHECK(b2.quad == 3.0);
  CHECK(log_bound_at(b2, {I}) == doctest::Approx(4.0));  // e^4 at |z| = 1

  CHECK_THROWS_AS(szb::szasz_original(poly_1d({2.0, 1.0})), szb::hypothesis_error);
}

TEST_CASE("szasz_improved: frozen hand values") {
  ExpBound trivial = szb::szasz_improved(poly_1d({1.0}));
  CHECK(trivial.quad == 0.0);
  CHECK(log_bound_at(trivial, {Complex(0.3, 0.1)}) == 0.0);

  ExpBound b = szb::szasz_improved(poly_1d({1.0, 1.0}));
  CHECK(b.linear_complex[0] == Complex(1.0, 0.0));
  CHECK(b.quad == 0.5);
  CHECK(log_bound_at(b, {I}) == doctest::Approx(0.5));
  CHECK(std::exp(log_bound_at(b, {I})) >= std::sqrt(2.0));

  // p = (1 - iz)^2 = 1 - 2i z - z^2
  ExpBound c = szb::szasz_improved(poly_1d({1.0, -2.0 * I, -1.0}));
  CHECK(c.linear_complex[0] == -2.0 * I);
  CHECK(c.quad == doctest::Approx(3.0));
  CHECK(log_bound_at(c, {I}) == doctest::Approx(5.0));
  Complex p_at_i = szb::evaluate(poly_1d({1.0, -2.0 * I, -1.0}), std::vector<Complex>{I});
  CHECK(std::abs(p_at_i) == doctest::Approx(4.0));
}

TEST_CASE("szasz_improved dominates szasz_original pointwise") {
  szb::Rng rng(32);
  for (int t = 0; t < 50; ++t) {
    MultiPoly p = szb::generate_stable_factored_1d(1 + rng.index(10), 3000 + t);
    ExpBound improved = szb::szasz_improved(p);
    ExpBound original = szb::szasz_original(p);
    for (int s = 0; s < 50; ++s) {
      std::vector<Complex> z{rng.complex_in_box(3.0)};
      CHECK(szb::evaluate_log(improved, z) <= szb::evaluate_log(original, z) + 1e-12);
    }
  }
}

TEST_CASE("szasz_1d_vanishing: equality at |z| = 1 for monomials") {
  ExpBound bz = szb::szasz_1d_vanishing(MultiPoly::monomial(1, {1}, 1.0), 1);
  CHECK(bz.log_prefactor == doctest::Approx(-1.0));
  CHECK(bz.linear_abs == 1.0);
  CHECK(log_bound_at(bz, {I}) == doctest::Approx(0.0));  // bound 1 = |z| at |z| = 1

  ExpBound bz2 = szb::szasz_1d_vanishing(MultiPoly::monomial(1, {2}, 1.0), 2);
  CHECK(log_bound_at(bz2, {I}) == doctest::Approx(0.0));
  CHECK(log_bound_at(bz2, {2.0 * I}) == doctest::Approx(2.0));  // e^{2(|z|-1)}

  // p = z(1+z): ratios read off the shifted coefficients
  MultiPoly p(1);
  p.add_term({1}, 1.0);
  p.add_term({2}, 1.0);
  ExpBound b = szb::szasz_1d_vanishing(p, 1);
  CHECK(b.linear_complex[0] == Complex(1.0, 0.0));
  CHECK(b.quad == 0.5);

  CHECK_THROWS_AS(szb::szasz_1d_vanishing(p, 0), szb::hypothesis_error);
}

TEST_CASE("szasz_1d_vanishing holds on stable z^k products") {
  szb::Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const int k = 1 + rng.index(3);
    MultiPoly base = szb::generate_stable_factored_1d(rng.index(5), 4000 + t);
    MultiPoly p = base;
    for (int s = 0; s < k; ++s) p = p * MultiPoly::variable(1, 0);
    p *= rng.complex_in_box(2.0);
    if (p.is_zero()) continue;
    ExpBound b = szb::szasz_1d_vanishing(p, k);
    for (int s = 0; s < 100; ++s) {
      std::vector<Complex> z{rng.complex_in_box(3.0)};
      double abs_p = std::abs(szb::evaluate(p, z));
      if (abs_p == 0.0) continue;
      CHECK(std::log(abs_p) <= szb::evaluate_log(b, z) + 1e-9);
    }
  }
}

TEST_CASE("bb_bound: the Borcea-Branden constants") {
  ExpBound b1 = szb::bb_bound(poly_1d({1.0}));
  CHECK(std::exp(b1.log_prefactor) == doctest::Approx(2.0210).epsilon(1e-4));
  CHECK(b1.quad == 0.0);
  CHECK(std::exp(b1.log_prefactor) >= 1.0);

  ExpBound b = szb::bb_bound(one_plus_z1_z2());
  CHECK(b.quad == doctest::Approx(24.0 * E * E + 8.0 * E * E));
  CHECK(std::exp(b.log_prefactor) == doctest::Approx(2.0 * 2.0210381290494887));
}

TEST_CASE("det_bound: frozen hand values") {
  ExpBound trivial = szb::det_bound(MultiPoly::constant(2, 1.0));
  CHECK(trivial.quad == 0.0);
  CHECK(log_bound_at(trivial, {Complex(1.0, 1.0), Complex(0.0, 0.0)}) == 0.0);

  ExpBound b = szb::det_bound(one_plus_z1_z2());
  CHECK(b.linear_complex == std::vector<Complex>{Complex(1.0, 0.0), Complex(1.0, 0.0)});
  CHECK(b.quad == doctest::Approx(1.0));
  CHECK(log_bound_at(b, {I, I}) == doctest::Approx(1.0));  // bound e at (i, i)
  CHECK(std::exp(1.0) >= 2.0);  // |p(i,i)| = 2

  MultiPoly p(2);
  p.add_term({0, 0}, 1.0);
  p.add_term({1, 0}, 1.0);
  ExpBound c = szb::det_bound(p);
  CHECK(c.linear_complex == std::vector<Complex>{Complex(1.0, 0.0), Complex(0.0, 0.0)});
  CHECK(c.quad == doctest::Approx(0.5));
}

TEST_CASE("coefficient corollaries") {
  ExpBound t2 = szb::two_var_coeff_bound(MultiPoly::constant(2, 1.0));
  CHECK(std::exp(log_bound_at(t2, {Complex(0.0), Complex(0.0)})) ==
        doctest::Approx(std::sqrt(E)));

  ExpBound b2 = szb::two_var_coeff_bound(one_plus_z1_z2());
  CHECK(b2.quad == doctest::Approx(6.0));

  ExpBound bn = szb::nvar_coeff_bound(one_plus_z1_z2());
  CHECK(bn.quad == doctest::Approx(12.0));

  CHECK_THROWS_AS(szb::two_var_coeff_bound(MultiPoly::constant(3, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("msz_bound: frozen hand values") {
  ExpBound trivial = szb::msz_bound(MultiPoly::constant(2, 1.0));
  CHECK(trivial.linear_abs == 0.0);
  CHECK(trivial.quad == 0.0);

  ExpBound b = szb::msz_bound(one_plus_z1_z2());
  CHECK(b.linear_abs == doctest::Approx(2.0));  // sqrt(2) |grad| = sqrt(2) sqrt(2)
  CHECK(b.quad == doctest::Approx(3.0));        // |grad|^2 + opnorm([[0,1],[1,0]])
  CHECK(b.norm == szb::NormKind::EuclidNorm);
}

TEST_CASE("real_axis_bound: frozen hand values and domain guard") {
  ExpBound b = szb::real_axis_bound(one_plus_z1_z2());
  CHECK(b.quad == doctest::Approx(1.5));
  CHECK(b.domain == szb::BoundDomain::RealPointsOnly);
  std::vector<Complex> x{Complex(1.0, 0.0), Complex(1.0, 0.0)};
  CHECK(szb::evaluate_log(b, x) == doctest::Approx(5.0));
  CHECK(std::exp(5.0) >= 4.0);  // |p(1,1)| = 4

  std::vector<Complex> z{I, I};
  CHECK_THROWS_AS(szb::evaluate_log(b, z), szb::hypothesis_error);
}

TEST_CASE("real_axis_bound is tighter than msz_bound on real points") {
  szb::Rng rng(34);
  for (int t = 0; t < 50; ++t) {
    MultiPoly p = szb_test::stable_normalized(2, 5000 + t);
    ExpBound real_b = szb::real_axis_bound(p);
    ExpBound msz_b = szb::msz_bound(p);
    for (int s = 0; s < 20; ++s) {
      std::vector<Complex> x{Complex(rng.uniform(-2.0, 2.0), 0.0),
                             Complex(rng.uniform(-2.0, 2.0), 0.0)};
      CHECK(szb::evaluate_log(real_b, x) <= szb::evaluate_log(msz_b, x) + 1e-9);
    }
  }
}

TEST_CASE("bisz2_bound: sharp vanishing case z1 z2") {
  MultiPoly p(2);
  p.add_term({1, 1}, 1.0);
  auto h = szb::homogeneous_parts(p);
  ExpBound b = szb::bisz2_bound(p, h);
  CHECK(b.log_prefactor == doctest::Approx(-1.0));
  // pure monomial: the linear data of the compressed representation vanishes
  CHECK(b.linear_complex == std::vector<Complex>{Complex(0.0, 0.0), Complex(0.0, 0.0)});
  CHECK(b.quad == doctest::Approx(1.0));
  CHECK(b.lead_degree == 0);

  std::vector<Complex> z{I, I};
  double log_val = szb::evaluate_log(b, z);
  CHECK(std::abs(std::exp(log_val) - 1.0) <= 1e-12);  // equality with |p(i,i)|
  CHECK(std::abs(std::abs(szb::evaluate(p, z)) - 1.0) <= 1e-15);

  // the certificate is sharp on real diagonal points as well
  std::vector<Complex> w{Complex(-1.0, 0.0), Complex(-1.0, 0.0)};
  CHECK(std::abs(std::exp(szb::evaluate_log(b, w)) - 1.0) <= 1e-12);
}

TEST_CASE("bisz2_bound: z1 (1 + z2) coefficients") {
  MultiPoly p(2);  // z1 + z1 z2, vanishing order 1
  p.add_term({1, 0}, 1.0);
  p.add_term({1, 1}, 1.0);
  auto h = szb::homogeneous_parts(p);
  ExpBound b = szb::bisz2_bound(p, h);
  CHECK(b.log_prefactor == doctest::Approx(-0.5));
  CHECK(b.linear_complex == std::vector<Complex>{Complex(0.0, 0.0), Complex(1.0, 0.0)});
  CHECK(b.quad == doctest::Approx(1.0));
}

TEST_CASE("bisz2_bound at r = 0 coincides with det_bound exactly") {
  szb::Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    MultiPoly p = szb_test::stable_normalized(2, 7000 + t);
    ExpBound via_det = szb::det_bound(p);
    ExpBound via_h = szb::bisz2_bound(p, szb::homogeneous_parts(p, 0.0));
    CHECK(via_h.lead_degree == via_det.lead_degree);
    CHECK(via_h.log_prefactor == via_det.log_prefactor);
    CHECK(via_h.linear_complex == via_det.linear_complex);
    CHECK(via_h.linear_abs == via_det.linear_abs);
    CHECK(via_h.quad == via_det.quad);
  }
}

TEST_CASE("msz2_bound: frozen hand values") {
  MultiPoly p(2);
  p.add_term({1, 1}, 1.0);
  auto h = szb::homogeneous_parts(p);
  ExpBound b = szb::msz2_bound(p, h);
  CHECK(b.lead_degree == 2);
  const double c0_expected = 2.0 * (std::numbers::ln2 - 0.25) + std::numbers::sqrt2;
  CHECK(b.log_prefactor == doctest::Approx(c0_expected));
  CHECK(b.linear_abs == 0.0);
  CHECK(b.quad == 0.0);
  std::vector<Complex> z{I, I};
  CHECK(std::exp(szb::evaluate_log(b, z)) == doctest::Approx(9.979).epsilon(1e-3));

  // r = 0 with no higher structure: certificate collapses to 1
  ExpBound trivial = szb::msz2_bound(MultiPoly::constant(2, 1.0),
                                     szb::homogeneous_parts(MultiPoly::constant(2, 1.0)));
  CHECK(trivial.lead_degree == 0);
  CHECK(trivial.log_prefactor == 0.0);
  CHECK(trivial.linear_abs == 0.0);
  CHECK(trivial.quad == 0.0);
}

TEST_CASE("necessity: real stable p has c1^2 - 2 c2 >= 0") {
  for (int t = 0; t < 200; ++t) {
    MultiPoly p = szb::generate_stable_factored_1d(2 + t % 8, 8000 + t, /*real_roots=*/true);
    Complex c1 = p.coeff({1});
    Complex c2 = p.coeff({2});
    CHECK(c1.real() * c1.real() - 2.0 * c2.real() >= -1e-12);
    ExpBound b = szb::szasz_improved(p);
    CHECK(b.quad >= -1e-12);
  }
}

TEST_CASE("validity sweep: every certificate holds on certified-stable corpora") {
  szb::Rng rng(36);
  long checked = 0;
  for (int t = 0; t < 12; ++t) {
    // 1 variable
    MultiPoly p1 = szb_test::stable_normalized(1, 9000 + t);
    ExpBound imp = szb::szasz_improved(p1);
    ExpBound orig = szb::szasz_original(p1);
    ExpBound bb1 = szb::bb_bound(p1);
    // 2 variables
    MultiPoly p2 = szb_test::stable_normalized(2, 9100 + t);
    ExpBound det2 = szb::det_bound(p2);
    ExpBound c2 = szb::two_var_coeff_bound(p2);
    ExpBound msz22 = szb::msz_bound(p2);
    ExpBound cn2 = szb::nvar_coeff_bound(p2);
    ExpBound bb2 = szb::bb_bound(p2);
    // 3 variables
    MultiPoly p3 = szb_test::stable_normalized(3, 9200 + t);
    ExpBound msz3 = szb::msz_bound(p3);
    ExpBound cn3 = szb::nvar_coeff_bound(p3);
    // vanishing corpora
    MultiPoly v2 = szb_test::stable_vanishing(2, 1 + t % 2, 9300 + t);
    ExpBound bi = szb::bisz2_bound(v2, szb::homogeneous_parts(v2));
    MultiPoly v3 = szb_test::stable_vanishing(3, 1 + t % 2, 9400 + t);
    ExpBound m2 = szb::msz2_bound(v3, szb::homogeneous_parts(v3));

    auto check_holds = [&](const MultiPoly& p, const ExpBound& b, bool real_only) {
      for (int s = 0; s < 60; ++s) {
        std::vector<Complex> z(p.nvars());
        for (int j = 0; j < p.nvars(); ++j)
          z[j] = real_only ? Complex(rng.uniform(-2.0, 2.0), 0.0) : rng.complex_in_box(2.0);
        double abs_p = std::abs(szb::evaluate(p, z));
        if (abs_p == 0.0) continue;
        CHECK(std::log(abs_p) <= szb::evaluate_log(b, z) + 1e-9);
        ++checked;
      }
    };
    check_holds(p1, imp, false);
    check_holds(p1, orig, false);
    check_holds(p1, bb1, false);
    check_holds(p2, det2, false);
    check_holds(p2, c2, false);
    check_holds(p2, msz22, false);
    check_holds(p2, cn2, false);
    check_holds(p2, bb2, false);
    check_holds(p3, msz3, false);
    check_holds(p3, cn3, false);
    check_holds(p2, szb::real_axis_bound(p2), true);
    check_holds(p3, szb::real_axis_bound(p3), true);
    check_holds(v2, bi, false);
    check_holds(v3, m2, false);
  }
  CHECK(checked > 5000);
}

TEST_CASE("det_bound n-variable path on representation-certified polynomials") {
  for (int t = 0; t < 10; ++t) {
    auto [rep, poly] = szb::generate_stable_detrep(3, 3, 9500 + t);
    MultiPoly p = szb_test::normalized(poly);
    ExpBound b = szb::det_bound(p);
    szb::Rng rng(9600 + t);
    for (int s = 0; s < 100; ++s) {
      std::vector<Complex> z{rng.complex_in_box(2.0), rng.complex_in_box(2.0),
                             rng.complex_in_box(2.0)};
      double abs_p = std::abs(szb::evaluate(p, z));
      if (abs_p == 0.0) continue;
      CHECK(std::log(abs_p) <= szb::evaluate_log(b, z) + 1e-9);
    }
  }
}

TEST_CASE("evaluate_log: norm kinds, lead degree, and the -inf marker") {
  ExpBound b;
  b.log_prefactor = 0.25;
  std::vector<Complex> zero{Complex(0.0, 0.0), Complex(0.0, 0.0)};
  CHECK(szb::evaluate_log(b, zero) == 0.25);

  ExpBound sup, euc;
  sup.quad = 1.0;
  euc.quad = 1.0;
  sup.norm = szb::NormKind::SupNorm;
  euc.norm = szb::NormKind::EuclidNorm;
  std::vector<Complex> ones{Complex(1.0, 0.0), Complex(1.0, 0.0)};
  CHECK(szb::evaluate_log(sup, ones) == doctest::Approx(1.0));
  CHECK(szb::evaluate_log(euc, ones) == doctest::Approx(2.0));

  ExpBound lead;
  lead.lead_degree = 2;
  CHECK(szb::evaluate_log(lead, zero) == -std::numeric_limits<double>::infinity());
  std::vector<Complex> pt{I, Complex(0.0, 0.0)};
  CHECK(szb::evaluate_log(lead, pt) == doctest::Approx(0.0));
}
