#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "corpus.hpp"
#include "szb/bounds.hpp"
#include "szb/errors.hpp"
#include "szb/io.hpp"
#include "szb/stability.hpp"
#include "szb/verify.hpp"

using szb::Complex;
using szb::ExpBound;
using szb::LemmaSuite;
using szb::MultiPoly;
using szb::Region;

namespace {

MultiPoly poly_1d(std::vector<Complex> coeffs) {
  MultiPoly p(1);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) p.add_term({k}, coeffs[k]);
  return p;
}

}  // namespace

TEST_CASE("verify_bound: trivial certificate of p = 1") {
  MultiPoly one = MultiPoly::constant(1, 1.0);
  ExpBound b = szb::szasz_improved(one);
  auto report = szb::verify_bound(one, b, Region{2.0, false, false}, 500, 42);
  CHECK(report.trials == 500);
  CHECK(report.violations == 0);
  CHECK(report.worst_log_margin == doctest::Approx(0.0));
  CHECK(!report.witness.has_value());
}

TEST_CASE("verify_bound: theorem-certified pair has no violations") {
  MultiPoly p(2);
  p.add_term({0, 0}, 1.0);
  p.add_term({1, 0}, 1.0);
  p.add_term({0, 1}, 1.0);
  p.add_term({1, 1}, 1.0);
  auto report = szb::verify_bound(p, szb::det_bound(p), Region{2.0, false, false}, 10000, 7);
  CHECK(report.violations == 0);
  CHECK(report.worst_log_margin >= -1e-9);
}

TEST_CASE("verify_bound: hypothesis-violating pair is caught") {
  // p = 1 + z^2 is not stable; its quad coefficient comes out negative and
  // the certificate fails near 2i
  MultiPoly p = poly_1d({1.0, 0.0, 1.0});
  ExpBound b = szb::szasz_improved(p);
  CHECK(b.quad == doctest::Approx(-1.0));
  auto report = szb::verify_bound(p, b, Region{3.0, false, false}, 10000, 11);
  CHECK(report.violations >= 1);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->abs_p > std::exp(report.witness->bound_log));
}

TEST_CASE("verify_bound: region/domain compatibility") {
  MultiPoly p = MultiPoly::constant(2, 1.0);
  ExpBound b = szb::real_axis_bound(p);
  CHECK_THROWS_AS(szb::verify_bound(p, b, Region{2.0, false, false}, 10, 1),
                  std::invalid_argument);
  CHECK_NOTHROW(szb::verify_bound(p, b, Region{2.0, false, true}, 10, 1));
}

TEST_CASE("verify_bound: deterministic given the seed") {
  MultiPoly p = szb_test::stable_normalized(2, 16000);
  ExpBound b = szb::msz_bound(p);
  auto r1 = szb::verify_bound(p, b, Region{2.0, true, false}, 2000, 99);
  auto r2 = szb::verify_bound(p, b, Region{2.0, true, false}, 2000, 99);
  CHECK(r1.worst_log_margin == r2.worst_log_margin);
  CHECK(r1.violations == r2.violations);

  szb::Json cfg;
  cfg["seed"] = 99;
  std::vector<szb::ReportRow> rows1{{"case", "msz", 2, r1}};
  std::vector<szb::ReportRow> rows2{{"case", "msz", 2, r2}};
  CHECK(szb::report_csv(rows1, cfg) == szb::report_csv(rows2, cfg));
}

TEST_CASE("sharpness_run: closed-form checks") {
  std::vector<int> ns{100};
  std::vector<double> ys{0.0, 1.0};
  auto rows = szb::sharpness_run(0.0, -1.0, ns, ys);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ratio == doctest::Approx(1.0));  // y = 0 is exact for every n
  CHECK(rows[1].abs_pn == doctest::Approx(std::pow(1.01, 100)));
  CHECK(rows[1].target == doctest::Approx(std::exp(1.0)));
  CHECK(rows[1].ratio == doctest::Approx(0.99504).epsilon(1e-4));

  CHECK_THROWS_AS(szb::sharpness_run(0.0, 1.0, ns, ys), szb::hypothesis_error);
}

TEST_CASE("sharpness_run: ratio increases toward 1") {
  std::vector<int> ns{10, 100, 1000};
  std::vector<double> ys{1.0};
  auto rows = szb::sharpness_run(0.0, -1.0, ns, ys);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio < rows[1].ratio);
  CHECK(rows[1].ratio < rows[2].ratio);
  CHECK(rows[2].ratio < 1.0 + 1e-12);
  CHECK(rows[2].ratio > 0.9995);
}

TEST_CASE("sharpness family members are stable polynomials") {
  for (int n : {2, 5}) {
    const double c1 = 1.0, c2 = -1.0;
    const double gamma = 0.5 * (c1 * c1 - 2.0 * c2);
    const double dn = gamma - c1 * c1 / (2.0 * n);
    MultiPoly factor1 = poly_1d({1.0, c1 / n});
    MultiPoly factor2 = poly_1d({1.0, 0.0, -dn / n});
    // the factors carry the root structure: -n/c1 and +-sqrt(n/dn), all real
    CHECK(szb::is_stable_1d(factor1).status == szb::Stability::Stable);
    CHECK(szb::is_stable_1d(factor2).status == szb::Stability::Stable);
    MultiPoly p = MultiPoly::constant(1, 1.0);
    for (int k = 0; k < n; ++k) p = p * factor1 * factor2;
    // multiplicity-n real roots split numerically by ~eps^(1/n), so the
    // expanded product can only be certified at a matching tolerance
    CHECK(szb::is_stable_1d(p, 1e-2).status == szb::Stability::Stable);
    CHECK(std::abs(p.coeff({1}) - c1) < 1e-10);
    CHECK(std::abs(p.coeff({2}) - c2) < 1e-10);
  }
}

TEST_CASE("lemma_trials: spot values from the statements") {
  // squares lemma at alpha = (-i, -i): LHS 2 <= RHS 6
  {
    Complex a(0.0, -1.0);
    double lhs = 2.0 * std::norm(a);
    Complex s1 = 2.0 * a;
    Complex s2 = a * a;
    double rhs = std::norm(s1) - 2.0 * s2.real();
    CHECK(lhs == doctest::Approx(2.0));
    CHECK(rhs == doctest::Approx(6.0));
  }
  // trace lemma at M = iI_2: LHS 2 <= RHS 6
  {
    Eigen::MatrixXcd m = Complex(0.0, 1.0) * Eigen::MatrixXcd::Identity(2, 2);
    Complex tr = m.trace();
    double lhs = (m.adjoint() * m).trace().real();
    double rhs = std::norm(tr) - (tr * tr - (m * m).trace()).real();
    CHECK(lhs == doctest::Approx(2.0));
    CHECK(rhs == doctest::Approx(6.0));
  }
}

TEST_CASE("lemma_trials: all suites clean at moderate size") {
  for (LemmaSuite s : {LemmaSuite::Squares, LemmaSuite::Log, LemmaSuite::TracePM,
                       LemmaSuite::SumB, LemmaSuite::ImTrace, LemmaSuite::BBsz}) {
    auto report = szb::lemma_trials(s, 2000, 1234, 6);
    CHECK(report.violations == 0);
    CHECK(report.trials == 2000);
  }
}

TEST_CASE("lemma_trials: constructed equality case for the squares lemma") {
  // all-real alphas give equality; the implication d = 1 or real alphas holds
  szb::Rng rng(55);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + rng.index(5);
    double lhs = 0.0;
    Complex s1(0.0, 0.0), s2(0.0, 0.0);
    std::vector<Complex> alpha(d);
    for (auto& a : alpha) a = Complex(rng.uniform(-2.0, 2.0), 0.0);
    for (int j = 0; j < d; ++j) {
      lhs += std::norm(alpha[j]);
      s1 += alpha[j];
      for (int k = j + 1; k < d; ++k) s2 += alpha[j] * alpha[k];
    }
    double rhs = std::norm(s1) - 2.0 * s2.real();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("lemma_trials: injected mixed-sign draws break the squares lemma") {
  auto report = szb::lemma_trials(LemmaSuite::Squares, 2000, 77, 6, /*inject=*/true);
  CHECK(report.violations > 0);
  REQUIRE(report.witness.has_value());
}

TEST_CASE("lemma_trials: the squares route stays below the classical route") {
  // RHS of the squares lemma <= RHS of the classical coefficient estimate
  szb::Rng rng(56);
  for (int t = 0; t < 2000; ++t) {
    const int d = 1 + rng.index(8);
    Complex s1(0.0, 0.0), s2(0.0, 0.0);
    std::vector<Complex> alpha(d);
    for (auto& a : alpha) a = rng.lower_half(2.0);
    for (int j = 0; j < d; ++j) {
      s1 += alpha[j];
      for (int k = j + 1; k < d; ++k) s2 += alpha[j] * alpha[k];
    }
    double lemma_rhs = std::norm(s1) - 2.0 * s2.real();
    double classical_rhs = 3.0 * std::norm(s1) + 2.0 * std::abs(s2);
    CHECK(lemma_rhs <= classical_rhs + 1e-9);
  }
}

TEST_CASE("compare_bounds") {
  MultiPoly p(2);
  p.add_term({0, 0}, 1.0);
  p.add_term({1, 0}, 1.0);
  p.add_term({0, 1}, 1.0);
  p.add_term({1, 1}, 1.0);
  std::vector<std::pair<std::string, ExpBound>> bounds{
      {"det", szb::det_bound(p)}, {"bb", szb::bb_bound(p)}};
  std::vector<std::vector<Complex>> samples{{Complex(0.0, 1.0), Complex(0.0, 1.0)}};
  auto table = szb::compare_bounds(p, bounds, samples);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].exponents[0] == doctest::Approx(1.0));
  CHECK(table.rows[0].exponents[1] > 100.0);  // the classical constant is enormous here
  CHECK(table.tightest_counts[0] == 1);
  CHECK(table.tightest_counts[1] == 0);

  // one variable: improved is tightest or tied against the original everywhere
  MultiPoly q = szb::generate_stable_factored_1d(6, 321);
  std::vector<std::pair<std::string, ExpBound>> one_var{
      {"improved", szb::szasz_improved(q)}, {"original", szb::szasz_original(q)}};
  szb::Rng rng(57);
  std::vector<std::vector<Complex>> pts;
  for (int s = 0; s < 100; ++s) pts.push_back({rng.complex_in_box(3.0)});
  auto t2 = szb::compare_bounds(q, one_var, pts);
  CHECK(t2.tightest_counts[0] == 100);
}
