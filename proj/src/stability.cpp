#include "szb/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "szb/errors.hpp"
#include "szb/matrix_utils.hpp"
#include "szb/rng.hpp"

namespace szb {

namespace {

std::vector<Complex> dense_coeffs_1d(const MultiPoly& p) {
  std::vector<Complex> c(p.total_degree() + 1, Complex(0.0, 0.0));
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return c;
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iters) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int t = 0; t < iters; ++t) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

std::vector<Complex> roots_1d(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("roots_1d: one-variable polynomial required");
  const int deg = p.total_degree();
  if (p.is_zero() || deg < 1)
    throw std::invalid_argument("roots_1d: degree >= 1 required");

  auto coeffs = dense_coeffs_1d(p);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int r = 1; r < deg; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < deg; ++r) companion(r, deg - 1) = -coeffs[r] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);

  double max_coeff = 0.0;
  for (const Complex& c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));

  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const Complex& r : roots) {
    double residual = std::abs(evaluate(p, std::vector<Complex>{r}));
    double allowed = 1e-6 * (1.0 + max_coeff) * std::pow(1.0 + std::abs(r), deg);
    if (residual > allowed) throw std::runtime_error("roots_1d: residual check failed");
  }
  return roots;
}

StabilityVerdict is_stable_1d(const MultiPoly& p, double tol) {
  if (p.nvars() != 1) throw std::invalid_argument("is_stable_1d: one-variable polynomial required");
  StabilityVerdict v;
  if (p.is_zero()) {
    v.status = Stability::Unstable;
    v.witness = std::vector<Complex>{Complex(0.0, 1.0)};
    return v;
  }
  if (p.total_degree() == 0) {
    v.status = Stability::Stable;
    v.roots = std::vector<Complex>{};
    return v;
  }
  v.roots = roots_1d(p);
  v.status = Stability::Stable;
  for (const Complex& r : *v.roots)
    if (r.imag() > tol) {
      v.status = Stability::Unstable;
      v.witness = std::vector<Complex>{r};
      break;
    }
  return v;
}

MultiPoly generate_stable_product(int nvars, int nfactors, std::uint64_t seed) {
  if (nvars < 1 || nfactors < 0)
    throw std::invalid_argument("generate_stable_product: bad arguments");
  Rng rng(seed);
  MultiPoly p = MultiPoly::constant(nvars, 1.0);
  for (int k = 0; k < nfactors; ++k) {
    MultiPoly factor = MultiPoly::constant(nvars, 1.0);
    for (int j = 0; j < nvars; ++j)
      factor += MultiPoly::variable(nvars, j) * Complex(rng.uniform(0.0, 2.0), 0.0);
    p = p * factor;
  }
  return p;
}

MultiPoly generate_stable_factored_1d(int degree, std::uint64_t seed, bool real_roots) {
  if (degree < 0) throw std::invalid_argument("generate_stable_factored_1d: bad degree");
  Rng rng(seed);
  MultiPoly p = MultiPoly::constant(1, 1.0);
  for (int k = 0; k < degree; ++k) {
    Complex alpha = real_roots ? Complex(rng.uniform(-2.0, 2.0), 0.0) : rng.lower_half(2.0);
    MultiPoly factor = MultiPoly::constant(1, 1.0);
    factor += MultiPoly::variable(1, 0) * alpha;
    p = p * factor;
  }
  return p;
}

std::pair<DetRep, MultiPoly> generate_stable_detrep(int nvars, int size, std::uint64_t seed) {
  if (nvars < 1 || size < 1) throw std::invalid_argument("generate_stable_detrep: bad arguments");
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    DetRep rep;
    rep.c = Complex(1.0, 0.0);
    rep.A = random_hermitian(rng, size) + Complex(0.0, 1.0) * random_psd(rng, size);
    try {
      rep.B = random_psd_partition(rng, size, nvars);
    } catch (const std::runtime_error&) {
      continue;
    }
    return {rep, detrep_to_poly(rep)};
  }
  throw std::runtime_error("generate_stable_detrep: exhausted retries");
}

StabilityVerdict refute_stability(const MultiPoly& p, double radius, long samples,
                                  std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("refute_stability: samples >= 1 required");
  const int n = p.nvars();
  Rng rng(seed);

  std::vector<Complex> best(n), z(n);
  double best_abs = std::numeric_limits<double>::infinity();
  for (long t = 0; t < samples; ++t) {
    for (int j = 0; j < n; ++j)
      z[j] = Complex(rng.uniform(-radius, radius), rng.open_closed(0.0, radius));
    double a = std::abs(evaluate(p, z));
    if (a < best_abs) {
      best_abs = a;
      best = z;
    }
  }

  StabilityVerdict verdict;
  if (best_abs < tol) {
    verdict.status = Stability::Unstable;
    verdict.witness = best;
    return verdict;
  }

  // Coordinate-wise golden-section refinement of the best sample, with the
  // bracket width halved after every full coordinate cycle. The imaginary
  // parts are kept well away from the boundary: stable polynomials can be
  // arbitrarily small near real zeros, and those must not count as interior
  // refutations.
  const double y_floor = 0.05 * radius;
  for (int j = 0; j < n; ++j)
    best[j] = Complex(best[j].real(), std::max(best[j].imag(), y_floor));
  for (int step = 0; step < 50; ++step) {
    const int coord = step % (2 * n);
    const int cycle = step / (2 * n);
    const int j = coord / 2;
    const bool imag_axis = (coord % 2) == 1;
    const double width = 0.5 * radius * std::pow(0.5, cycle);
    const double current = imag_axis ? best[j].imag() : best[j].real();
    const double lo = std::max(imag_axis ? y_floor : -radius, current - width);
    const double hi = std::min(radius, current + width);
    auto objective = [&](double v) {
      std::vector<Complex> probe = best;
      probe[j] = imag_axis ? Complex(probe[j].real(), v) : Complex(v, probe[j].imag());
      return std::abs(evaluate(p, probe));
    };
    double argmin = golden_section_min(objective, lo, hi, 40);
    if (objective(argmin) < objective(current)) {
      best[j] = imag_axis ? Complex(best[j].real(), argmin) : Complex(argmin, best[j].imag());
    }
  }

  if (std::abs(evaluate(p, best)) < tol) {
    verdict.status = Stability::Unstable;
    verdict.witness = best;
  } else {
    verdict.status = Stability::Unknown;
  }
  return verdict;
}

std::pair<double, double> check_reflection(const MultiPoly& p, std::span<const Complex> z) {
  const int n = p.nvars();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("check_reflection: point dimension mismatch");
  std::vector<Complex> probe(n);
  double upper = std::abs(evaluate(p, z));
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int j = 0; j < n; ++j) {
      double sign = (mask >> j) & 1u ? -1.0 : 1.0;
      probe[j] = Complex(z[j].real(), sign * z[j].imag());
    }
    best = std::max(best, std::abs(evaluate(p, probe)));
  }
  return {upper, best};
}

std::pair<double, double> check_y_monotonicity(const MultiPoly& p, std::span<const double> x,
                                               std::span<const double> y,
                                               std::span<const double> y_tilde) {
  const int n = p.nvars();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n ||
      static_cast<int>(y_tilde.size()) != n)
    throw std::invalid_argument("check_y_monotonicity: dimension mismatch");
  for (int j = 0; j < n; ++j)
    if (y[j] < 0.0 || y[j] > y_tilde[j])
      throw std::invalid_argument("check_y_monotonicity: need 0 <= y <= y_tilde componentwise");
  std::vector<Complex> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = Complex(x[j], y[j]);
    hi[j] = Complex(x[j], y_tilde[j]);
  }
  return {std::abs(evaluate(p, lo)), std::abs(evaluate(p, hi))};
}

}  // namespace szb
