#include "szb/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "szb/errors.hpp"
#include "szb/matrix_utils.hpp"
#include "szb/rng.hpp"

namespace szb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Complex> sample_point(Rng& rng, int n, const Region& region) {
  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    if (region.real_only) {
      z[j] = Complex(rng.uniform(-region.radius, region.radius), 0.0);
    } else if (region.upper_half) {
      z[j] = Complex(rng.uniform(-region.radius, region.radius),
                     rng.open_closed(0.0, region.radius));
    } else {
      z[j] = rng.complex_in_box(region.radius);
    }
  }
  return z;
}

struct TrialResult {
  double margin = kInf;
  bool violation = false;
};

}  // namespace

VerifyReport verify_bound(const MultiPoly& p, const ExpBound& b, const Region& region,
                          long samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("verify_bound: samples >= 1 required");
  if (b.domain == BoundDomain::RealPointsOnly && !region.real_only)
    throw std::invalid_argument("verify_bound: region/domain mismatch (need real_only)");

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.trials = samples;
  report.seed = seed;
  report.worst_log_margin = kInf;

  for (long t = 0; t < samples; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    std::vector<Complex> z = sample_point(rng, p.nvars(), region);
    const double bound_log = evaluate_log(b, z);
    const double abs_p = std::abs(evaluate(p, z));
    double margin;
    if (abs_p == 0.0) {
      margin = kInf;  // 0 <= anything, even a vanished bound
    } else if (bound_log == -kInf) {
      margin = -kInf;
    } else {
      margin = bound_log - std::log(abs_p);
    }
    if (margin < report.worst_log_margin) {
      report.worst_log_margin = margin;
      if (margin < -tol) report.witness = Witness{z, abs_p, bound_log};
    }
    if (margin < -tol) ++report.violations;
  }
  if (report.violations == 0) report.witness.reset();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SharpnessRow> sharpness_run(double c1, double c2, std::span<const int> n_list,
                                        std::span<const double> y_grid) {
  const double gamma = 0.5 * (c1 * c1 - 2.0 * c2);
  if (gamma <= 0.0) throw hypothesis_error("sharpness_run: need (c1^2 - 2 c2)/2 > 0");
  std::vector<SharpnessRow> rows;
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("sharpness_run: n >= 1 required");
    const double dn = gamma - c1 * c1 / (2.0 * n);
    if (dn < 0.0) throw hypothesis_error("sharpness_run: d_n < 0; increase n");
    for (double y : y_grid) {
      // |p_n(iy)| = (1 + (c1 y / n)^2)^{n/2} (1 + d_n y^2 / n)^n
      const double f1 = 1.0 + (c1 * y / n) * (c1 * y / n);
      const double f2 = 1.0 + dn * y * y / n;
      SharpnessRow row;
      row.n = n;
      row.y = y;
      row.abs_pn = std::pow(f1, 0.5 * n) * std::pow(f2, static_cast<double>(n));
      row.target = std::exp(gamma * y * y);
      row.ratio = row.abs_pn / row.target;
      rows.push_back(row);
    }
  }
  return rows;
}

const char* lemma_suite_name(LemmaSuite s) {
  switch (s) {
    case LemmaSuite::Squares: return "squares";
    case LemmaSuite::Log: return "log";
    case LemmaSuite::TracePM: return "tracepm";
    case LemmaSuite::SumB: return "sumb";
    case LemmaSuite::ImTrace: return "imtrace";
    case LemmaSuite::BBsz: return "bbsz";
  }
  return "?";
}

std::optional<LemmaSuite> lemma_suite_from_name(const std::string& name) {
  for (LemmaSuite s : {LemmaSuite::Squares, LemmaSuite::Log, LemmaSuite::TracePM,
                       LemmaSuite::SumB, LemmaSuite::ImTrace, LemmaSuite::BBsz})
    if (name == lemma_suite_name(s)) return s;
  return std::nullopt;
}

namespace {

// one lemma trial; fills witness data on the worst margin
struct LemmaTrial {
  double lhs = 0.0;
  double rhs = 0.0;
  bool violation = false;
  std::vector<Complex> data;
};

LemmaTrial squares_trial(Rng& rng, int dim_max, bool inject, double tol) {
  const int d = 1 + rng.index(dim_max);
  std::vector<Complex> alpha(d);
  for (auto& a : alpha)
    a = inject ? rng.complex_in_box(2.0) : rng.lower_half(2.0);
  double lhs = 0.0;
  Complex s1(0.0, 0.0), s2(0.0, 0.0);
  for (int j = 0; j < d; ++j) {
    lhs += std::norm(alpha[j]);
    s1 += alpha[j];
    for (int k = j + 1; k < d; ++k) s2 += alpha[j] * alpha[k];
  }
  const double rhs = std::norm(s1) - 2.0 * s2.real();
  LemmaTrial t;
  t.lhs = lhs;
  t.rhs = rhs;
  t.data = alpha;
  t.violation = lhs > rhs + tol;
  // equality characterization: equality forces d = 1 or all-real alphas
  if (!t.violation && std::abs(lhs - rhs) <= tol && d > 1) {
    double max_im = 0.0;
    for (const auto& a : alpha) max_im = std::max(max_im, std::abs(a.imag()));
    if (max_im > 1e-7) t.violation = true;
  }
  return t;
}

LemmaTrial log_trial(Rng& rng, double tol) {
  Complex z = rng.complex_in_box(3.0);
  while (std::abs(z + 1.0) < 1e-12) z = rng.complex_in_box(3.0);
  LemmaTrial t;
  t.lhs = std::log(std::abs(1.0 + z));
  t.rhs = z.real() + 0.5 * std::norm(z);
  t.data = {z};
  t.violation = t.lhs > t.rhs + tol;
  return t;
}

LemmaTrial trace_pm_trial(Rng& rng, int dim_max, double tol) {
  const int d = 1 + rng.index(dim_max);
  Eigen::MatrixXcd m = random_complex_matrix(rng, d, d);
  Eigen::MatrixXcd p = random_psd(rng, d);
  LemmaTrial t;
  t.lhs = std::abs((m * p).trace());
  t.rhs = operator_norm(m) * p.trace().real();
  t.violation = t.lhs > t.rhs + tol;
  return t;
}

LemmaTrial sum_b_trial(Rng& rng, int dim_max, double tol) {
  const int d = 1 + rng.index(dim_max);
  const int n = 1 + rng.index(4);
  auto b = random_psd_partition(rng, d, n);
  std::vector<Complex> z(n);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  double sup = 0.0;
  for (int j = 0; j < n; ++j) {
    z[j] = rng.complex_in_box(2.0);
    sum += z[j] * b[j];
    sup = std::max(sup, std::abs(z[j]));
  }
  LemmaTrial t;
  t.lhs = operator_norm(sum);
  t.rhs = sup;
  t.data = z;
  t.violation = t.lhs > t.rhs + tol;
  return t;
}

LemmaTrial im_trace_trial(Rng& rng, int dim_max, double tol) {
  const int d = 1 + rng.index(dim_max);
  Eigen::MatrixXcd m =
      random_hermitian(rng, d) + Complex(0.0, 1.0) * random_psd(rng, d);
  const Complex tr = m.trace();
  LemmaTrial t;
  t.lhs = (m.adjoint() * m).trace().real();
  t.rhs = std::norm(tr) - (tr * tr - (m * m).trace()).real();
  t.violation = t.lhs > t.rhs + tol;
  return t;
}

LemmaTrial bbsz_trial(Rng& rng, int dim_max, bool inject, double tol) {
  const int d = 1 + rng.index(dim_max);
  std::vector<Complex> alpha(d);
  for (auto& a : alpha)
    a = inject ? rng.complex_in_box(2.0) : rng.lower_half(2.0);
  double sum_sq = 0.0;
  Complex p1(0.0, 0.0), p2(0.0, 0.0);
  for (int j = 0; j < d; ++j) {
    sum_sq += std::norm(alpha[j]);
    p1 += alpha[j];
    for (int k = j + 1; k < d; ++k) p2 += alpha[j] * alpha[k];
  }
  const double bbsz_rhs = 3.0 * std::norm(p1) + 2.0 * std::abs(p2);
  const double lemma_rhs = std::norm(p1) - 2.0 * p2.real();
  LemmaTrial t;
  t.lhs = sum_sq;
  t.rhs = bbsz_rhs;
  t.data = alpha;
  // the sharper route must stay below the classical one: this is what makes
  // the squares lemma an improvement
  t.violation = sum_sq > bbsz_rhs + tol || lemma_rhs > bbsz_rhs + tol;
  return t;
}

}  // namespace

VerifyReport lemma_trials(LemmaSuite which, long trials, std::uint64_t seed, int dim_max,
                          bool inject_violation) {
  if (trials < 1) throw std::invalid_argument("lemma_trials: trials >= 1 required");
  if (dim_max < 1) throw std::invalid_argument("lemma_trials: dim_max >= 1 required");

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.trials = trials;
  report.seed = seed;
  report.worst_log_margin = kInf;
  const double tol = 1e-9;

  for (long t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    LemmaTrial trial;
    switch (which) {
      case LemmaSuite::Squares: trial = squares_trial(rng, dim_max, inject_violation, tol); break;
      case LemmaSuite::Log: trial = log_trial(rng, tol); break;
      case LemmaSuite::TracePM: trial = trace_pm_trial(rng, dim_max, tol); break;
      case LemmaSuite::SumB: trial = sum_b_trial(rng, dim_max, tol); break;
      case LemmaSuite::ImTrace: trial = im_trace_trial(rng, dim_max, tol); break;
      case LemmaSuite::BBsz: trial = bbsz_trial(rng, dim_max, inject_violation, tol); break;
    }
    const double margin = trial.rhs - trial.lhs;
    if (margin < report.worst_log_margin) {
      report.worst_log_margin = margin;
      if (trial.violation) report.witness = Witness{trial.data, trial.lhs, trial.rhs};
    }
    if (trial.violation) ++report.violations;
  }
  if (report.violations == 0) report.witness.reset();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CompareTable compare_bounds(const MultiPoly& p,
                            const std::vector<std::pair<std::string, ExpBound>>& bounds,
                            const std::vector<std::vector<Complex>>& z_samples) {
  CompareTable table;
  for (const auto& [label, b] : bounds) table.labels.push_back(label);
  table.tightest_counts.assign(bounds.size(), 0);
  for (const auto& z : z_samples) {
    CompareRow row;
    row.z = z;
    const double abs_p = std::abs(evaluate(p, z));
    row.log_abs_p = abs_p == 0.0 ? -kInf : std::log(abs_p);
    double tightest = kInf;
    for (const auto& [label, b] : bounds) {
      row.exponents.push_back(evaluate_log(b, z));
      tightest = std::min(tightest, row.exponents.back());
    }
    for (std::size_t j = 0; j < row.exponents.size(); ++j)
      if (row.exponents[j] <= tightest + 1e-12) ++table.tightest_counts[j];
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace szb
