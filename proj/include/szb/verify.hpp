#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szb/bounds.hpp"
#include "szb/poly.hpp"

namespace szb {

/// Sampling region: a coordinate box of the given radius, optionally
/// restricted to the open upper polydisk or to real points.
struct Region {
  double radius = 2.0;
  bool upper_half = false;
  bool real_only = false;
};

struct Witness {
  std::vector<Complex> z;
  double abs_p = 0.0;
  double bound_log = 0.0;
};

/// Outcome of a sampling sweep. A report is a pure function of its inputs and
/// seed; elapsed_seconds is informational and never serialized.
struct VerifyReport {
  long trials = 0;
  long violations = 0;
  double worst_log_margin = 0.0;  // min over samples of bound_log - log|p|
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

VerifyReport verify_bound(const MultiPoly& p, const ExpBound& b, const Region& region,
                          long samples, std::uint64_t seed, double tol = 1e-9);

struct SharpnessRow {
  int n = 0;
  double y = 0.0;
  double abs_pn = 0.0;
  double target = 0.0;  // exp(gamma y^2)
  double ratio = 0.0;
};

/// The sharpness family p_n(z) = (1 + c1 z/n)^n (1 - d_n z^2/n)^n with
/// d_n = gamma - c1^2/(2n), evaluated on the imaginary axis.
std::vector<SharpnessRow> sharpness_run(double c1, double c2, std::span<const int> n_list,
                                        std::span<const double> y_grid);

enum class LemmaSuite { Squares, Log, TracePM, SumB, ImTrace, BBsz };

const char* lemma_suite_name(LemmaSuite s);
std::optional<LemmaSuite> lemma_suite_from_name(const std::string& name);

/// Randomized trials for one inequality. inject_violation flips the
/// half-plane constraint on the sampled alphas (test hook; Squares and BBsz
/// then see hypothesis-violating data and should report violations).
VerifyReport lemma_trials(LemmaSuite which, long trials, std::uint64_t seed, int dim_max,
                          bool inject_violation = false);

struct CompareRow {
  std::vector<Complex> z;
  double log_abs_p = 0.0;
  std::vector<double> exponents;  // one per bound, same order as labels
};

struct CompareTable {
  std::vector<std::string> labels;
  std::vector<CompareRow> rows;
  std::vector<long> tightest_counts;  // ties count for every tied bound
};

CompareTable compare_bounds(const MultiPoly& p,
                            const std::vector<std::pair<std::string, ExpBound>>& bounds,
                            const std::vector<std::vector<Complex>>& z_samples);

}  // namespace szb
