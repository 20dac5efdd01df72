#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "szb/detrep.hpp"
#include "szb/poly.hpp"

namespace szb {

enum class Stability { Stable, Unstable, Unknown };

struct StabilityVerdict {
  Stability status = Stability::Unknown;
  // point in the open upper polydisk where |p| falls below tolerance
  std::optional<std::vector<Complex>> witness;
  // full root list in the one-variable case
  std::optional<std::vector<Complex>> roots;
};

/// All complex roots with multiplicity via the companion matrix of the monic
/// normalization. Residuals are checked against a degree-scaled bound.
std::vector<Complex> roots_1d(const MultiPoly& p);

/// Stable iff no root has imaginary part above tol. One-variable verdicts are
/// never Unknown; roots ride along on the verdict.
StabilityVerdict is_stable_1d(const MultiPoly& p, double tol = 1e-9);

/// Product of affine factors (1 + sum_j a_kj z_j) with a_kj >= 0 drawn from
/// [0, 2]. Nonnegative coefficients matter: mixed signs break stability
/// (1 + z1 - z2 already has upper-bidisk zeros). p(0) = 1 by construction.
MultiPoly generate_stable_product(int nvars, int nfactors, std::uint64_t seed);

/// One-variable product of (1 + a_j z) with Im a_j <= 0 (the factored shape of
/// every stable p with p(0) = 1). real_roots restricts to a_j real.
MultiPoly generate_stable_factored_1d(int degree, std::uint64_t seed, bool real_roots = false);

/// Random certified representation: A = R + i W W* with R Hermitian, and a
/// PSD partition for the B_j. Stability holds because Im(A + sum z_j B_j) is
/// positive definite on the open upper polydisk. Returns the representation
/// together with its expanded polynomial.
std::pair<DetRep, MultiPoly> generate_stable_detrep(int nvars, int size, std::uint64_t seed);

/// Heuristic refutation: samples the open upper polydisk box, then refines the
/// best sample by coordinate-wise golden-section steps. Returns Unstable with
/// a witness when |p| drops below tol at a clearly interior point, otherwise
/// Unknown. Never certifies stability for nvars >= 2.
StabilityVerdict refute_stability(const MultiPoly& p, double radius, long samples,
                                  std::uint64_t seed, double tol = 1e-8);

/// (|p(x+iy)|, max over all 2^n sign flips of |p(x +- iy)|). For stable p the
/// first component attains the max.
std::pair<double, double> check_reflection(const MultiPoly& p, std::span<const Complex> z);

/// (|p(x+iy)|, |p(x+iyt)|) for 0 <= y <= yt componentwise; monotone for stable p.
std::pair<double, double> check_y_monotonicity(const MultiPoly& p, std::span<const double> x,
                                               std::span<const double> y,
                                               std::span<const double> y_tilde);

}  // namespace szb
