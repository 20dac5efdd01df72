#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace szb {

// Deterministic uniform sampler. Doubles are derived from raw mt19937_64
// words instead of std::uniform_real_distribution so that streams are
// reproducible across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform in (lo, hi]
  double open_closed(double lo, double hi) { return hi - (hi - lo) * unit(); }

  // uniform index in {0, ..., n-1}
  int index(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  std::complex<double> complex_in_box(double r) {
    double re = uniform(-r, r);
    double im = uniform(-r, r);
    return {re, im};
  }

  // Im <= 0, the half plane the one-variable root factors live in
  std::complex<double> lower_half(double r) {
    double re = uniform(-r, r);
    double im = uniform(-r, 0.0);
    return {re, im};
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace szb
