#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "fsz/class_operator.hpp"

namespace fsz::test {

/// Deterministic generator for property-style tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  cplx in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  cplx on_annulus(double r_lo, double r_hi) {
    return std::polar(uniform(r_lo, r_hi),
                      uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// Uniform-ish draw from {(c1,c2): |c1|<=1, |c2|<=1-|c1|^2}.
  SchwarzPair feasible_pair() {
    const double r1 = uniform(0.0, 1.0);
    const cplx c1 = std::polar(r1, uniform(0.0, 2.0 * std::numbers::pi));
    const double cap = 1.0 - r1 * r1;
    const cplx c2 = std::polar(uniform(0.0, cap),
                               uniform(0.0, 2.0 * std::numbers::pi));
    return {c1, c2};
  }

  ClassParams valid_params() {
    ClassParams p;
    p.lambda = uniform(0.0, 1.0);
    p.gamma = on_annulus(0.2, 2.5);
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline double cdist(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace fsz::test
