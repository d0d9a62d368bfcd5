#pragma once

#include <random>

#include "relspin/kinematics.hpp"

namespace relspin_test {

using namespace relspin;

/// Seeded momenta with |p|/m spread log-uniformly over [1e-3, max_ratio].
class RandomMomenta {
 public:
  explicit RandomMomenta(unsigned seed) : rng_(seed) {}

  Vec3 unit() {
    Vec3 v(n_(rng_), n_(rng_), n_(rng_));
    return v.normalized();
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  FourMomentum next(double max_ratio = 1e3) {
    const double m = uniform(0.5, 2.0);
    const double r = std::pow(10.0, uniform(-3.0, std::log10(max_ratio)));
    return {m, m * r * unit()};
  }

  Complex complex_normal() { return {n_(rng_), n_(rng_)}; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> n_{0.0, 1.0};
};

}  // namespace relspin_test
