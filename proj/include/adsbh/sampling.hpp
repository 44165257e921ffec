#pragma once

// Deterministic samplers.  Uniform and normal deviates are built from raw
// mt19937_64 output so streams are identical across standard libraries.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "adsbh/orbits.hpp"

namespace adsbh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
};

// `count` unit vectors in R^n.  n = 1: alternating +-1; n = 2: equally spaced
// angles with a seed-dependent offset; n >= 3: an additive recurrence
// (R-sequence) pushed through Box-Muller and normalized.
std::vector<Eigen::VectorXd> sphere_directions(int n, int count, std::uint64_t seed);

// A hyperboloid point with spatial part drawn from N(0, spread^2) and a
// uniform (u,t) angle.
AdSPoint random_point(int l, Rng& rng, double spread = 1.0);

// A point on the closed AN (resp. AN-bar) orbit: y = t (resp. y = -t).
AdSPoint random_singular_point(int l, Subgroup which, Rng& rng, double spread = 1.0);

Eigen::MatrixXd random_rotation(int n, Rng& rng);

}  // namespace adsbh
