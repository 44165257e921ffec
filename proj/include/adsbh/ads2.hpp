#pragma once

// AdS_2 as the adjoint orbit Ad(G)H in sl2(R), with the singular lines
// +-H + lambda E (closed AN orbits) and +-H + lambda F (closed AN-bar orbits).

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "adsbh/orbits.hpp"

namespace adsbh {

struct AdjointPoint {
  double xH = 0, xE = 0, xF = 0;

  Eigen::Vector3d vec() const { return {xH, xE, xF}; }
  Eigen::Matrix2d matrix() const;
  static AdjointPoint from_matrix(const Eigen::Matrix2d& m);
};

// B(x, x) = 8 (xH^2 + xE xF); equals 8 on the orbit.
double killing_norm(const AdjointPoint& x);

// The 2-form X* ^ H* with X = E (AN) or X = F (AN-bar), components (HE, HF, EF).
Eigen::Vector3d closed_orbit_wedge(const AdjointPoint& x, Subgroup which);

bool ads2_closed_orbit(const AdjointPoint& x, Subgroup which, double tol = 1e-9);

// cos(beta) H + sin(beta) (e^{2a} E + e^{-2a} F), beta in (0, pi).
AdjointPoint physical_point(double a, double beta);

struct PhysicalParams {
  double a = 0, beta = 0;
};
PhysicalParams physical_params(const AdjointPoint& x);

enum class LightBranch { E, F };

// Ad(a k)(H - 2 s E) or Ad(a k)(H - 2 s F), a = exp(aH), k = exp(k_angle T).
// The physical point (a, beta) has k_angle = -beta/2.
AdjointPoint ads2_light_line(double a, double k_angle, LightBranch branch, double s);

struct LineHit {
  double s = 0, lambda = 0;
  int sign = 0;       // which of +-H
  LightBranch family;  // E: +-H + lambda E, F: +-H + lambda F
};

// Intersections of the full light line with the four singular lines.
std::vector<LineHit> singular_hits(double a, double k_angle, LightBranch branch);

struct NoHorizonReport {
  int samples = 0;
  int escapes = 0;
  std::vector<std::string> witnesses;  // one description per escape
  bool ok() const { return escapes == 0; }
};

// Each light line of each sampled physical point must meet the singular set
// for s > 0 and for s < 0, and must meet both a +H and a -H singular line.
NoHorizonReport ads2_no_horizon(int sample_count, std::uint64_t seed);

}  // namespace adsbh
