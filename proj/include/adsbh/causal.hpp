#pragma once

// Null rays, singularity hit times, the direction sets D and D-bar, causal
// classification and the event horizon.
//
// A null direction at the base point is a unit w in R^n.  X_w is the
// conjugate Ad(k)E of the nilpotent E = q0 + q2 with w = k e_2.  The future
// null ray from p = g.base is  s -> g exp(s theta(X_w)) base, s > 0, which is
// g (base + s (0, -1, -w)): a straight line on the hyperboloid.  This time
// orientation puts the K-points (cos mu, sin mu, 0, ...) with
// 0 < mu < pi/2 in the future interior.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "adsbh/frame.hpp"
#include "adsbh/orbits.hpp"
#include "adsbh/so2n.hpp"

namespace adsbh {

inline constexpr double kHitEpsilon = 1e-12;

struct Direction {
  Eigen::VectorXd w;

  Direction() = default;
  explicit Direction(Eigen::VectorXd v);  // throws unless |v| = 1 to 1e-12
};

// Ad(k)E: entries (0,1) = 1, (1,0) = -1, (0,2+j) = (2+j,0) = w_j.
LieElement<double> null_direction_generator(const Direction& w);

// theta(X_w) = X_{-w}; generates the future ray.
LieElement<double> future_null_generator(const Direction& w);

AdSPoint ray_point(const GroupElement<double>& g, const Direction& w, double s);
AdSPoint ray_point(const AdSPoint& p, const Direction& w, double s);

// (y - t)(s) and (y + t)(s) along the ray, constant term first.
struct RayPolynomials {
  Eigen::Vector3d an;
  Eigen::Vector3d anbar;
};

RayPolynomials ray_polynomials(const GroupElement<double>& g, const Direction& w);

struct HitTimes {
  std::vector<double> roots_AN, roots_ANbar;
  bool degenerate_AN = false, degenerate_ANbar = false;  // ray inside the branch
  bool starts_on_AN = false, starts_on_ANbar = false;    // root at s = 0

  bool future_hit_AN() const;
  bool future_hit_ANbar() const;
  bool past_hit_AN() const;
  bool past_hit_ANbar() const;
  bool future_hit() const { return future_hit_AN() || future_hit_ANbar(); }
  bool past_hit() const { return past_hit_AN() || past_hit_ANbar(); }
};

// Real roots of c0 + c1 s + c2 s^2, ascending.  A double root is listed twice.
std::vector<double> real_roots(const Eigen::Vector3d& c);

HitTimes hit_times(const GroupElement<double>& g, const Direction& w);
HitTimes hit_times(const AdSPoint& p, const Direction& w);

struct DirectionMask {
  std::vector<Direction> samples;
  std::vector<bool> hits_AN, hits_ANbar;
};

std::vector<Direction> direction_samples(int l, int n_samples, std::uint64_t seed);

DirectionMask direction_sets(const GroupElement<double>& g, const std::vector<Direction>& samples);
DirectionMask direction_sets(const AdSPoint& p, int n_samples, std::uint64_t seed);

Direction theta_flip(const Direction& w);

// Exact escape test.  Along the ray (y -+ t)(s) = a0 + s (beta + c.w), so
// the future hit condition on a branch is linear in w.  The margin is the
// minimum over the sphere of max(l_AN, l_ANbar) with l_b(w) > 0 iff the
// branch is hit in the future; it is positive iff every future ray hits.
struct EscapeMargin {
  double value = 0;
  Direction argmin;  // the least-covered direction
};

EscapeMargin future_escape_margin(const GroupElement<double>& g);
EscapeMargin past_escape_margin(const GroupElement<double>& g);

enum class CausalClass { Singular, InteriorFuture, InteriorPast, Exterior, Horizon };

const char* to_string(CausalClass c);

struct ClassifyOptions {
  int n_samples = 512;
  std::uint64_t seed = 1;
  double tol_sing = 1e-9;
  double witness_perturbation = 1e-6;
};

struct CausalReport {
  CausalClass cls = CausalClass::Exterior;
  SingularityClass branch = SingularityClass::Generic;
  std::optional<Direction> witness;  // a future-escaping direction, Exterior only
  bool witness_robust = false;       // still escaping after perturbation
  double future_margin = 0;
  double past_margin = 0;
  int sampled_future_escapes = 0;
};

// Sampled masks plus the exact margin, which catches escape cones that fall
// between samples.
CausalReport classify(const AdSPoint& p, const ClassifyOptions& opts = {});

using Curve = std::function<AdSPoint(double)>;

// s -> normalized((1-s) a + s b); throws if the chord leaves the AdS cone.
Curve chord_path(const AdSPoint& a, const AdSPoint& b);

struct BisectOptions {
  int steps = 30;
  ClassifyOptions classify;
};

struct HorizonBracket {
  AdSPoint inside, outside, midpoint;
  double s_inside = 0, s_outside = 1;
  CausalClass interior_kind = CausalClass::InteriorFuture;
};

// Bisects along `path` (default: the chord) between an interior point and a
// point not of the same interior kind.
HorizonBracket horizon_bracket(const AdSPoint& p_in, const AdSPoint& p_out,
                               const BisectOptions& opts = {}, const Curve& path = {});
AdSPoint horizon_bisect(const AdSPoint& p_in, const AdSPoint& p_out,
                        const BisectOptions& opts = {}, const Curve& path = {});

// mu: angle of the SO(2) part of k in frame_completion(p) = a n k; mu' the
// same for the Cartan image.  cos_residual = cos mu + cos mu'.
// tangency_residual = a.b + cos(mu + mu'), where a and b are the images of
// the y axis under the SO(n) parts of the two factorizations.
struct HorizonAngles {
  double mu = 0, mu_prime = 0;
  double cos_residual = 0;
  double tangency_residual = 0;
};

HorizonAngles horizon_angles(const AdSPoint& p);
bool horizon_theta_check(const AdSPoint& p, double tol);

// Cartan image of a point: theta(g).base = (u, t, -x).
AdSPoint cartan_image(const AdSPoint& p);

}  // namespace adsbh
