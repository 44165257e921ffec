#pragma once

// AdS_3 as SL2(R): the BHTZ identification, twisted global coordinates and
// the closed-form horizon cos(tau) = +-tanh(rho).

#include <Eigen/Dense>

#include <optional>

#include "adsbh/orbits.hpp"
#include "adsbh/so2n.hpp"

namespace adsbh {

using SL2Element = Eigen::Matrix2d;

struct Sl2AlgebraElement {
  double zH = 0, zE = 0, zF = 0;
  Eigen::Matrix2d matrix() const;
  static Sl2AlgebraElement from_matrix(const Eigen::Matrix2d& m);
};

struct BHTZParams {
  double a = 1.0;  // identification by exp(a H); a = sqrt(mass)
  explicit BHTZParams(double a_);
};

struct GlobalCoords {
  double rho = 0, theta = 0, tau = 0;  // tau in (0, pi)
};

// (u, t, x, y) -> [[u+x, y+t], [y-t, u-x]]
SL2Element embed(const AdSPoint& p);
SL2Element embed(double u, double t, double x, double y);
AdSPoint unembed(const SL2Element& g);

// exp of a traceless 2x2 matrix: X^2 = -det(X) I gives a closed form.
SL2Element sl2_exp(const Eigen::Matrix2d& X);

// sigma(g) = H g H; fixes H, negates E, F and T.
SL2Element sigma_sl2(const SL2Element& g);

// h x sigma(h)^-1
SL2Element twisted_action(const SL2Element& h, const SL2Element& x);

// exp(s a H) g exp(-s a H)
SL2Element bhtz_apply(const BHTZParams& params, double s, const SL2Element& g);

// Killing norm of the identification field a (Ad(g^-1) H - H) at g.
double xi_norm_sq(const BHTZParams& params, const SL2Element& g);

// exp(theta/2 H) exp(-tau/2 T) exp(rho H) exp(-tau/2 T) exp(-theta/2 H)
SL2Element global_coords_to_group(const GlobalCoords& c);

struct EquRoots {
  std::optional<double> s1, s2;  // ascending when both exist
  bool linear = false;
};

// Coefficients of  1/4 (cos b - cos(b + 4 th)) s^2 + sin(b) s + 2 sin^2(b/2)
Eigen::Vector3d equ_coefficients(double beta, double theta_dir);
EquRoots equ_roots(double beta, double theta_dir);
// s1 s2 and s1 + s2 in closed form; D = sin(2 th) sin(b + 2 th).
double equ_root_product(double beta, double theta_dir);
double equ_root_sum(double beta, double theta_dir);

bool interior_beta_test(double beta, int grid = 200);

// tau = arccos(branch * tanh(rho)), branch = +-1.
double horizon_closed_form(double rho, int branch);

// The AdS_3 point (rho, 0, tau) of the closed-form horizon.
AdSPoint btz_horizon_point(double rho, int branch);

// exp(-s Ad(k) E) g with k = exp(k_angle T).
SL2Element light_ray_sl2(const SL2Element& g, double k_angle, double s);

// Ad(exp(-aH)) exp(-s Ad(k)E) = exp(-s' Ad(k')E) for k = exp(theta T):
// s' = s (e^{-2a} cos^2 theta + e^{2a} sin^2 theta), cot(theta') = e^{-2a} cot(theta).
struct Relabeled {
  double s = 0, k_angle = 0;
};
Relabeled relabel_light_ray(double a, double theta, double s);

}  // namespace adsbh
