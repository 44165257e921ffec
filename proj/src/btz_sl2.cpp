#include "adsbh/btz_sl2.hpp"

#include <cmath>
#include <numbers>

namespace adsbh {

namespace {

const Sl2Basis<double>& basis() {
  static const Sl2Basis<double> b = sl2_basis<double>();
  return b;
}

}  // namespace

Eigen::Matrix2d Sl2AlgebraElement::matrix() const {
  return zH * basis().H + zE * basis().E + zF * basis().F;
}

Sl2AlgebraElement Sl2AlgebraElement::from_matrix(const Eigen::Matrix2d& m) {
  return {m(0, 0), m(0, 1), m(1, 0)};
}

BHTZParams::BHTZParams(double a_) : a(a_) {
  if (!(a > 0)) throw DomainError("identification parameter a must be positive");
}

SL2Element embed(double u, double t, double x, double y) {
  if (std::abs(u * u + t * t - x * x - y * y - 1.0) > 1e-8)
    throw DomainError("point is not on the AdS_3 hyperboloid");
  SL2Element g;
  g << u + x, y + t, y - t, u - x;
  return g;
}

SL2Element embed(const AdSPoint& p) {
  if (p.dim() != 3) throw DimensionMismatch("SL2 embedding needs an AdS_3 point");
  return embed(p.u(), p.t(), p.x(), p.y());
}

AdSPoint unembed(const SL2Element& g) {
  Eigen::VectorXd c(4);
  c << 0.5 * (g(0, 0) + g(1, 1)), 0.5 * (g(0, 1) - g(1, 0)), 0.5 * (g(0, 0) - g(1, 1)),
      0.5 * (g(0, 1) + g(1, 0));
  return AdSPoint(c);
}

SL2Element sl2_exp(const Eigen::Matrix2d& X) {
  const double delta = -X.determinant();
  double c, s;  // cosh(r), sinh(r)/r with r^2 = delta
  if (delta > 1e-12) {
    const double r = std::sqrt(delta);
    c = std::cosh(r), s = std::sinh(r) / r;
  } else if (delta < -1e-12) {
    const double r = std::sqrt(-delta);
    c = std::cos(r), s = std::sin(r) / r;
  } else {
    c = 1.0 + delta / 2, s = 1.0 + delta / 6;
  }
  return c * Eigen::Matrix2d::Identity() + s * X;
}

SL2Element sigma_sl2(const SL2Element& g) { return basis().H * g * basis().H; }

SL2Element twisted_action(const SL2Element& h, const SL2Element& x) {
  return h * x * sigma_sl2(h).inverse();
}

SL2Element bhtz_apply(const BHTZParams& params, double s, const SL2Element& g) {
  const Eigen::Matrix2d A = sl2_exp(s * params.a * basis().H);
  return A * g * A.inverse();
}

double xi_norm_sq(const BHTZParams& params, const SL2Element& g) {
  const Eigen::Matrix2d v = params.a * (g.inverse() * basis().H * g - basis().H);
  return sl2_algebra<double>().killing(v, v);
}

SL2Element global_coords_to_group(const GlobalCoords& c) {
  if (!(c.tau > 0 && c.tau < std::numbers::pi)) throw DomainError("tau must lie in (0, pi)");
  const auto& b = basis();
  const Eigen::Matrix2d h = sl2_exp(0.5 * c.theta * b.H) * sl2_exp(-0.5 * c.tau * b.T);
  return twisted_action(h, sl2_exp(c.rho * b.H));
}

Eigen::Vector3d equ_coefficients(double beta, double theta_dir) {
  const double sb = std::sin(0.5 * beta);
  return {2.0 * sb * sb, std::sin(beta),
          0.25 * (std::cos(beta) - std::cos(beta + 4.0 * theta_dir))};
}

EquRoots equ_roots(double beta, double theta_dir) {
  const Eigen::Vector3d k = equ_coefficients(beta, theta_dir);
  const double c = k(0), b = k(1), a = k(2);
  EquRoots r;
  if (std::abs(a) < 1e-14) {
    r.linear = true;
    if (std::abs(b) > 1e-14) r.s1 = -c / b;
    return r;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0) return r;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double s1 = q / a, s2 = q != 0.0 ? c / q : s1;
  if (s1 > s2) std::swap(s1, s2);
  r.s1 = s1;
  r.s2 = s2;
  return r;
}

namespace {
double root_denominator(double beta, double theta_dir) {
  return std::sin(2.0 * theta_dir) * std::sin(beta + 2.0 * theta_dir);
}
}  // namespace

double equ_root_product(double beta, double theta_dir) {
  const double sb = std::sin(0.5 * beta);
  return 4.0 * sb * sb / root_denominator(beta, theta_dir);
}

double equ_root_sum(double beta, double theta_dir) {
  return -2.0 * std::sin(beta) / root_denominator(beta, theta_dir);
}

bool interior_beta_test(double beta, int grid) {
  if (!(beta > 0 && beta < 2 * std::numbers::pi)) throw DomainError("beta must lie in (0, 2 pi)");
  if (grid < 2) throw DomainError("grid needs at least two points");
  for (int i = 0; i < grid; ++i) {
    const double th = std::numbers::pi * i / (grid - 1);
    const EquRoots r = equ_roots(beta, th);
    const bool positive = (r.s1 && *r.s1 > 0) || (r.s2 && *r.s2 > 0);
    if (!positive) return false;
  }
  return true;
}

double horizon_closed_form(double rho, int branch) {
  if (branch != 1 && branch != -1) throw DomainError("branch must be +1 or -1");
  return std::acos(branch * std::tanh(rho));
}

AdSPoint btz_horizon_point(double rho, int branch) {
  return unembed(global_coords_to_group({rho, 0.0, horizon_closed_form(rho, branch)}));
}

SL2Element light_ray_sl2(const SL2Element& g, double k_angle, double s) {
  const auto& b = basis();
  const Eigen::Matrix2d k = sl2_exp(k_angle * b.T);
  const Eigen::Matrix2d N = k * b.E * k.inverse();
  return (Eigen::Matrix2d::Identity() - s * N) * g;
}

Relabeled relabel_light_ray(double a, double theta, double s) {
  const double c = std::cos(theta), sn = std::sin(theta);
  Relabeled r;
  r.s = s * (std::exp(-2 * a) * c * c + std::exp(2 * a) * sn * sn);
  r.k_angle = std::atan2(sn, std::exp(-2 * a) * c);
  return r;
}

}  // namespace adsbh
