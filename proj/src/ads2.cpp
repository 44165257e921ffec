#include "adsbh/ads2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "adsbh/btz_sl2.hpp"
#include "adsbh/sampling.hpp"

namespace adsbh {

Eigen::Matrix2d AdjointPoint::matrix() const { return Sl2AlgebraElement{xH, xE, xF}.matrix(); }

AdjointPoint AdjointPoint::from_matrix(const Eigen::Matrix2d& m) { return {m(0, 0), m(0, 1), m(1, 0)}; }

double killing_norm(const AdjointPoint& x) { return 8.0 * (x.xH * x.xH + x.xE * x.xF); }

Eigen::Vector3d closed_orbit_wedge(const AdjointPoint& x, Subgroup which) {
  const auto b = sl2_basis<double>();
  const Eigen::Matrix2d X = x.matrix();
  const Eigen::Matrix2d& G = which == Subgroup::AN ? b.E : b.F;
  // Fundamental fields -[G, x] and -[H, x]; the signs cancel in the wedge.
  const Eigen::Vector3d p = AdjointPoint::from_matrix(G * X - X * G).vec();
  const Eigen::Vector3d q = AdjointPoint::from_matrix(b.H * X - X * b.H).vec();
  const Eigen::Vector3d w(p(0) * q(1) - p(1) * q(0), p(0) * q(2) - p(2) * q(0),
                          p(1) * q(2) - p(2) * q(1));
  return which == Subgroup::AN ? w : Eigen::Vector3d(-w);
}

bool ads2_closed_orbit(const AdjointPoint& x, Subgroup which, double tol) {
  return std::abs(which == Subgroup::AN ? x.xF : x.xE) < tol;
}

AdjointPoint physical_point(double a, double beta) {
  if (!(beta > 0 && beta < std::numbers::pi)) throw DomainError("beta must lie in (0, pi)");
  const double s = std::sin(beta);
  return {std::cos(beta), std::exp(2 * a) * s, std::exp(-2 * a) * s};
}

PhysicalParams physical_params(const AdjointPoint& x) {
  if (!(x.xE > 0 && x.xF > 0)) throw DomainError("point is outside the physical region");
  return {0.25 * std::log(x.xE / x.xF), std::atan2(std::sqrt(x.xE * x.xF), x.xH)};
}

AdjointPoint ads2_light_line(double a, double k, LightBranch branch, double s) {
  const double c2 = std::cos(2 * k), s2 = std::sin(2 * k);
  const double ck = std::cos(k), sk = std::sin(k);
  const double ep = std::exp(2 * a), em = std::exp(-2 * a);
  const double h = c2 - s * s2;
  if (branch == LightBranch::E)
    return {h, -ep * (s2 + 2 * s * ck * ck), -em * (s2 - 2 * s * sk * sk)};
  return {h, -ep * (s2 - 2 * s * sk * sk), -em * (s2 + 2 * s * ck * ck)};
}

std::vector<LineHit> singular_hits(double a, double k_angle, LightBranch branch) {
  const Eigen::Vector3d P = ads2_light_line(a, k_angle, branch, 0.0).vec();
  const Eigen::Vector3d D = ads2_light_line(a, k_angle, branch, 1.0).vec() - P;
  std::vector<LineHit> out;
  for (LightBranch fam : {LightBranch::E, LightBranch::F}) {
    // Family E: (x_E, x_F) = (lambda, 0); family F: (x_E, x_F) = (0, lambda).
    const int free_i = fam == LightBranch::E ? 1 : 2;
    const int zero_i = fam == LightBranch::E ? 2 : 1;
    Eigen::Matrix2d A;
    A << D(free_i), -1.0, D(zero_i), 0.0;
    if (std::abs(A.determinant()) < 1e-14) continue;  // parallel
    const Eigen::Vector2d sol = A.partialPivLu().solve(Eigen::Vector2d(-P(free_i), -P(zero_i)));
    const double h = P(0) + sol(0) * D(0);
    for (int sign : {1, -1})
      if (std::abs(h - sign) < 1e-9) out.push_back({sol(0), sol(1), sign, fam});
  }
  return out;
}

NoHorizonReport ads2_no_horizon(int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw DomainError("sample count must be positive");
  Rng rng(seed);
  NoHorizonReport rep;
  rep.samples = sample_count;
  for (int i = 0; i < sample_count; ++i) {
    const double a = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(1e-3, std::numbers::pi - 1e-3);
    for (LightBranch br : {LightBranch::E, LightBranch::F}) {
      const auto hits = singular_hits(a, -beta / 2, br);
      bool future = false, past = false, plus = false, minus = false;
      for (const auto& h : hits) {
        future |= h.s > 0;
        past |= h.s < 0;
        plus |= h.sign > 0;
        minus |= h.sign < 0;
      }
      if (!(future && past && plus && minus)) {
        ++rep.escapes;
        std::ostringstream os;
        os.precision(17);
        const AdjointPoint x = physical_point(a, beta);
        os << "a=" << a << " beta=" << beta << " point=(" << x.xH << "," << x.xE << "," << x.xF
           << ") branch=" << (br == LightBranch::E ? "E" : "F") << " future=" << future
           << " past=" << past << " plusH=" << plus << " minusH=" << minus;
        rep.witnesses.push_back(os.str());
      }
    }
  }
  return rep;
}

}  // namespace adsbh
