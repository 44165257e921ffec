#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

#include "adsbh/btz_sl2.hpp"
#include "adsbh/causal.hpp"
#include "adsbh/sampling.hpp"

using namespace adsbh;
using std::numbers::pi;

namespace {

const Sl2Basis<double> B = sl2_basis<double>();

double max_abs(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Embed, Examples) {
  EXPECT_EQ(embed(1, 0, 0, 0), Eigen::Matrix2d::Identity());
  Eigen::Matrix2d j;
  j << 0, 1, -1, 0;
  EXPECT_EQ(embed(0, 1, 0, 0), j);
  EXPECT_THROW(embed(1, 0, 0.1, 0), DomainError);
  EXPECT_THROW(embed(base_point(4)), DimensionMismatch);
}

TEST(Embed, RoundTripAndDeterminant) {
  Rng rng(1);
  for (int k = 0; k < 500; ++k) {
    const AdSPoint p = random_point(3, rng, 2.0);
    const SL2Element g = embed(p);
    EXPECT_NEAR(g.determinant(), 1.0, 1e-10 * g.squaredNorm());
    EXPECT_LT((unembed(g).coords - p.coords).cwiseAbs().maxCoeff(), 1e-12 * (1 + p.coords.norm()));
  }
}

TEST(Sl2Exp, MatchesSeriesExponential) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    Eigen::Matrix2d X = rng.normal() * B.H + rng.normal() * B.E + rng.normal() * B.F;
    if (k % 10 == 0) X = rng.normal() * B.E;  // nilpotent
    const Eigen::Matrix2d want = X.exp();
    EXPECT_LT(max_abs(sl2_exp(X) - want), 1e-12 * std::max(1.0, max_abs(want)));
  }
  EXPECT_LT(max_abs(sl2_exp(pi * B.T) + Eigen::Matrix2d::Identity()), 1e-15);
}

TEST(Sigma, FixesHNegatesEF) {
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  for (double s : {-1.3, 0.4}) {
    EXPECT_LT(max_abs(sigma_sl2(sl2_exp(s * B.H)) - sl2_exp(s * B.H)), 1e-15);
    EXPECT_LT(max_abs(sigma_sl2(sl2_exp(s * B.E)) - sl2_exp(-s * B.E)), 1e-15);
    EXPECT_LT(max_abs(sigma_sl2(sl2_exp(s * B.T)) - sl2_exp(-s * B.T)), 1e-15);
  }
  EXPECT_EQ(sigma_sl2(I), I);
}

TEST(TwistedAction, IsAnAction) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Matrix2d h1 = sl2_exp(rng.normal() * B.H + rng.normal() * B.E + rng.normal() * B.F);
    const Eigen::Matrix2d h2 = sl2_exp(rng.normal() * B.H + rng.normal() * B.T);
    const Eigen::Matrix2d x = embed(random_point(3, rng));
    const Eigen::Matrix2d lhs = twisted_action(h1 * h2, x), rhs = twisted_action(h1, twisted_action(h2, x));
    EXPECT_LT(max_abs(lhs - rhs), 1e-10 * std::max(1.0, max_abs(lhs)));
  }
}

TEST(BHTZ, ParamsRequirePositiveA) {
  EXPECT_THROW(BHTZParams(0.0), DomainError);
  EXPECT_THROW(BHTZParams(-1.0), DomainError);
  EXPECT_NO_THROW(BHTZParams(0.5));
}

TEST(BHTZ, OneParameterGroup) {
  const BHTZParams P(0.6);
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const SL2Element g = embed(random_point(3, rng));
    const double s = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
    EXPECT_LT(max_abs(bhtz_apply(P, s, bhtz_apply(P, t, g)) - bhtz_apply(P, s + t, g)), 1e-9 * g.squaredNorm());
    EXPECT_LT(max_abs(bhtz_apply(P, 0.0, g) - g), 1e-15);
  }
  const Eigen::Matrix2d a = sl2_exp(0.9 * B.H);
  EXPECT_LT(max_abs(bhtz_apply(P, 1.7, a) - a), 1e-14);
}

TEST(BHTZ, UnitStepIsTwistedActionByExpAH) {
  const BHTZParams P(1.1);
  Rng rng(5);
  const SL2Element g = embed(random_point(3, rng));
  EXPECT_LT(max_abs(bhtz_apply(P, 1.0, g) - twisted_action(sl2_exp(P.a * B.H), g)), 1e-12 * g.squaredNorm());
}

TEST(Xi, ProportionalToTSquaredMinusYSquared) {
  Rng rng(6);
  for (double a : {0.3, 1.0, 1.7}) {
    const BHTZParams P(a);
    for (int k = 0; k < 300; ++k) {
      const AdSPoint p = random_point(3, rng);
      const double ty = p.t() * p.t() - p.y() * p.y();
      const double xi = xi_norm_sq(P, embed(p));
      EXPECT_NEAR(xi, 32 * a * a * ty, 1e-9 * std::max(1.0, p.coords.squaredNorm()));
      // Independent evaluation of the Killing norm: B(X,X) = 4 tr(X^2) on sl2.
      const Eigen::Matrix2d g = embed(p);
      const Eigen::Matrix2d v = a * (g.inverse() * B.H * g - B.H);
      EXPECT_NEAR(xi, 4 * (v * v).trace(), 1e-9 * std::max(1.0, std::abs(xi)));
    }
  }
}

TEST(Xi, VanishesOnParabolicSubgroups) {
  Rng rng(7);
  const BHTZParams P(0.8);
  for (int k = 0; k < 100; ++k) {
    const double a = rng.uniform(-2, 2), n = rng.uniform(-3, 3);
    for (double sign : {1.0, -1.0})
      for (const Eigen::Matrix2d& nil : {B.E, B.F}) {
        const Eigen::Matrix2d g = sign * sl2_exp(a * B.H) * sl2_exp(n * nil);
        const AdSPoint p = unembed(g);
        EXPECT_NEAR(p.t() * p.t() - p.y() * p.y(), 0.0, 1e-9 * g.squaredNorm());
        EXPECT_NEAR(xi_norm_sq(P, g), 0.0, 1e-8 * g.squaredNorm() * g.squaredNorm());
      }
  }
}

TEST(GlobalCoords, Examples) {
  const SL2Element g = global_coords_to_group({0, 0, pi / 2});
  EXPECT_LT(max_abs(g - sl2_exp(-pi / 2 * B.T)), 1e-15);
  EXPECT_THROW(global_coords_to_group({0, 0, 0}), DomainError);
  EXPECT_THROW(global_coords_to_group({0, 0, pi}), DomainError);
  EXPECT_THROW(global_coords_to_group({0, 0, -0.1}), DomainError);
}

TEST(GlobalCoords, SafeRegionAndShift) {
  Rng rng(8);
  const BHTZParams P(0.7);
  for (int k = 0; k < 200; ++k) {
    const GlobalCoords c{rng.uniform(-2, 2), rng.uniform(-3, 3), rng.uniform(0.05, pi - 0.05)};
    const SL2Element g = global_coords_to_group(c);
    EXPECT_NEAR(g.determinant(), 1.0, 1e-10 * g.squaredNorm());
    EXPECT_GT(xi_norm_sq(P, g), 0.0);
    const SL2Element shifted = global_coords_to_group({c.rho, c.theta + 2 * P.a, c.tau});
    EXPECT_LT(max_abs(shifted - bhtz_apply(P, 1.0, g)), 1e-10 * std::max(1.0, max_abs(shifted)));
  }
}

TEST(GlobalCoords, XiVanishesAsTauGoesToZero) {
  const BHTZParams P(1.0);
  double prev = xi_norm_sq(P, global_coords_to_group({0.5, 0.2, 0.1}));
  for (double tau : {0.01, 0.001}) {
    const double v = xi_norm_sq(P, global_coords_to_group({0.5, 0.2, tau}));
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(RayQuadratic, ThetaZeroGivesSingleRoot) {
  for (double b : {0.5, 2.0, 4.0, 5.5}) {
    const EquRoots r = equ_roots(b, 0.0);
    EXPECT_TRUE(r.linear);
    ASSERT_TRUE(r.s1.has_value());
    EXPECT_FALSE(r.s2.has_value());
    EXPECT_NEAR(*r.s1, -std::tan(b / 2), 1e-12);
  }
}

TEST(RayQuadratic, RootsSolveTheQuadratic) {
  for (int i = 1; i < 40; ++i)
    for (int j = 0; j < 40; ++j) {
      const double b = 2 * pi * i / 40, th = pi * j / 40;
      const Eigen::Vector3d c = equ_coefficients(b, th);
      const EquRoots r = equ_roots(b, th);
      for (const auto& s : {r.s1, r.s2})
        if (s) EXPECT_NEAR(c(0) + c(1) * *s + c(2) * *s * *s, 0.0, 1e-9 * (1 + *s * *s)) << b << " " << th;
    }
}

TEST(RayQuadratic, QuarterPointIsDegenerate) {
  // beta = pi/2, theta = pi/4: the leading coefficient and sin(beta + 2 theta) both vanish,
  // leaving the linear equation s + 1 = 0.
  const Eigen::Vector3d c = equ_coefficients(pi / 2, pi / 4);
  EXPECT_NEAR(c(2), 0.0, 1e-15);
  const EquRoots r = equ_roots(pi / 2, pi / 4);
  EXPECT_TRUE(r.linear);
  ASSERT_TRUE(r.s1.has_value());
  EXPECT_NEAR(*r.s1, -1.0, 1e-12);
  EXPECT_GT(std::abs(equ_root_product(pi / 2, pi / 4)), 1e12);
}

TEST(RayQuadratic, ProductAndSumIdentities) {
  int checked = 0;
  for (int i = 1; i < 60; ++i)
    for (int j = 1; j < 60; ++j) {
      const double b = 2 * pi * i / 60 + 0.01, th = pi * j / 60 + 0.003;
      if (std::abs(std::sin(2 * th) * std::sin(b + 2 * th)) < 1e-3) continue;
      const EquRoots r = equ_roots(b, th);
      if (!r.s1 || !r.s2) continue;
      EXPECT_NEAR(*r.s1 * *r.s2, equ_root_product(b, th), 1e-9 * std::max(1.0, std::abs(*r.s1 * *r.s2)));
      EXPECT_NEAR(*r.s1 + *r.s2, equ_root_sum(b, th), 1e-9 * std::max(1.0, std::abs(*r.s1 + *r.s2)));
      ++checked;
    }
  EXPECT_GT(checked, 500);
}

TEST(RayQuadratic, BetaPiMatchesDirectSolve) {
  for (double th : {0.3, 1.0, 2.0}) {
    const Eigen::Vector3d c = equ_coefficients(pi, th);
    const EquRoots r = equ_roots(pi, th);
    if (!r.s1) continue;
    EXPECT_NEAR(c(0) + c(1) * *r.s1 + c(2) * *r.s1 * *r.s1, 0.0, 1e-12);
  }
}

TEST(BetaTest, Examples) {
  EXPECT_TRUE(interior_beta_test(3 * pi / 2));
  EXPECT_FALSE(interior_beta_test(pi / 2));
  EXPECT_FALSE(interior_beta_test(pi - 1e-3));
  EXPECT_TRUE(interior_beta_test(pi + 1e-3));
  EXPECT_THROW(interior_beta_test(0.0), DomainError);
  EXPECT_THROW(interior_beta_test(2 * pi), DomainError);
}

TEST(Horizon, ClosedFormExamples) {
  EXPECT_DOUBLE_EQ(horizon_closed_form(0, 1), pi / 2);
  EXPECT_DOUBLE_EQ(horizon_closed_form(0, -1), pi / 2);
  EXPECT_NEAR(horizon_closed_form(1, 1), 0.70503, 1e-5);
  EXPECT_NEAR(horizon_closed_form(30, 1), 0.0, 1e-12);
  EXPECT_NEAR(horizon_closed_form(30, -1), pi, 1e-12);
  EXPECT_THROW(horizon_closed_form(1, 0), DomainError);
}

TEST(Horizon, ClosedFormLiesOnUEqualsX) {
  for (double rho = -3; rho <= 3; rho += 0.25)
    for (int br : {1, -1}) {
      const AdSPoint p = btz_horizon_point(rho, br);
      EXPECT_NEAR(p.u() * p.u() - p.x() * p.x(), 0.0, 1e-8) << rho << " " << br;
      EXPECT_NEAR(hyperboloid_residual(p), 0.0, 1e-10);
    }
}

TEST(LightRay, QuadraticAndNull) {
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const SL2Element g = embed(random_point(3, rng));
    const double ka = rng.uniform(-pi, pi);
    EXPECT_EQ(light_ray_sl2(g, ka, 0.0), g);
    const Eigen::Vector4d p0 = unembed(light_ray_sl2(g, ka, 0.0)).coords;
    const Eigen::Vector4d p1 = unembed(light_ray_sl2(g, ka, 1.0)).coords;
    for (double s : {-2.0, 0.5, 3.0}) {
      const SL2Element l = light_ray_sl2(g, ka, s);
      EXPECT_NEAR(l.determinant(), 1.0, 1e-10 * (1 + s * s) * g.squaredNorm());
      // Left translation by a unipotent element: the AdS_3 image is a null line.
      EXPECT_LT((unembed(l).coords - (p0 + s * (p1 - p0))).cwiseAbs().maxCoeff(), 1e-10 * (1 + std::abs(s)) * g.norm());
    }
    EXPECT_NEAR(eta_inner(p1 - p0, p1 - p0), 0.0, 1e-10 * (p1 - p0).squaredNorm());
  }
}

TEST(LightRay, RelabelingUnderA) {
  Rng rng(10);
  for (int k = 0; k < 200; ++k) {
    const double a = rng.uniform(-1.5, 1.5), th = rng.uniform(-pi, pi), s = rng.uniform(-3, 3);
    const Relabeled r = relabel_light_ray(a, th, s);
    const Eigen::Matrix2d A = sl2_exp(-a * B.H);
    const Eigen::Matrix2d lhs = A * light_ray_sl2(Eigen::Matrix2d::Identity(), th, s) * A.inverse();
    const Eigen::Matrix2d rhs = light_ray_sl2(Eigen::Matrix2d::Identity(), r.k_angle, r.s);
    EXPECT_LT(max_abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(r.s)));
    EXPECT_EQ(r.s > 0, s > 0);
  }
}

TEST(BiInvariance, InteriorFutureStableUnderA) {
  Rng rng(11);
  int interior = 0;
  for (int k = 0; k < 60 && interior < 8; ++k) {
    const AdSPoint p = random_point(3, rng, 0.6);
    if (classify(p, {128, 1}).cls != CausalClass::InteriorFuture) continue;
    ++interior;
    const SL2Element g = embed(p);
    for (int j = 0; j < 20; ++j) {
      const Eigen::Matrix2d a = sl2_exp(rng.uniform(-1, 1) * B.H);
      EXPECT_EQ(classify(unembed(a * g), {128, 1}).cls, CausalClass::InteriorFuture);
      EXPECT_EQ(classify(unembed(g * a), {128, 1}).cls, CausalClass::InteriorFuture);
    }
  }
  EXPECT_GT(interior, 0);
}
