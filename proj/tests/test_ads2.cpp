#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adsbh/ads2.hpp"
#include "adsbh/btz_sl2.hpp"
#include "adsbh/sampling.hpp"

using namespace adsbh;
using std::numbers::pi;

namespace {

const Sl2Basis<double> B = sl2_basis<double>();

AdjointPoint conjugate(const Eigen::Matrix2d& g, const Eigen::Matrix2d& X) {
  return AdjointPoint::from_matrix(g * X * g.inverse());
}

}  // namespace

TEST(AdjointPoint, MatrixRoundTrip) {
  const AdjointPoint x{0.3, -1.2, 2.5};
  const AdjointPoint y = AdjointPoint::from_matrix(x.matrix());
  EXPECT_EQ(x.vec(), y.vec());
  EXPECT_EQ(x.matrix().trace(), 0.0);
}

TEST(KillingNorm, AgreesWithTrace) {
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const AdjointPoint x{rng.normal(), rng.normal(), rng.normal()};
    const Eigen::Matrix2d m = x.matrix();
    EXPECT_NEAR(killing_norm(x), 4 * (m * m).trace(), 1e-12 * (1 + m.squaredNorm()));
  }
  EXPECT_EQ(killing_norm({1, 0, 0}), 8.0);
}

TEST(ClosedOrbit, SingularLines) {
  for (double lam : {-2.0, 0.0, 1.5})
    for (double h : {1.0, -1.0}) {
      EXPECT_TRUE(ads2_closed_orbit({h, lam, 0}, Subgroup::AN));
      EXPECT_TRUE(ads2_closed_orbit({h, 0, lam}, Subgroup::ANbar));
      EXPECT_TRUE(closed_orbit_wedge({h, lam, 0}, Subgroup::AN).isZero(1e-14));
      EXPECT_TRUE(closed_orbit_wedge({h, 0, lam}, Subgroup::ANbar).isZero(1e-14));
    }
  for (double b : {0.4, 1.2, 2.8}) {
    const AdjointPoint x{std::cos(b), std::sin(b), std::sin(b)};
    EXPECT_FALSE(ads2_closed_orbit(x, Subgroup::AN));
    EXPECT_FALSE(ads2_closed_orbit(x, Subgroup::ANbar));
    EXPECT_FALSE(closed_orbit_wedge(x, Subgroup::AN).isZero(1e-9));
    EXPECT_FALSE(closed_orbit_wedge(x, Subgroup::ANbar).isZero(1e-9));
  }
}

TEST(ClosedOrbit, WedgeVanishesExactlyOnLines) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const double a = rng.uniform(-2, 2), t = rng.uniform(-pi, pi);
    const AdjointPoint x = conjugate(sl2_exp(a * B.H) * sl2_exp(t * B.T), B.H);
    for (Subgroup s : {Subgroup::AN, Subgroup::ANbar}) {
      const double w = closed_orbit_wedge(x, s).norm();
      const bool closed = ads2_closed_orbit(x, s, 1e-6);
      if (closed) EXPECT_LT(w, 1e-4 * (1 + x.vec().squaredNorm()));
      else EXPECT_GT(w, 0.0);
    }
  }
}

TEST(PhysicalPoint, Examples) {
  const AdjointPoint x = physical_point(0, pi / 2);
  EXPECT_NEAR(x.xH, 0, 1e-16);
  EXPECT_EQ(x.xE, 1.0);
  EXPECT_EQ(x.xF, 1.0);
  EXPECT_THROW(physical_point(0, 0), DomainError);
  EXPECT_THROW(physical_point(0, pi), DomainError);
  // Ad(exp(aH) exp(k T)) H with k = -beta/2.
  const double a = 0.3, b = pi / 4;
  const AdjointPoint y = physical_point(a, b);
  const AdjointPoint want = conjugate(sl2_exp(a * B.H) * sl2_exp(-b / 2 * B.T), B.H);
  EXPECT_LT((y.vec() - want.vec()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PhysicalPoint, OrbitInvariantAndInverse) {
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(1e-3, pi - 1e-3);
    const AdjointPoint x = physical_point(a, b);
    EXPECT_NEAR(killing_norm(x), 8.0, 1e-10 * std::exp(4 * std::abs(a)));
    EXPECT_GT(x.xE, 0);
    EXPECT_GT(x.xF, 0);
    const PhysicalParams p = physical_params(x);
    EXPECT_NEAR(p.a, a, 1e-9);
    EXPECT_NEAR(p.beta, b, 1e-9);
  }
  EXPECT_THROW(physical_params({1, -1, 0.5}), DomainError);
}

TEST(LightLine, MatchesConjugationOracle) {
  Rng rng(4);
  for (int k = 0; k < 1000; ++k) {
    const double a = rng.uniform(-2, 2), kk = rng.uniform(-pi, pi), s = rng.uniform(-5, 5);
    const Eigen::Matrix2d g = sl2_exp(a * B.H) * sl2_exp(kk * B.T);
    for (LightBranch br : {LightBranch::E, LightBranch::F}) {
      const Eigen::Matrix2d N = br == LightBranch::E ? B.E : B.F;
      // H - 2sN = Ad(exp(sN)) H for the E line, Ad(exp(-sF)) H for the F line.
      const Eigen::Matrix2d X = conjugate(sl2_exp((br == LightBranch::E ? s : -s) * N), B.H).matrix();
      EXPECT_LT((X - (B.H - 2 * s * N)).cwiseAbs().maxCoeff(), 1e-12 * (1 + std::abs(s)));
      const AdjointPoint want = conjugate(g, X);
      const AdjointPoint got = ads2_light_line(a, kk, br, s);
      EXPECT_LT((got.vec() - want.vec()).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, want.vec().cwiseAbs().maxCoeff()));
      EXPECT_NEAR(killing_norm(got), 8.0, 1e-8 * std::max(1.0, got.vec().squaredNorm()));
    }
  }
}

TEST(LightLine, StartsAtPhysicalPoint) {
  const double a = -0.7, b = 1.9;
  const AdjointPoint x = physical_point(a, b);
  for (LightBranch br : {LightBranch::E, LightBranch::F})
    EXPECT_LT((ads2_light_line(a, -b / 2, br, 0.0).vec() - x.vec()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(SingularHits, LieOnSingularLines) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(0.01, pi - 0.01);
    for (LightBranch br : {LightBranch::E, LightBranch::F}) {
      const auto hits = singular_hits(a, -b / 2, br);
      for (const auto& h : hits) {
        const AdjointPoint x = ads2_light_line(a, -b / 2, br, h.s);
        const double sc = std::max(1.0, x.vec().cwiseAbs().maxCoeff());
        EXPECT_NEAR(x.xH, h.sign, 1e-8 * sc);
        if (h.family == LightBranch::E) {
          EXPECT_NEAR(x.xF, 0.0, 1e-8 * sc);
          EXPECT_NEAR(x.xE, h.lambda, 1e-8 * sc);
        } else {
          EXPECT_NEAR(x.xE, 0.0, 1e-8 * sc);
          EXPECT_NEAR(x.xF, h.lambda, 1e-8 * sc);
        }
      }
    }
  }
}

TEST(SingularHits, SymmetricPointHitsBothWays) {
  for (LightBranch br : {LightBranch::E, LightBranch::F}) {
    const auto hits = singular_hits(0, -pi / 4, br);
    bool fut = false, past = false;
    for (const auto& h : hits) {
      EXPECT_TRUE(std::isfinite(h.s));
      fut |= h.s > 0;
      past |= h.s < 0;
    }
    EXPECT_TRUE(fut);
    EXPECT_TRUE(past);
  }
}

TEST(SingularHits, SmallBetaApproachesSingularLine) {
  const AdjointPoint x = physical_point(0.2, 1e-6);
  EXPECT_NEAR(x.xH, 1.0, 1e-11);
  EXPECT_LT(std::min(std::abs(x.xE), std::abs(x.xF)), 1e-5);
}

TEST(NoHorizon, EveryLightLineHitsSingularitiesBothWays) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const NoHorizonReport r = ads2_no_horizon(1000, seed);
    EXPECT_EQ(r.samples, 1000);
    EXPECT_TRUE(r.ok()) << (r.witnesses.empty() ? "" : r.witnesses.front());
  }
  EXPECT_THROW(ads2_no_horizon(0, 1), DomainError);
}
