#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "adsbh/causal.hpp"
#include "adsbh/sampling.hpp"
#include "adsbh/so2n.hpp"

using namespace adsbh;

namespace {

LieElement<double> random_element(int l, Rng& rng) {
  const auto alg = so2n_algebra<double>(l);
  Eigen::VectorXd c(alg.dimension());
  for (int i = 0; i < c.size(); ++i) c(i) = rng.normal();
  return LieElement<double>(alg.element(c));
}

GroupElement<double> random_group(int l, Rng& rng) {
  return mat_exp(random_element(l, rng), 0.5);
}

}  // namespace

TEST(Generators, J1HasTwoUnitEntries) {
  const auto g = generators<int>(3);
  EXPECT_EQ(g.J1.matrix.cwiseAbs().sum(), 2);
  EXPECT_EQ(g.J1.matrix(1, 3), 1);  // E_24
  EXPECT_EQ(g.J1.matrix(3, 1), 1);  // E_42
}

TEST(Generators, EMatchesNullGeneratorOfSecondAxis) {
  const auto g = generators<double>(3);
  // E = q0 + q2 is X_w for w = e_2; the first axis gives q0 + q1 instead.
  EXPECT_EQ(null_direction_generator(Direction(Eigen::Vector2d(0, 1))).matrix, g.E.matrix);
  EXPECT_NE(null_direction_generator(Direction(Eigen::Vector2d(1, 0))).matrix, g.E.matrix);
}

TEST(Generators, AllSatisfyDefiningRelation) {
  for (int l = 3; l <= 8; ++l)
    for (const auto& [name, X] : generators<int>(l).named())
      EXPECT_EQ(algebra_residual(X), 0) << name << " l=" << l;
}

TEST(Generators, FamilySizesFollowDimension) {
  EXPECT_TRUE(generators<double>(3).W.empty());
  EXPECT_TRUE(generators<double>(3).V.empty());
  const auto g = generators<double>(6);
  EXPECT_EQ(g.W.size(), 3u);
  EXPECT_EQ(g.q.size(), 6u);
  EXPECT_EQ(g.D.size(), 3u);
  // With D the named root vectors and A form a basis of so(2,n).
  const int n = 5;
  EXPECT_EQ(2 + g.D.size() + 4 * g.W.size() + 4, std::size_t((n + 2) * (n + 1) / 2));
}

TEST(Generators, RejectsSmallDimension) {
  EXPECT_THROW(generators<double>(1), DomainError);
  EXPECT_THROW(generators<double>(2), DomainError);
  EXPECT_THROW(eta<double>(1), DomainError);
  EXPECT_NO_THROW(so2n_algebra<double>(2));
}

TEST(Generators, ECubedIsExactlyZero) {
  for (int l = 3; l <= 8; ++l) {
    const auto E = generators<int>(l).E.matrix;
    EXPECT_FALSE((E * E).isZero(0));
    EXPECT_TRUE((E * E * E).isZero(0));
  }
}

TEST(Bracket, Sl2Relations) {
  const auto b = sl2_basis<int>();
  auto br = [](const Eigen::Matrix2i& x, const Eigen::Matrix2i& y) -> Eigen::Matrix2i { return x * y - y * x; };
  EXPECT_EQ(br(b.H, b.E), Eigen::Matrix2i(2 * b.E));
  EXPECT_EQ(br(b.H, b.F), Eigen::Matrix2i(-2 * b.F));
  EXPECT_EQ(br(b.E, b.F), b.H);
}

TEST(Bracket, AntisymmetricAndAbelianA) {
  Rng rng(3);
  const auto X = random_element(5, rng);
  EXPECT_TRUE(bracket(X, X).matrix.isZero(0));
  const auto g = generators<int>(4);
  EXPECT_TRUE(bracket(g.J1, g.J2).matrix.isZero(0));
}

TEST(Bracket, JacobiOnRandomElements) {
  Rng rng(5);
  for (int l = 3; l <= 8; ++l) {
    const auto X = random_element(l, rng), Y = random_element(l, rng), Z = random_element(l, rng);
    const auto J = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
    EXPECT_LT(J.matrix.cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(algebra_residual(bracket(X, Y)), 1e-12);
  }
}

TEST(Bracket, DimensionMismatchThrows) {
  EXPECT_THROW(bracket(generators<double>(3).J1, generators<double>(4).J1), DimensionMismatch);
  EXPECT_THROW(killing(generators<double>(3).J1, generators<double>(4).J1), DimensionMismatch);
}

TEST(Killing, Sl2MatrixIsExactInIntegers) {
  const auto alg = sl2_algebra<int>();
  Eigen::Matrix3i want;
  want << 8, 0, 0, 0, 0, 4, 0, 4, 0;
  EXPECT_EQ(alg.killing_gram(), want);
}

TEST(Killing, So22OnJ1) {
  // Oracle: the 6x6 adjoint representation traced directly.
  const auto J1 = generators<int>(3).J1;
  const auto alg = so2n_algebra<int>(3);
  ASSERT_EQ(alg.dimension(), 6);
  EXPECT_EQ(alg.killing_traced(J1.matrix, J1.matrix), 4);
  EXPECT_EQ(killing(J1, J1), 4);
}

TEST(Killing, MatchesTraceFormOracle) {
  // On so(p,q) the Killing form is (p+q-2) tr(XY).
  Rng rng(7);
  for (int l = 3; l <= 7; ++l) {
    const auto X = random_element(l, rng), Y = random_element(l, rng);
    const double oracle = (l - 1) * (X.matrix * Y.matrix).trace();
    EXPECT_NEAR(killing(X, Y), oracle, 1e-9 * std::max(1.0, std::abs(oracle)));
    EXPECT_NEAR(so2n_algebra<double>(l).killing(X.matrix, Y.matrix), oracle, 1e-9 * std::max(1.0, std::abs(oracle)));
  }
}

TEST(Killing, BilinearSymmetricAdInvariant) {
  Rng rng(11);
  const int l = 5;
  const auto X = random_element(l, rng), Y = random_element(l, rng);
  const LieElement<double> zero(Eigen::MatrixXd::Zero(l + 1, l + 1));
  EXPECT_EQ(killing(X, zero), 0.0);
  EXPECT_NEAR(killing(X, Y), killing(Y, X), 1e-10);
  const auto g = random_group(l, rng);
  EXPECT_NEAR(killing(adjoint_action(g, X), adjoint_action(g, Y)), killing(X, Y), 1e-9 * std::abs(killing(X, Y)) + 1e-9);
}

TEST(Theta, InvolutionAndSl2) {
  Rng rng(13);
  const auto X = random_element(6, rng);
  EXPECT_EQ(cartan_theta(cartan_theta(X)).matrix, X.matrix);
  const auto b = sl2_basis<double>();
  EXPECT_EQ(Eigen::Matrix2d(-b.E.transpose()), Eigen::Matrix2d(-b.F));
  // On so(2,n), -X^T = eta X eta.
  const Eigen::MatrixXd e = eta<double>(6);
  EXPECT_LT((cartan_theta(X).matrix - e * X.matrix * e).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Theta, MapsNOntoNbar) {
  for (int l = 3; l <= 6; ++l) {
    const auto g = generators<int>(l);
    EXPECT_EQ(cartan_theta(g.M).matrix, g.F.matrix) << l;
    EXPECT_EQ(cartan_theta(g.L).matrix, g.N.matrix) << l;
    for (std::size_t i = 0; i < g.V.size(); ++i) {
      EXPECT_EQ(cartan_theta(g.V[i]).matrix, g.X[i].matrix);
      EXPECT_EQ(cartan_theta(g.W[i]).matrix, g.Y[i].matrix);
    }
  }
}

TEST(SigmaSplit, Examples) {
  const auto g = generators<int>(4);
  const auto s1 = sigma_split(g.J1);
  EXPECT_EQ(s1.h.matrix, g.J1.matrix);
  EXPECT_TRUE(s1.q.matrix.isZero(0));
  const auto s2 = sigma_split(g.J2);
  EXPECT_TRUE(s2.h.matrix.isZero(0));
  EXPECT_EQ(s2.q.matrix, g.J2.matrix);
}

TEST(SigmaSplit, RecombinesAndGrades) {
  Rng rng(17);
  for (int l = 3; l <= 8; ++l) {
    const auto X = random_element(l, rng), Y = random_element(l, rng);
    const auto sx = sigma_split(X), sy = sigma_split(Y);
    EXPECT_EQ((sx.h + sx.q).matrix, X.matrix);
    EXPECT_EQ(sigma(sx.h).matrix, sx.h.matrix);
    EXPECT_EQ(sigma(sx.q).matrix, (-sx.q).matrix);
    EXPECT_LT(sigma_split(bracket(sx.h, sy.h)).q.matrix.cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(sigma_split(bracket(sx.h, sy.q)).h.matrix.cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(sigma_split(bracket(sx.q, sy.q)).q.matrix.cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_EQ(cartan_theta(sigma(X)).matrix, sigma(cartan_theta(X)).matrix);
  }
}

TEST(RootLabel, Table) {
  for (int l = 3; l <= 6; ++l) {
    const auto g = generators<double>(l);
    EXPECT_EQ(root_label(g.M), (RootLabel{1, 1}));
    EXPECT_EQ(root_label(g.L), (RootLabel{1, -1}));
    EXPECT_EQ(root_label(g.N), (RootLabel{-1, 1}));
    EXPECT_EQ(root_label(g.F), (RootLabel{-1, -1}));
    EXPECT_EQ(root_label(g.J1), (RootLabel{0, 0}));
    for (std::size_t i = 0; i < g.W.size(); ++i) {
      EXPECT_EQ(root_label(g.W[i]), (RootLabel{1, 0}));
      EXPECT_EQ(root_label(g.Y[i]), (RootLabel{-1, 0}));
      EXPECT_EQ(root_label(g.V[i]), (RootLabel{0, 1}));
      EXPECT_EQ(root_label(g.X[i]), (RootLabel{0, -1}));
    }
  }
}

TEST(RootLabel, MixedVectorsAreRejected) {
  const auto g = generators<double>(4);
  EXPECT_FALSE(root_label(g.J1 + g.M).has_value());
  EXPECT_FALSE(root_label(g.E).has_value());
  EXPECT_FALSE(root_label(LieElement<double>(Eigen::MatrixXd::Zero(5, 5))).has_value());
}

TEST(RootLabel, PositiveRootsGenerateNilpotentSubalgebra) {
  // N = {V, W, M, L}: brackets stay inside the span of positive root vectors.
  const auto g = generators<double>(5);
  std::vector<LieElement<double>> n{g.M, g.L};
  n.insert(n.end(), g.V.begin(), g.V.end());
  n.insert(n.end(), g.W.begin(), g.W.end());
  for (const auto& a : n)
    for (const auto& b : n) {
      const auto c = bracket(a, b);
      if (c.matrix.isZero(0)) continue;
      const auto lab = root_label(c);
      ASSERT_TRUE(lab.has_value());
      EXPECT_TRUE(lab->a > 0 || (lab->a == 0 && lab->b > 0));
    }
}

TEST(MatExp, ZeroAndSl2Nilpotent) {
  const LieElement<double> zero(Eigen::MatrixXd::Zero(4, 4));
  EXPECT_EQ(mat_exp(zero, 2.5).matrix, Eigen::MatrixXd::Identity(4, 4));
  Eigen::MatrixXd E(2, 2);
  E << 0, 1, 0, 0;
  Eigen::MatrixXd want(2, 2);
  want << 1, 0.75, 0, 1;
  EXPECT_EQ(mat_exp(LieElement<double>(E), 0.75).matrix, want);
}

TEST(MatExp, NilpotentTruncationIsQuadratic) {
  Rng rng(19);
  for (int l = 3; l <= 8; ++l)
    for (int k = 0; k < 100; ++k) {
      Eigen::MatrixXd K = Eigen::MatrixXd::Identity(l + 1, l + 1);
      K.bottomRightCorner(l - 1, l - 1) = random_rotation(l - 1, rng);
      const Eigen::MatrixXd A = K * generators<double>(l).E.matrix * K.transpose();
      ASSERT_LT((A * A * A).cwiseAbs().maxCoeff(), 1e-12);
      const double s = rng.uniform(-5, 5);
      const Eigen::MatrixXd want = Eigen::MatrixXd::Identity(l + 1, l + 1) + s * A + 0.5 * s * s * A * A;
      const auto g = mat_exp(LieElement<double>(A), s);
      EXPECT_LT((g.matrix - want).cwiseAbs().maxCoeff(), 1e-11);
      EXPECT_TRUE(is_valid(g, 1e-9));
    }
}

TEST(MatExp, GeneralElementLandsInGroup) {
  Rng rng(23);
  for (int l = 3; l <= 8; ++l) {
    const auto X = random_element(l, rng);
    const auto g = mat_exp(X, 0.3);
    EXPECT_TRUE(is_valid(g));
    EXPECT_TRUE((g * mat_exp(X, -0.3)).matrix.isIdentity(1e-10));
  }
  // Compact rotation: exp(pi/2 q0) turns u into t.
  const auto g = mat_exp(generators<double>(3).q[0], std::numbers::pi / 2);
  EXPECT_NEAR(g.matrix(1, 0), -1.0, 1e-14);
}
