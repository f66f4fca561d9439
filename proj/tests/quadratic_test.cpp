#include "swgcs/quadratic.hpp"

#include <gtest/gtest.h>

namespace swgcs {
namespace {

TEST(QuadraticTest, SquaredNormAtZero) {
  // f = ||x||^2 over R^2, evaluated at the origin.
  QuadraticFunction f =
      QuadraticFunction::from_blocks(Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero(), 0.0);
  EXPECT_DOUBLE_EQ(f.eval(Eigen::Vector2d(0, 0)), 0.0);
}

TEST(QuadraticTest, UnitStepCost) {
  // f = 1 + ||x||^2 at x = (1, 0) -> 2.
  QuadraticFunction f =
      QuadraticFunction::from_blocks(Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero(), 1.0);
  EXPECT_DOUBLE_EQ(f.eval(Eigen::Vector2d(1, 0)), 2.0);
}

TEST(QuadraticTest, HomogenizedMatchesDirectExpansion) {
  // Q = 2I, q = (-2, 0), c = 1 at x = (1, 1). Direct polynomial expansion:
  // x'Qx + q'x + c = (2 + 2) + (-2) + 1 = 3.
  Eigen::Matrix2d Q;
  Q << 2, 0, 0, 2;
  const Eigen::Vector2d q(-2, 0);
  const Eigen::Vector2d x(1, 1);
  QuadraticFunction f = QuadraticFunction::from_blocks(Q, q, 1.0);
  const double direct = x.dot(Q * x) + q.dot(x) + 1.0;
  EXPECT_DOUBLE_EQ(direct, 3.0);
  EXPECT_NEAR(f.eval(x), direct, 1e-15);
}

TEST(QuadraticTest, BlockRoundTrip) {
  Eigen::Matrix2d Q;
  Q << 4, 1, 1, 3;
  const Eigen::Vector2d q(-1, 2);
  QuadraticFunction f = QuadraticFunction::from_blocks(Q, q, 7.0);
  EXPECT_TRUE(f.Q().isApprox(Q));
  EXPECT_TRUE(f.q().isApprox(q));
  EXPECT_DOUBLE_EQ(f.c(), 7.0);
  EXPECT_EQ(f.dim(), 2);
}

TEST(QuadraticTest, ConvexityCheck) {
  Eigen::Matrix2d indefinite;
  indefinite << 1, 0, 0, -1;
  QuadraticFunction f =
      QuadraticFunction::from_blocks(indefinite, Eigen::Vector2d::Zero(), 0.0);
  EXPECT_FALSE(f.is_convex());
  EXPECT_TRUE(QuadraticFunction::zero(2).is_convex());
}

TEST(QuadraticTest, DimensionMismatchThrows) {
  QuadraticFunction f = QuadraticFunction::zero(2);
  EXPECT_THROW(f.eval(Eigen::Vector3d::Zero()), std::invalid_argument);
}

TEST(QuadraticTest, AsymmetricHThrows) {
  Eigen::Matrix2d H;
  H << 1, 2, 0, 1;
  EXPECT_THROW(QuadraticFunction{H}, std::invalid_argument);
}

TEST(QuadraticTest, LiftPreservesValues) {
  QuadraticFunction f =
      QuadraticFunction::from_blocks(Eigen::Matrix2d::Identity(), Eigen::Vector2d(1, -1), 0.5);
  QuadraticFunction lifted = f.lifted(5, 2);
  Eigen::VectorXd y(5);
  y << 9, 9, 0.3, -0.7, 9;
  EXPECT_NEAR(lifted.eval(y), f.eval(Eigen::Vector2d(0.3, -0.7)), 1e-14);
}

TEST(QuadraticTest, PlusConstant) {
  QuadraticFunction f = QuadraticFunction::zero(1);
  EXPECT_DOUBLE_EQ(f.plus_constant(1e-4).eval(Eigen::VectorXd::Zero(1)), 1e-4);
  // Offsets add when applied twice.
  EXPECT_DOUBLE_EQ(f.plus_constant(0.25).plus_constant(0.5).c(), 0.75);
}

}  // namespace
}  // namespace swgcs
