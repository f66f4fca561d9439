#include "swgcs/gcs.hpp"

#include <random>

#include <gtest/gtest.h>

#include "swgcs/gcs_programs.hpp"

namespace swgcs {
namespace {

QuadraticFunction StepCost2d() {
  // 1 + ||x_u - x_v||^2 over the 4-dimensional product space.
  Eigen::Matrix4d Q;
  Q << Eigen::Matrix2d::Identity(), -Eigen::Matrix2d::Identity(),
      -Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Identity();
  return QuadraticFunction::from_blocks(Q, Eigen::Vector4d::Zero(), 1.0);
}

Gcs SingleEdgeGraph() {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::Vector2d(0, 0)));
  b.add_vertex("t", ConvexSet::point(Eigen::Vector2d(1, 0)));
  b.add_edge("st", "s", "t", std::nullopt, StepCost2d());
  b.set_source("s", Eigen::Vector2d(0, 0));
  b.set_target("t", Eigen::Vector2d(1, 0));
  return b.build();
}

TEST(GcsTest, SingleEdgeWalkCost) {
  Gcs g = SingleEdgeGraph();
  WalkSolution sol;
  sol.walk = {"s", "t"};
  sol.edge_ids = {"st"};
  sol.trajectory = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)};
  // Edge cost 1 + ||(0,0) - (1,0)||^2 = 2, no vertex costs.
  EXPECT_DOUBLE_EQ(walk_cost(g, sol), 2.0);
  EXPECT_FALSE(solution_error(g, sol).has_value());
}

TEST(GcsTest, ZeroCostsGiveZeroWalkCost) {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::Vector2d(0, 0)));
  b.add_vertex("a", ConvexSet::box(Eigen::Vector2d(-1, -1), Eigen::Vector2d(1, 1)));
  b.add_vertex("t", ConvexSet::point(Eigen::Vector2d(1, 0)));
  b.add_edge("sa", "s", "a");
  b.add_edge("aa", "a", "a");
  b.add_edge("at", "a", "t");
  b.set_source("s", Eigen::Vector2d(0, 0));
  b.set_target("t", Eigen::Vector2d(1, 0));
  Gcs g = b.build();
  WalkSolution sol;
  sol.walk = {"s", "a", "a", "t"};
  sol.edge_ids = {"sa", "aa", "at"};
  sol.trajectory = {Eigen::Vector2d(0, 0), Eigen::Vector2d(0.3, 0), Eigen::Vector2d(0.9, 0.2),
                    Eigen::Vector2d(1, 0)};
  EXPECT_DOUBLE_EQ(walk_cost(g, sol), 0.0);
}

TEST(GcsTest, ValidateWalkWithSelfLoop) {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_vertex("a", ConvexSet::box(Eigen::VectorXd::Constant(1, -1), Eigen::VectorXd::Ones(1)));
  b.add_vertex("b", ConvexSet::box(Eigen::VectorXd::Constant(1, -1), Eigen::VectorXd::Ones(1)));
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_edge("e0_sa", "s", "a");
  b.add_edge("e1_aa", "a", "a");
  b.add_edge("e2_at", "a", "t");
  b.add_edge("e3_sb", "s", "b");
  b.add_edge("e4_bt", "b", "t");
  b.set_source("s", Eigen::VectorXd::Zero(1));
  b.set_target("t", Eigen::VectorXd::Zero(1));
  Gcs g = b.build();

  // Revisits through the self-loop are fine.
  WalkValidation ok = validate_walk(g, {"s", "a", "a", "t"});
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.edge_ids, (std::vector<std::string>{"e0_sa", "e1_aa", "e2_at"}));

  // No self-loop at b: error at step k = 2.
  WalkValidation bad = validate_walk(g, {"s", "b", "b", "t"});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.error_index, 2);

  EXPECT_FALSE(validate_walk(g, {"s", "a"}).ok);    // must end at target
  EXPECT_FALSE(validate_walk(g, {"a", "t"}).ok);    // must start at source
}

TEST(GcsTest, ParallelEdgeTieBreakIsLexicographic) {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_edge("zz", "s", "t");
  b.add_edge("aa", "s", "t");
  b.set_source("s", Eigen::VectorXd::Zero(1));
  b.set_target("t", Eigen::VectorXd::Zero(1));
  Gcs g = b.build();
  WalkValidation v = validate_walk(g, {"s", "t"});
  ASSERT_TRUE(v.ok);
  EXPECT_EQ(v.edge_ids[0], "aa");
}

TEST(GcsTest, SourcePointMembershipEnforced) {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::box(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)));
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_edge("st", "s", "t");
  b.set_source("s", Eigen::VectorXd::Constant(1, 2.0));  // outside [0, 1]
  b.set_target("t", Eigen::VectorXd::Zero(1));
  EXPECT_THROW(b.build(), std::invalid_argument);
}

TEST(GcsTest, EdgeSetContainedInProduct) {
  // Membership in the edge set must imply membership in both vertex sets,
  // because the builder intersects with the product.
  GcsBuilder b;
  b.add_vertex("u", ConvexSet::box(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)));
  b.add_vertex("v", ConvexSet::box(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)));
  // Coupling allows a much larger range; the product must still clip it.
  ConvexSet loose = ConvexSet::box(Eigen::Vector2d(-10, -10), Eigen::Vector2d(10, 10));
  b.add_edge("uv", "u", "v", loose);
  b.set_source("u", Eigen::VectorXd::Constant(1, 0.5));
  b.set_target("v", Eigen::VectorXd::Constant(1, 0.5));
  Gcs g = b.build();

  std::mt19937_64 rng(11);
  auto uniform = [&rng](double lo, double hi) {
    return lo + static_cast<double>(rng() >> 11) * 0x1.0p-53 * (hi - lo);
  };
  const Edge& e = g.edge("uv");
  for (int i = 0; i < 100; ++i) {
    Eigen::Vector2d pair(uniform(-2, 2), uniform(-2, 2));
    if (e.set.contains(pair, 1e-9)) {
      EXPECT_TRUE(g.vertex("u").set.contains(pair.head<1>(), 1e-9));
      EXPECT_TRUE(g.vertex("v").set.contains(pair.tail<1>(), 1e-9));
    }
  }
}

TEST(GcsTest, NonConvexCostRejected) {
  Eigen::MatrixXd Q(1, 1);
  Q << -1.0;
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::box(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)),
               QuadraticFunction::from_blocks(Q, Eigen::VectorXd::Zero(1), 0.0));
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_edge("st", "s", "t");
  b.set_source("s", Eigen::VectorXd::Zero(1));
  b.set_target("t", Eigen::VectorXd::Zero(1));
  EXPECT_THROW(b.build(), std::invalid_argument);
}

TEST(GcsTest, EpsilonShiftsEveryEdgeCost) {
  Gcs g = SingleEdgeGraph();
  Gcs shifted = apply_epsilon_edge_costs(g, 1e-4);
  WalkSolution sol;
  sol.walk = {"s", "t"};
  sol.edge_ids = {"st"};
  sol.trajectory = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)};
  EXPECT_NEAR(walk_cost(shifted, sol), walk_cost(g, sol) + 1e-4, 1e-15);

  // Offsets accumulate when applied twice.
  Gcs twice = apply_epsilon_edge_costs(shifted, 2e-4);
  EXPECT_NEAR(walk_cost(twice, sol), walk_cost(g, sol) + 3e-4, 1e-15);

  EXPECT_THROW(apply_epsilon_edge_costs(g, 0.0), std::invalid_argument);
  EXPECT_THROW(apply_epsilon_edge_costs(g, -1.0), std::invalid_argument);
}

TEST(GcsTest, EpsilonChangesKStepWalkByExactlyKEpsilon) {
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::VectorXd::Zero(1)));
  b.add_vertex("a", ConvexSet::box(Eigen::VectorXd::Constant(1, -1), Eigen::VectorXd::Ones(1)));
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Ones(1)));
  b.add_edge("sa", "s", "a");
  b.add_edge("aa", "a", "a");
  b.add_edge("at", "a", "t");
  b.set_source("s", Eigen::VectorXd::Zero(1));
  b.set_target("t", Eigen::VectorXd::Ones(1));
  Gcs g = b.build();
  Gcs shifted = apply_epsilon_edge_costs(g, 0.125);

  std::mt19937_64 rng(3);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  for (int k = 1; k <= 5; ++k) {
    WalkSolution sol;
    sol.walk.push_back("s");
    sol.trajectory.push_back(Eigen::VectorXd::Zero(1));
    sol.edge_ids.push_back("sa");
    for (int i = 0; i < k; ++i) {
      sol.walk.push_back("a");
      sol.trajectory.push_back(Eigen::VectorXd::Constant(1, uniform()));
      sol.edge_ids.push_back(i + 1 < k ? "aa" : "at");
    }
    sol.walk.push_back("t");
    sol.trajectory.push_back(Eigen::VectorXd::Ones(1));
    const int steps = sol.steps();
    EXPECT_NEAR(walk_cost(shifted, sol) - walk_cost(g, sol), steps * 0.125, 1e-12);
  }
}

TEST(GcsTest, WalkCostAdditiveOverConcatenation) {
  // cost(w1 ∘ w2) = cost(w1) + cost(w2) - l_v(x_join), vertex cost at the
  // join counted once. Exercised on random splits of a random walk.
  GcsBuilder b;
  Eigen::MatrixXd Q(1, 1);
  Q << 1.0;
  QuadraticFunction vcost = QuadraticFunction::from_blocks(Q, Eigen::VectorXd::Zero(1), 0.5);
  b.add_vertex("s", ConvexSet::point(Eigen::VectorXd::Zero(1)), vcost);
  b.add_vertex("a", ConvexSet::box(Eigen::VectorXd::Constant(1, -1), Eigen::VectorXd::Ones(1)),
               vcost);
  b.add_vertex("t", ConvexSet::point(Eigen::VectorXd::Ones(1)), vcost);
  Eigen::Matrix2d Qe;
  Qe << 1, -1, -1, 1;
  QuadraticFunction ecost = QuadraticFunction::from_blocks(Qe, Eigen::Vector2d::Zero(), 1.0);
  b.add_edge("sa", "s", "a", std::nullopt, ecost);
  b.add_edge("aa", "a", "a", std::nullopt, ecost);
  b.add_edge("at", "a", "t", std::nullopt, ecost);
  b.set_source("s", Eigen::VectorXd::Zero(1));
  b.set_target("t", Eigen::VectorXd::Ones(1));
  Gcs g = b.build();

  std::mt19937_64 rng(19);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  WalkSolution sol;
  sol.walk = {"s", "a", "a", "a", "t"};
  sol.edge_ids = {"sa", "aa", "aa", "at"};
  sol.trajectory = {Eigen::VectorXd::Zero(1), Eigen::VectorXd::Constant(1, uniform()),
                    Eigen::VectorXd::Constant(1, uniform()),
                    Eigen::VectorXd::Constant(1, uniform()), Eigen::VectorXd::Ones(1)};
  sol.cost = walk_cost(g, sol);

  for (int split = 1; split < sol.steps(); ++split) {
    // Prefix and suffix share the join point; evaluate both halves directly.
    double prefix = 0.0, suffix = 0.0;
    for (int k = 0; k <= split; ++k) prefix += g.vertex(sol.walk[k]).cost.eval(sol.trajectory[k]);
    for (size_t k = split; k < sol.walk.size(); ++k) {
      suffix += g.vertex(sol.walk[k]).cost.eval(sol.trajectory[k]);
    }
    for (int k = 1; k <= split; ++k) {
      Eigen::VectorXd pair(2);
      pair << sol.trajectory[k - 1], sol.trajectory[k];
      prefix += g.edge(sol.edge_ids[k - 1]).cost.eval(pair);
    }
    for (size_t k = split + 1; k < sol.walk.size(); ++k) {
      Eigen::VectorXd pair(2);
      pair << sol.trajectory[k - 1], sol.trajectory[k];
      suffix += g.edge(sol.edge_ids[k - 1]).cost.eval(pair);
    }
    const double join_cost = g.vertex(sol.walk[split]).cost.eval(sol.trajectory[split]);
    EXPECT_NEAR(prefix + suffix - join_cost, sol.cost, 1e-12);
  }
}

}  // namespace
}  // namespace swgcs
