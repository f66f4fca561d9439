#include "swgcs/conic.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

namespace swgcs {
namespace {

ConicProgram::AffineRow Row(std::vector<ConicProgram::LinTerm> terms, double constant = 0.0) {
  return {std::move(terms), constant};
}

TEST(ConicTest, UnconstrainedQuadratic) {
  // min (x - 1)^2 -> x* = 1, obj 0.
  ConicProgram p;
  const int x = p.add_variables(1);
  p.add_quadratic_objective(x, x, 1.0);
  p.add_linear_objective(x, -2.0);
  p.add_objective_constant(1.0);
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), 1.0, 1e-7);
  EXPECT_NEAR(r.objective, 0.0, 1e-7);
}

TEST(ConicTest, QuadraticWithBound) {
  // min x^2 s.t. x >= 1 -> x* = 1, obj 1.
  ConicProgram p;
  const int x = p.add_variables(1);
  p.add_quadratic_objective(x, x, 1.0);
  p.add_inequality(Row({{x, -1.0}}, 1.0));  // 1 - x <= 0
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), 1.0, 1e-7);
  EXPECT_NEAR(r.objective, 1.0, 1e-7);
  EXPECT_LE(r.max_violation, 1e-6);
}

TEST(ConicTest, TwoByTwoPsd) {
  // max t s.t. [[1, t], [t, 1]] >= 0 -> t* = 1.
  ConicProgram p;
  const int t = p.add_variables(1);
  p.add_linear_objective(t, -1.0);  // maximize t
  const int blk = p.add_psd_block(2);
  p.add_psd_constant(blk, 0, 0, 1.0);
  p.add_psd_constant(blk, 1, 1, 1.0);
  p.add_psd_term(blk, 0, 1, t, 1.0);
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), 1.0, 1e-6);
}

TEST(ConicTest, ThreeByThreePsdCorner) {
  // max t s.t. [[1,0,t],[0,1,0],[t,0,1]] >= 0 -> t* = 1. Exercises the svec
  // layout with a non-adjacent off-diagonal entry.
  ConicProgram p;
  const int t = p.add_variables(1);
  p.add_linear_objective(t, -1.0);
  const int blk = p.add_psd_block(3);
  for (int i = 0; i < 3; ++i) p.add_psd_constant(blk, i, i, 1.0);
  p.add_psd_term(blk, 0, 2, t, 1.0);
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), 1.0, 1e-6);
  // Certificate-style re-assembly must agree.
  Eigen::MatrixXd m = p.psd_block_value_at(blk, r.primal);
  EXPECT_NEAR(m(0, 2), r.primal(0), 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-7);
}

TEST(ConicTest, InfeasibleReportedNotThrown) {
  // x >= 1 and x <= 0.
  ConicProgram p;
  const int x = p.add_variables(1);
  p.add_inequality(Row({{x, -1.0}}, 1.0));
  p.add_inequality(Row({{x, 1.0}}, 0.0));
  SolveReport r = solve(p);
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  EXPECT_EQ(r.primal.size(), 0);
  EXPECT_TRUE(std::isnan(r.objective));
}

TEST(ConicTest, UnboundedReported) {
  // min x with x <= 0 only.
  ConicProgram p;
  const int x = p.add_variables(1);
  p.add_linear_objective(x, 1.0);
  p.add_inequality(Row({{x, 1.0}}, 0.0));
  SolveReport r = solve(p);
  EXPECT_EQ(r.status, SolveStatus::kUnbounded);
}

TEST(ConicTest, SecondOrderCone) {
  // min x + y s.t. ||(x, y)|| <= 1 -> x = y = -1/sqrt(2).
  ConicProgram p;
  const int v = p.add_variables(2);
  p.add_linear_objective(v, 1.0);
  p.add_linear_objective(v + 1, 1.0);
  p.add_second_order_cone({Row({}, 1.0), Row({{v, 1.0}}), Row({{v + 1, 1.0}})});
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), -std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(r.primal(1), -std::sqrt(0.5), 1e-6);
}

TEST(ConicTest, ConvexQuadraticConstraint) {
  // min x + y s.t. x^2 + y^2 <= 1, via the quadratic-constraint helper.
  ConicProgram p;
  const int v = p.add_variables(2);
  p.add_linear_objective(v, 1.0);
  p.add_linear_objective(v + 1, 1.0);
  p.add_convex_quadratic_le(Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero(), -1.0,
                            {Row({{v, 1.0}}), Row({{v + 1, 1.0}})});
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0) + r.primal(1), -std::sqrt(2.0), 1e-6);
  EXPECT_LE(r.max_violation, 1e-6);
}

TEST(ConicTest, TwoStepTrajectoryRestriction) {
  // Midpoint of a 2-step chain (0,0) -> m -> (2,0) with cost sum ||dx||^2 and
  // m free in a large box: optimum at m = (1,0) with objective 2.
  ConicProgram p;
  const int m = p.add_variables(2);
  // ||m - (0,0)||^2 + ||(2,0) - m||^2 = 2 m'm - 4 m_x + 4.
  p.add_quadratic_objective(m, m, 2.0);
  p.add_quadratic_objective(m + 1, m + 1, 2.0);
  p.add_linear_objective(m, -4.0);
  p.add_objective_constant(4.0);
  for (int i = 0; i < 2; ++i) {
    p.add_inequality(Row({{m + i, 1.0}}, -100.0));
    p.add_inequality(Row({{m + i, -1.0}}, -100.0));
  }
  SolveReport r = solve(p);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.primal(0), 1.0, 1e-6);
  EXPECT_NEAR(r.primal(1), 0.0, 1e-6);
  EXPECT_NEAR(r.objective, 2.0, 1e-6);
}

TEST(ConicTest, BatchMatchesSequentialBitwise) {
  std::vector<ConicProgram> programs;
  for (int k = 0; k < 10; ++k) {
    ConicProgram p;
    const int x = p.add_variables(1);
    p.add_quadratic_objective(x, x, 1.0);
    p.add_linear_objective(x, -2.0 * k);
    p.add_inequality(Row({{x, -1.0}}, 0.5));  // x >= 0.5
    programs.push_back(std::move(p));
  }
  SolveSettings sequential;
  sequential.jobs = 1;
  SolveSettings parallel;
  parallel.jobs = 4;
  auto a = solve_batch(programs, sequential);
  auto b = solve_batch(programs, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].status, b[i].status);
    ASSERT_EQ(a[i].iterations, b[i].iterations);
    // Bitwise identical primal and objective.
    ASSERT_EQ(a[i].primal.size(), b[i].primal.size());
    for (int j = 0; j < a[i].primal.size(); ++j) {
      EXPECT_EQ(a[i].primal(j), b[i].primal(j));
    }
    EXPECT_EQ(a[i].objective, b[i].objective);
  }
}

TEST(ConicTest, EmptyBatch) {
  EXPECT_TRUE(solve_batch({}).empty());
}

TEST(ConicTest, IdenticalProgramsIdenticalReports) {
  ConicProgram p;
  const int x = p.add_variables(1);
  p.add_quadratic_objective(x, x, 3.0);
  p.add_inequality(Row({{x, -1.0}}, 2.0));
  std::vector<ConicProgram> programs{p, p};
  auto reports = solve_batch(programs);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].objective, reports[1].objective);
  EXPECT_EQ(reports[0].primal(0), reports[1].primal(0));
  EXPECT_EQ(reports[0].iterations, reports[1].iterations);
}

TEST(ConicTest, DebugDumpWrites) {
  ConicProgram p;
  const int x = p.add_variables(2);
  p.add_quadratic_objective(x, x, 1.0);
  p.add_equality(Row({{x, 1.0}, {x + 1, 1.0}}, -1.0));
  p.add_inequality(Row({{x, -1.0}}));
  std::ostringstream os;
  write_debug_dump(p, os);
  const std::string dump = os.str();
  EXPECT_NE(dump.find("conic-program"), std::string::npos);
  EXPECT_NE(dump.find("vars 2"), std::string::npos);
  EXPECT_NE(dump.find("zero 1"), std::string::npos);
  EXPECT_NE(dump.find("nonneg 1"), std::string::npos);
}

}  // namespace
}  // namespace swgcs
