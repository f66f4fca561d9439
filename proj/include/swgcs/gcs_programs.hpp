#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swgcs/conic.hpp"
#include "swgcs/gcs.hpp"

namespace swgcs {

/// Affine rows selecting a contiguous block of program variables.
std::vector<ConicProgram::AffineRow> variable_rows(int first_var, int dim);
/// Constant affine rows for a fixed point.
std::vector<ConicProgram::AffineRow> constant_rows(const Eigen::VectorXd& point);

/// Emits membership constraints z in S for the affine vector z.
void add_membership_constraints(ConicProgram& program, const ConvexSet& set,
                                const std::vector<ConicProgram::AffineRow>& z);

/// Adds f(z) to the objective for the affine vector z.
void add_quadratic_cost(ConicProgram& program, const QuadraticFunction& f,
                        const std::vector<ConicProgram::AffineRow>& z);

/// Trajectory restriction over a fixed walk: variables are the points
/// x_0..x_K, constrained to the edge sets, with optional endpoint pins.
/// The objective is the walk cost.
struct RestrictionProgram {
  ConicProgram program;
  std::vector<int> point_offsets;  // variable offset of x_k, k = 0..K
};
RestrictionProgram build_restriction(const Gcs& g, const std::vector<std::string>& walk,
                                     const std::vector<std::string>& edge_ids,
                                     const std::optional<Eigen::VectorXd>& start_point,
                                     const std::optional<Eigen::VectorXd>& end_point);

/// Reads the trajectory out of a restriction solve.
WalkSolution extract_restriction_solution(const Gcs& g, const std::vector<std::string>& walk,
                                          const std::vector<std::string>& edge_ids,
                                          const RestrictionProgram& restriction,
                                          const SolveReport& report);

/// Convenience wrapper: validates the walk, solves the restriction with both
/// endpoints pinned to the instance boundary points, and returns the solution
/// when feasible.
struct RestrictionResult {
  SolveReport report;
  std::optional<WalkSolution> solution;
};
RestrictionResult solve_walk_restriction(const Gcs& g, const std::vector<std::string>& walk,
                                         const SolveSettings& settings = {});

}  // namespace swgcs
