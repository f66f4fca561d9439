#pragma once

#include <string>
#include <vector>

#include "swgcs/gcs.hpp"

namespace swgcs {

/// Reconstruction of the five-vertex example graph: point source, square
/// region `a` with a self-loop, segment region `b` (no self-loop), stepping
/// point `c`, point target. Every edge costs 1 + ||x_u - x_v||^2; the unit
/// term penalizes steps, the displacement term step length. With
/// `quadratic_cost_only` the unit term is dropped, which makes ever-longer
/// walks profitable (no finite optimum).
Gcs build_fig2_instance(bool quadratic_cost_only = false);

/// Fixed-duration Bezier splines through polyhedral regions. One vertex per
/// region holds the curve's control points; region-to-region edges (and
/// self-loops) impose C0/C1 continuity; derivative limits are enforced on
/// control-point differences, which is conservative by the convex-hull
/// property. Source/target vertices pin position with zero velocity.
struct BezierSpec {
  int state_dim = 2;
  std::vector<ConvexSet> regions;  // polyhedra in R^state_dim
  // Undirected adjacency between region indices; both edge directions and
  // all self-loops are added.
  std::vector<std::pair<int, int>> adjacency;
  int degree = 3;
  double dt = 0.125;
  Eigen::VectorXd vel_limit;  // per-axis, strictly positive
  Eigen::VectorXd acc_limit;
  double time_weight = 1.0;
  double displacement_weight = 1.0;
  Eigen::VectorXd start;  // rest-to-rest endpoints
  Eigen::VectorXd goal;
};
Gcs build_bezier_gcs(const BezierSpec& spec);

/// Discrete-time piecewise-affine optimal control. Mode vertices carry
/// X_i = S_i x A with the stage cost as vertex cost; mode-to-mode edges exist
/// iff a one-step transition is feasible and carry the tail mode's dynamics
/// as equality constraints. The source vertex pins the initial state (its
/// out-edges copy the state; the first control is chosen at the first mode
/// vertex), the target vertex pins the final state.
struct PwaMode {
  std::string name;
  ConvexSet state_set;  // polyhedral S_i
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::VectorXd c;
  QuadraticFunction stage_cost;  // over (state, control)
};
struct PwaSpec {
  std::vector<PwaMode> modes;
  ConvexSet control_set;  // shared control polyhedron
  Eigen::VectorXd source_state;
  Eigen::VectorXd target_state;
};
Gcs build_pwa_gcs(const PwaSpec& spec);

/// Replay check for PWA solutions: pushes the returned controls through the
/// true piecewise map and reports the worst per-step state residual plus
/// whether every visited state lies in its mode's set.
struct PwaReplayReport {
  double max_dynamics_residual = 0.0;
  bool states_in_mode_sets = true;
};
PwaReplayReport replay_pwa_solution(const PwaSpec& spec, const Gcs& g, const WalkSolution& sol,
                                    double tol = kMembershipTol);

/// Skill chaining: one vertex per skill with X = Q_pi (feasible transition
/// set in R^{2n}) and cost c_pi; an edge connects two skills iff chaining is
/// feasible, and equates the end configuration of the first with the start
/// configuration of the second. Source/target vertices pin the boundary
/// configurations.
struct Skill {
  std::string name;
  ConvexSet transitions;  // Q_pi over (q, q')
  QuadraticFunction cost;
};
struct SkillSpec {
  int config_dim = 1;
  std::vector<Skill> skills;
  Eigen::VectorXd start;
  Eigen::VectorXd goal;
};
Gcs build_skill_gcs(const SkillSpec& spec);

// Shipped example specs (fixed parameters, used by tests and the data files).
PwaSpec make_pendulum_spec();
BezierSpec make_corridor_spec();
SkillSpec make_gripper_spec();

}  // namespace swgcs
