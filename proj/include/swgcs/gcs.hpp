#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swgcs/convex_set.hpp"
#include "swgcs/quadratic.hpp"

namespace swgcs {

// Default membership tolerance; conic solvers return points accurate to about
// 1e-8, so constraint checks allow 1e-6 slack.
inline constexpr double kMembershipTol = 1e-6;
// Tolerance on smallest eigenvalues for PSD checks.
inline constexpr double kPsdTol = 1e-9;
// Tolerance when comparing costs of two candidate solutions.
inline constexpr double kCostTol = 1e-9;

struct Vertex {
  std::string id;
  ConvexSet set;
  QuadraticFunction cost;  // l_v, dim == set.dim(), convex, nonnegative on the set
};

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  // Constraint set over X_tail x X_head; always contained in the product
  // (the builder intersects any user-supplied coupling set with it).
  ConvexSet set;
  QuadraticFunction cost;  // l_e over the product space
};

/// Directed graph of convex sets with designated source/target vertices and
/// boundary points. Immutable after construction; safe to share across
/// threads.
class Gcs {
 public:
  friend class GcsBuilder;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  /// Out-edges of a vertex, sorted by edge id.
  const std::vector<const Edge*>& out_edges(const std::string& vertex_id) const;
  /// Edges tail -> head sorted by edge id; empty if none.
  std::vector<const Edge*> edges_between(const std::string& tail, const std::string& head) const;

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const Eigen::VectorXd& source_point() const { return source_point_; }
  const Eigen::VectorXd& target_point() const { return target_point_; }

 private:
  Gcs() = default;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
  std::map<std::string, std::vector<const Edge*>> out_edges_;
  std::string source_;
  std::string target_;
  Eigen::VectorXd source_point_;
  Eigen::VectorXd target_point_;
};

class GcsBuilder {
 public:
  GcsBuilder& add_vertex(std::string id, ConvexSet set,
                         std::optional<QuadraticFunction> cost = std::nullopt);
  /// Adds edge tail -> head. The stored edge set is the intersection of
  /// `coupling` (over the product space, optional) with X_tail x X_head.
  /// Self-loops and parallel edges are allowed.
  GcsBuilder& add_edge(std::string id, std::string tail, std::string head,
                       std::optional<ConvexSet> coupling = std::nullopt,
                       std::optional<QuadraticFunction> cost = std::nullopt);
  GcsBuilder& set_source(std::string id, Eigen::VectorXd point);
  GcsBuilder& set_target(std::string id, Eigen::VectorXd point);

  /// Validates and assembles the graph. Checks: unique ids, cost/set
  /// dimension agreement, cost convexity, endpoint membership of the
  /// source/target points.
  Gcs build() const;

 private:
  struct PendingEdge {
    std::string id, tail, head;
    std::optional<ConvexSet> coupling;
    std::optional<QuadraticFunction> cost;
  };
  std::vector<Vertex> vertices_;
  std::vector<PendingEdge> edges_;
  std::string source_, target_;
  Eigen::VectorXd source_point_, target_point_;
};

struct WalkSolution {
  std::vector<std::string> walk;          // v_0 .. v_K
  std::vector<std::string> edge_ids;      // e_1 .. e_K
  std::vector<Eigen::VectorXd> trajectory;  // x_0 .. x_K
  double cost = 0.0;

  int steps() const { return static_cast<int>(walk.size()) - 1; }
};

struct WalkValidation {
  bool ok = false;
  // Chosen edge per step; parallel edges resolve to the lexicographically
  // smallest id.
  std::vector<std::string> edge_ids;
  int error_index = -1;
  std::string message;
};

/// Checks v_0 = source, v_K = target, and that an edge exists for every
/// consecutive pair. Vertex revisits are allowed.
WalkValidation validate_walk(const Gcs& g, const std::vector<std::string>& walk);

/// Sum of vertex and edge costs along the walk. Requires a structurally valid
/// solution (throws std::invalid_argument otherwise).
double walk_cost(const Gcs& g, const WalkSolution& sol);

/// Full validation: structure, boundary points, and edge-set membership of
/// every consecutive trajectory pair. Returns an error message, or nullopt if
/// the solution is valid.
std::optional<std::string> solution_error(const Gcs& g, const WalkSolution& sol,
                                          double tol = kMembershipTol);

/// Copy of the graph with every edge cost shifted by +epsilon. Guarantees
/// every step of any walk costs at least epsilon, which makes optimal walks
/// finite. Requires epsilon > 0.
Gcs apply_epsilon_edge_costs(const Gcs& g, double epsilon);

}  // namespace swgcs
