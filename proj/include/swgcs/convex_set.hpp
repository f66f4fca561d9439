#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace swgcs {

/// Immutable convex set over R^dim. One of: a singleton point, a bounded
/// polyhedron {x : Ax <= b}, an ellipsoid {x : (x-c)'E(x-c) <= 1}, an
/// intersection of same-dimension sets, or a Cartesian product.
///
/// Polyhedra are required to be nonempty and bounded; this is checked at
/// construction with 2*dim bounding LPs. Copies share storage.
class ConvexSet {
 public:
  enum class Kind { kPoint, kPolyhedron, kEllipsoid, kIntersection, kProduct };

  /// Zero-dimensional point; placeholder for members assigned later.
  ConvexSet() : ConvexSet(point(Eigen::VectorXd(0))) {}

  static ConvexSet point(Eigen::VectorXd p);
  static ConvexSet polyhedron(Eigen::MatrixXd A, Eigen::VectorXd b);
  /// Like polyhedron() but without the boundedness/nonemptiness check, for
  /// edge coupling constraints (equalities as paired rows). Such a set must
  /// always be intersected with compact sets before use as a vertex set.
  static ConvexSet halfspaces(Eigen::MatrixXd A, Eigen::VectorXd b);
  static ConvexSet box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper);
  static ConvexSet ellipsoid(Eigen::VectorXd center, Eigen::MatrixXd shape);
  static ConvexSet intersection(std::vector<ConvexSet> members);
  static ConvexSet product(std::vector<ConvexSet> factors);

  Kind kind() const;
  int dim() const;
  bool contains(const Eigen::VectorXd& x, double tol) const;

  /// Constraints of the set flattened over its ambient space. Singleton
  /// points contribute equalities, polyhedra inequalities, ellipsoids one
  /// quadratic block acting on a contiguous coordinate slice.
  struct EllipsoidBlock {
    int offset = 0;
    Eigen::VectorXd center;
    Eigen::MatrixXd shape;
  };
  struct Description {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::MatrixXd A_eq;
    Eigen::VectorXd b_eq;
    std::vector<EllipsoidBlock> ellipsoids;
  };
  const Description& description() const;

  // Componentwise bounding box; entries may be infinite only for degenerate
  // ellipsoids not tightened by other members.
  const Eigen::VectorXd& box_lower() const;
  const Eigen::VectorXd& box_upper() const;

  // Leaf / composite accessors (valid for the matching kind only).
  const Eigen::VectorXd& point_value() const;
  const Eigen::MatrixXd& polyhedron_A() const;
  const Eigen::VectorXd& polyhedron_b() const;
  const Eigen::VectorXd& ellipsoid_center() const;
  const Eigen::MatrixXd& ellipsoid_shape() const;
  const std::vector<ConvexSet>& members() const;

 private:
  struct Data;
  explicit ConvexSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static ConvexSet make_polyhedron(Eigen::MatrixXd A, Eigen::VectorXd b, bool require_compact);
  std::shared_ptr<const Data> data_;
};

}  // namespace swgcs
