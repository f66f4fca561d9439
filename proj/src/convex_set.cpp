#include "swgcs/convex_set.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "swgcs/conic.hpp"

namespace swgcs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

struct ConvexSet::Data {
  Kind kind;
  int dim = 0;

  // Leaves.
  Eigen::VectorXd point;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd center;
  Eigen::MatrixXd shape;

  // Composites.
  std::vector<ConvexSet> members;

  Description description;
  Eigen::VectorXd box_lower;
  Eigen::VectorXd box_upper;
};

namespace {

// min/max of coordinate `coord` over {Ax <= b}; used for the construction-time
// boundedness check.
struct CoordRange {
  double lower;
  double upper;
  bool bounded;
  bool feasible;
};

CoordRange coordinate_range(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int coord) {
  CoordRange out{0.0, 0.0, true, true};
  for (int direction = 0; direction < 2; ++direction) {
    ConicProgram program;
    const int x = program.add_variables(static_cast<int>(A.cols()));
    program.add_linear_objective(x + coord, direction == 0 ? 1.0 : -1.0);
    for (int i = 0; i < A.rows(); ++i) {
      ConicProgram::AffineRow row;
      row.constant = -b(i);
      for (int j = 0; j < A.cols(); ++j) {
        if (A(i, j) != 0.0) row.terms.push_back({x + j, A(i, j)});
      }
      program.add_inequality(std::move(row));
    }
    SolveReport report = solve(program);
    if (report.status == SolveStatus::kUnbounded) {
      out.bounded = false;
      return out;
    }
    if (report.status == SolveStatus::kInfeasible) {
      out.feasible = false;
      return out;
    }
    if (!report.optimal()) {
      throw std::runtime_error("ConvexSet: bounding LP failed (" + report.solver_status + ")");
    }
    if (direction == 0) {
      out.lower = report.primal(coord);
    } else {
      out.upper = report.primal(coord);
    }
  }
  return out;
}

Eigen::MatrixXd stack_rows(const Eigen::MatrixXd& top, const Eigen::MatrixXd& bottom, int cols) {
  Eigen::MatrixXd out(top.rows() + bottom.rows(), cols);
  if (top.rows() > 0) out.topRows(top.rows()) = top;
  if (bottom.rows() > 0) out.bottomRows(bottom.rows()) = bottom;
  return out;
}

Eigen::VectorXd stack_vec(const Eigen::VectorXd& top, const Eigen::VectorXd& bottom) {
  Eigen::VectorXd out(top.size() + bottom.size());
  if (top.size() > 0) out.head(top.size()) = top;
  if (bottom.size() > 0) out.tail(bottom.size()) = bottom;
  return out;
}

}  // namespace

ConvexSet ConvexSet::point(Eigen::VectorXd p) {
  auto data = std::make_shared<Data>();
  data->kind = Kind::kPoint;
  data->dim = static_cast<int>(p.size());
  data->point = std::move(p);
  const int n = data->dim;
  data->description.A.resize(0, n);
  data->description.b.resize(0);
  data->description.A_eq = Eigen::MatrixXd::Identity(n, n);
  data->description.b_eq = data->point;
  data->box_lower = data->point;
  data->box_upper = data->point;
  return ConvexSet(std::move(data));
}

ConvexSet ConvexSet::polyhedron(Eigen::MatrixXd A, Eigen::VectorXd b) {
  return make_polyhedron(std::move(A), std::move(b), /*require_compact=*/true);
}

ConvexSet ConvexSet::halfspaces(Eigen::MatrixXd A, Eigen::VectorXd b) {
  return make_polyhedron(std::move(A), std::move(b), /*require_compact=*/false);
}

ConvexSet ConvexSet::make_polyhedron(Eigen::MatrixXd A, Eigen::VectorXd b, bool require_compact) {
  if (A.rows() != b.size()) {
    throw std::invalid_argument("ConvexSet: polyhedron A/b row mismatch");
  }
  if (A.rows() == 0 || A.cols() == 0) {
    throw std::invalid_argument("ConvexSet: polyhedron needs at least one row and column");
  }
  for (int i = 0; i < A.rows(); ++i) {
    if (A.row(i).cwiseAbs().maxCoeff() <= 1e-12) {
      throw std::invalid_argument("ConvexSet: polyhedron row " + std::to_string(i) +
                                  " has a zero normal");
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::kPolyhedron;
  data->dim = static_cast<int>(A.cols());
  data->A = std::move(A);
  data->b = std::move(b);

  const int n = data->dim;
  data->box_lower.resize(n);
  data->box_upper.resize(n);
  for (int j = 0; j < n; ++j) {
    CoordRange range = coordinate_range(data->A, data->b, j);
    if (!range.feasible) {
      throw std::invalid_argument("ConvexSet: polyhedron is empty");
    }
    if (!range.bounded) {
      if (require_compact) {
        throw std::invalid_argument("ConvexSet: polyhedron is unbounded along coordinate " +
                                    std::to_string(j));
      }
      data->box_lower(j) = -kInf;
      data->box_upper(j) = kInf;
      continue;
    }
    data->box_lower(j) = range.lower;
    data->box_upper(j) = range.upper;
  }

  data->description.A = data->A;
  data->description.b = data->b;
  data->description.A_eq.resize(0, n);
  data->description.b_eq.resize(0);
  return ConvexSet(std::move(data));
}

ConvexSet ConvexSet::box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
  const int n = static_cast<int>(lower.size());
  if (upper.size() != n) throw std::invalid_argument("ConvexSet: box bound size mismatch");
  if (((upper - lower).array() < 0).any()) {
    throw std::invalid_argument("ConvexSet: box with lower > upper");
  }
  Eigen::MatrixXd A(2 * n, n);
  Eigen::VectorXd b(2 * n);
  A.topRows(n) = Eigen::MatrixXd::Identity(n, n);
  A.bottomRows(n) = -Eigen::MatrixXd::Identity(n, n);
  b.head(n) = upper;
  b.tail(n) = -lower;
  return polyhedron(std::move(A), std::move(b));
}

ConvexSet ConvexSet::ellipsoid(Eigen::VectorXd center, Eigen::MatrixXd shape) {
  const int n = static_cast<int>(center.size());
  if (shape.rows() != n || shape.cols() != n) {
    throw std::invalid_argument("ConvexSet: ellipsoid center/shape mismatch");
  }
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() >
      1e-9 * std::max(1.0, shape.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("ConvexSet: ellipsoid shape must be symmetric");
  }
  shape = 0.5 * (shape + shape.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(shape);
  if (eig.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("ConvexSet: ellipsoid shape must be PSD");
  }

  auto data = std::make_shared<Data>();
  data->kind = Kind::kEllipsoid;
  data->dim = n;
  data->center = std::move(center);
  data->shape = std::move(shape);

  // Box from the inverse shape where the ellipsoid is nondegenerate:
  // half-width along axis j is sqrt((E^-1)_jj).
  data->box_lower.resize(n);
  data->box_upper.resize(n);
  const Eigen::VectorXd& evals = eig.eigenvalues();
  const Eigen::MatrixXd& evecs = eig.eigenvectors();
  for (int j = 0; j < n; ++j) {
    double inv_jj = 0.0;
    bool degenerate = false;
    for (int k = 0; k < n; ++k) {
      if (evals(k) <= 1e-12) {
        if (std::abs(evecs(j, k)) > 1e-10) degenerate = true;
        continue;
      }
      inv_jj += evecs(j, k) * evecs(j, k) / evals(k);
    }
    const double half_width = degenerate ? kInf : std::sqrt(std::max(0.0, inv_jj));
    data->box_lower(j) = data->center(j) - half_width;
    data->box_upper(j) = data->center(j) + half_width;
  }

  data->description.A.resize(0, n);
  data->description.b.resize(0);
  data->description.A_eq.resize(0, n);
  data->description.b_eq.resize(0);
  data->description.ellipsoids.push_back({0, data->center, data->shape});
  return ConvexSet(std::move(data));
}

ConvexSet ConvexSet::intersection(std::vector<ConvexSet> members) {
  if (members.empty()) throw std::invalid_argument("ConvexSet: empty intersection");
  const int n = members.front().dim();
  for (const ConvexSet& member : members) {
    if (member.dim() != n) {
      throw std::invalid_argument("ConvexSet: intersection members must share a dimension");
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = Kind::kIntersection;
  data->dim = n;
  data->members = std::move(members);

  Description& desc = data->description;
  desc.A.resize(0, n);
  desc.b.resize(0);
  desc.A_eq.resize(0, n);
  desc.b_eq.resize(0);
  data->box_lower = Eigen::VectorXd::Constant(n, -kInf);
  data->box_upper = Eigen::VectorXd::Constant(n, kInf);
  for (const ConvexSet& member : data->members) {
    const Description& md = member.description();
    desc.A = stack_rows(desc.A, md.A, n);
    desc.b = stack_vec(desc.b, md.b);
    desc.A_eq = stack_rows(desc.A_eq, md.A_eq, n);
    desc.b_eq = stack_vec(desc.b_eq, md.b_eq);
    for (const EllipsoidBlock& e : md.ellipsoids) desc.ellipsoids.push_back(e);
    data->box_lower = data->box_lower.cwiseMax(member.box_lower());
    data->box_upper = data->box_upper.cwiseMin(member.box_upper());
  }
  return ConvexSet(std::move(data));
}

ConvexSet ConvexSet::product(std::vector<ConvexSet> factors) {
  if (factors.empty()) throw std::invalid_argument("ConvexSet: empty product");
  int n = 0;
  for (const ConvexSet& factor : factors) n += factor.dim();

  auto data = std::make_shared<Data>();
  data->kind = Kind::kProduct;
  data->dim = n;
  data->members = std::move(factors);

  Description& desc = data->description;
  desc.A.resize(0, n);
  desc.b.resize(0);
  desc.A_eq.resize(0, n);
  desc.b_eq.resize(0);
  data->box_lower.resize(n);
  data->box_upper.resize(n);
  int offset = 0;
  for (const ConvexSet& factor : data->members) {
    const int k = factor.dim();
    const Description& fd = factor.description();
    Eigen::MatrixXd A_shift = Eigen::MatrixXd::Zero(fd.A.rows(), n);
    if (fd.A.rows() > 0) A_shift.middleCols(offset, k) = fd.A;
    desc.A = stack_rows(desc.A, A_shift, n);
    desc.b = stack_vec(desc.b, fd.b);
    Eigen::MatrixXd Aeq_shift = Eigen::MatrixXd::Zero(fd.A_eq.rows(), n);
    if (fd.A_eq.rows() > 0) Aeq_shift.middleCols(offset, k) = fd.A_eq;
    desc.A_eq = stack_rows(desc.A_eq, Aeq_shift, n);
    desc.b_eq = stack_vec(desc.b_eq, fd.b_eq);
    for (EllipsoidBlock e : fd.ellipsoids) {
      e.offset += offset;
      desc.ellipsoids.push_back(std::move(e));
    }
    data->box_lower.segment(offset, k) = factor.box_lower();
    data->box_upper.segment(offset, k) = factor.box_upper();
    offset += k;
  }
  return ConvexSet(std::move(data));
}

ConvexSet::Kind ConvexSet::kind() const { return data_->kind; }
int ConvexSet::dim() const { return data_->dim; }

bool ConvexSet::contains(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dim()) {
    throw std::invalid_argument("ConvexSet: contains() dimension mismatch, expected " +
                                std::to_string(dim()) + ", got " + std::to_string(x.size()));
  }
  const Description& desc = data_->description;
  if (desc.A.rows() > 0 && ((desc.A * x - desc.b).array() > tol).any()) return false;
  if (desc.A_eq.rows() > 0 && (desc.A_eq * x - desc.b_eq).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  for (const EllipsoidBlock& e : desc.ellipsoids) {
    const Eigen::VectorXd d = x.segment(e.offset, e.center.size()) - e.center;
    if (d.dot(e.shape * d) > 1.0 + tol) return false;
  }
  return true;
}

const ConvexSet::Description& ConvexSet::description() const { return data_->description; }
const Eigen::VectorXd& ConvexSet::box_lower() const { return data_->box_lower; }
const Eigen::VectorXd& ConvexSet::box_upper() const { return data_->box_upper; }

namespace {
void require_kind(ConvexSet::Kind actual, ConvexSet::Kind expected, const char* what) {
  if (actual != expected) {
    throw std::logic_error(std::string("ConvexSet: ") + what + " called on wrong kind");
  }
}
}  // namespace

const Eigen::VectorXd& ConvexSet::point_value() const {
  require_kind(kind(), Kind::kPoint, "point_value");
  return data_->point;
}
const Eigen::MatrixXd& ConvexSet::polyhedron_A() const {
  require_kind(kind(), Kind::kPolyhedron, "polyhedron_A");
  return data_->A;
}
const Eigen::VectorXd& ConvexSet::polyhedron_b() const {
  require_kind(kind(), Kind::kPolyhedron, "polyhedron_b");
  return data_->b;
}
const Eigen::VectorXd& ConvexSet::ellipsoid_center() const {
  require_kind(kind(), Kind::kEllipsoid, "ellipsoid_center");
  return data_->center;
}
const Eigen::MatrixXd& ConvexSet::ellipsoid_shape() const {
  require_kind(kind(), Kind::kEllipsoid, "ellipsoid_shape");
  return data_->shape;
}
const std::vector<ConvexSet>& ConvexSet::members() const {
  if (kind() != Kind::kIntersection && kind() != Kind::kProduct) {
    throw std::logic_error("ConvexSet: members() called on a leaf set");
  }
  return data_->members;
}

}  // namespace swgcs
