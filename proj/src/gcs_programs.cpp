#include "swgcs/gcs_programs.hpp"

#include <stdexcept>

namespace swgcs {

std::vector<ConicProgram::AffineRow> variable_rows(int first_var, int dim) {
  std::vector<ConicProgram::AffineRow> rows(dim);
  for (int i = 0; i < dim; ++i) rows[i].terms.push_back({first_var + i, 1.0});
  return rows;
}

std::vector<ConicProgram::AffineRow> constant_rows(const Eigen::VectorXd& point) {
  std::vector<ConicProgram::AffineRow> rows(point.size());
  for (int i = 0; i < point.size(); ++i) rows[i].constant = point(i);
  return rows;
}

namespace {

ConicProgram::AffineRow combine(const std::vector<ConicProgram::AffineRow>& z,
                                const Eigen::VectorXd& coeffs, double constant) {
  ConicProgram::AffineRow out;
  out.constant = constant;
  for (int i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i) == 0.0) continue;
    for (const auto& t : z[i].terms) out.terms.push_back({t.var, coeffs(i) * t.coeff});
    out.constant += coeffs(i) * z[i].constant;
  }
  return out;
}

}  // namespace

void add_membership_constraints(ConicProgram& program, const ConvexSet& set,
                                const std::vector<ConicProgram::AffineRow>& z) {
  if (static_cast<int>(z.size()) != set.dim()) {
    throw std::invalid_argument("add_membership_constraints: dimension mismatch");
  }
  const ConvexSet::Description& desc = set.description();
  for (int i = 0; i < desc.A.rows(); ++i) {
    program.add_inequality(combine(z, desc.A.row(i), -desc.b(i)));
  }
  for (int i = 0; i < desc.A_eq.rows(); ++i) {
    program.add_equality(combine(z, desc.A_eq.row(i), -desc.b_eq(i)));
  }
  for (const ConvexSet::EllipsoidBlock& e : desc.ellipsoids) {
    const int k = static_cast<int>(e.center.size());
    std::vector<ConicProgram::AffineRow> slice(z.begin() + e.offset, z.begin() + e.offset + k);
    // (y - c)'E(y - c) <= 1  ->  y'Ey - 2c'Ey + c'Ec - 1 <= 0.
    program.add_convex_quadratic_le(e.shape, -2.0 * (e.shape * e.center),
                                    e.center.dot(e.shape * e.center) - 1.0, slice);
  }
}

void add_quadratic_cost(ConicProgram& program, const QuadraticFunction& f,
                        const std::vector<ConicProgram::AffineRow>& z) {
  if (static_cast<int>(z.size()) != f.dim()) {
    throw std::invalid_argument("add_quadratic_cost: dimension mismatch");
  }
  const Eigen::MatrixXd Q = f.Q();
  const Eigen::VectorXd q = f.q();
  program.add_objective_constant(f.c());

  // Expand z'Qz + q'z with affine z_i = sum_a t_ia x_a + c_i.
  for (int i = 0; i < f.dim(); ++i) {
    const double qi = q(i);
    if (qi != 0.0) {
      for (const auto& t : z[i].terms) program.add_linear_objective(t.var, qi * t.coeff);
      program.add_objective_constant(qi * z[i].constant);
    }
  }
  for (int i = 0; i < f.dim(); ++i) {
    for (int j = 0; j < f.dim(); ++j) {
      const double qij = Q(i, j);
      if (qij == 0.0) continue;
      for (const auto& ti : z[i].terms) {
        for (const auto& tj : z[j].terms) {
          program.add_quadratic_objective(ti.var, tj.var, qij * ti.coeff * tj.coeff);
        }
        if (z[j].constant != 0.0) {
          program.add_linear_objective(ti.var, qij * ti.coeff * z[j].constant);
        }
      }
      if (z[i].constant != 0.0) {
        for (const auto& tj : z[j].terms) {
          program.add_linear_objective(tj.var, qij * z[i].constant * tj.coeff);
        }
        program.add_objective_constant(qij * z[i].constant * z[j].constant);
      }
    }
  }
}

RestrictionProgram build_restriction(const Gcs& g, const std::vector<std::string>& walk,
                                     const std::vector<std::string>& edge_ids,
                                     const std::optional<Eigen::VectorXd>& start_point,
                                     const std::optional<Eigen::VectorXd>& end_point) {
  const size_t n = walk.size();
  if (n < 2 || edge_ids.size() != n - 1) {
    throw std::invalid_argument("build_restriction: inconsistent walk/edge sizes");
  }
  RestrictionProgram out;
  ConicProgram& p = out.program;
  out.point_offsets.reserve(n);
  for (const std::string& vid : walk) {
    out.point_offsets.push_back(p.add_variables(g.vertex(vid).set.dim()));
  }

  auto point_rows = [&](size_t k) {
    return variable_rows(out.point_offsets[k], g.vertex(walk[k]).set.dim());
  };

  for (size_t k = 0; k < n; ++k) {
    add_quadratic_cost(p, g.vertex(walk[k]).cost, point_rows(k));
  }
  for (size_t k = 1; k < n; ++k) {
    const Edge& e = g.edge(edge_ids[k - 1]);
    if (e.tail != walk[k - 1] || e.head != walk[k]) {
      throw std::invalid_argument("build_restriction: edge '" + e.id + "' does not match walk");
    }
    std::vector<ConicProgram::AffineRow> pair = point_rows(k - 1);
    std::vector<ConicProgram::AffineRow> head = point_rows(k);
    pair.insert(pair.end(), head.begin(), head.end());
    add_quadratic_cost(p, e.cost, pair);
    add_membership_constraints(p, e.set, pair);
  }

  auto pin = [&](size_t k, const Eigen::VectorXd& value) {
    const int d = g.vertex(walk[k]).set.dim();
    if (value.size() != d) throw std::invalid_argument("build_restriction: pin size mismatch");
    for (int i = 0; i < d; ++i) {
      ConicProgram::AffineRow row;
      row.terms.push_back({out.point_offsets[k] + i, 1.0});
      row.constant = -value(i);
      p.add_equality(std::move(row));
    }
  };
  if (start_point) pin(0, *start_point);
  if (end_point) pin(n - 1, *end_point);
  return out;
}

WalkSolution extract_restriction_solution(const Gcs& g, const std::vector<std::string>& walk,
                                          const std::vector<std::string>& edge_ids,
                                          const RestrictionProgram& restriction,
                                          const SolveReport& report) {
  if (!report.optimal()) {
    throw std::logic_error("extract_restriction_solution: report is not optimal");
  }
  WalkSolution sol;
  sol.walk = walk;
  sol.edge_ids = edge_ids;
  for (size_t k = 0; k < walk.size(); ++k) {
    const int d = g.vertex(walk[k]).set.dim();
    sol.trajectory.push_back(report.primal.segment(restriction.point_offsets[k], d));
  }
  sol.cost = walk_cost(g, sol);
  return sol;
}

RestrictionResult solve_walk_restriction(const Gcs& g, const std::vector<std::string>& walk,
                                         const SolveSettings& settings) {
  WalkValidation validation = validate_walk(g, walk);
  if (!validation.ok) {
    throw std::invalid_argument("solve_walk_restriction: " + validation.message);
  }
  RestrictionProgram restriction =
      build_restriction(g, walk, validation.edge_ids, g.source_point(), g.target_point());
  RestrictionResult out;
  out.report = solve(restriction.program, settings);
  if (out.report.optimal()) {
    out.solution = extract_restriction_solution(g, walk, validation.edge_ids, restriction,
                                                out.report);
  }
  return out;
}

}  // namespace swgcs
