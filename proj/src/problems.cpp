#include "swgcs/problems.hpp"

#include <stdexcept>
#include <utility>

#include "swgcs/gcs_programs.hpp"

namespace swgcs {

namespace {

// 1 + w * ||x_u - x_v||^2 over the product of two dim-n spaces.
QuadraticFunction step_cost(int n, double unit_term, double weight = 1.0) {
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  Q.topLeftCorner(n, n) = weight * Eigen::MatrixXd::Identity(n, n);
  Q.bottomRightCorner(n, n) = weight * Eigen::MatrixXd::Identity(n, n);
  Q.topRightCorner(n, n) = -weight * Eigen::MatrixXd::Identity(n, n);
  Q.bottomLeftCorner(n, n) = -weight * Eigen::MatrixXd::Identity(n, n);
  return QuadraticFunction::from_blocks(Q, Eigen::VectorXd::Zero(2 * n), unit_term);
}

// Equality rows "lhs block of u-part == rhs block of v-part" as paired
// halfspace rows over the product space.
struct EqualityRows {
  std::vector<Eigen::VectorXd> normals;
  std::vector<double> offsets;
  int dim = 0;

  explicit EqualityRows(int product_dim) : dim(product_dim) {}

  // sum_i coeffs[i] * x[idx[i]] == rhs
  void add(const std::vector<std::pair<int, double>>& terms, double rhs) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
    for (const auto& [idx, coeff] : terms) row(idx) += coeff;
    normals.push_back(row);
    offsets.push_back(rhs);
  }

  ConvexSet as_set() const {
    const int m = static_cast<int>(normals.size());
    Eigen::MatrixXd A(2 * m, dim);
    Eigen::VectorXd b(2 * m);
    for (int i = 0; i < m; ++i) {
      A.row(2 * i) = normals[i].transpose();
      b(2 * i) = offsets[i];
      A.row(2 * i + 1) = -normals[i].transpose();
      b(2 * i + 1) = -offsets[i];
    }
    return ConvexSet::halfspaces(std::move(A), std::move(b));
  }
};

}  // namespace

Gcs build_fig2_instance(bool quadratic_cost_only) {
  const double unit = quadratic_cost_only ? 0.0 : 1.0;
  GcsBuilder b;
  b.add_vertex("s", ConvexSet::point(Eigen::Vector2d(0.0, 0.0)));
  b.add_vertex("a", ConvexSet::box(Eigen::Vector2d(1.0, -1.0), Eigen::Vector2d(3.0, 1.0)));
  // Segment on the midline from (4.2, 0) to (6.8, 0).
  {
    Eigen::MatrixXd A(4, 2);
    A << 1, 0, -1, 0, 0, 1, 0, -1;
    Eigen::VectorXd rhs(4);
    rhs << 6.8, -4.2, 0.0, 0.0;
    b.add_vertex("b", ConvexSet::polyhedron(A, rhs));
  }
  b.add_vertex("c", ConvexSet::point(Eigen::Vector2d(5.5, 0.0)));
  b.add_vertex("t", ConvexSet::point(Eigen::Vector2d(8.5, 0.0)));

  const QuadraticFunction cost = step_cost(2, unit);
  b.add_edge("sa", "s", "a", std::nullopt, cost);
  b.add_edge("aa", "a", "a", std::nullopt, cost);
  b.add_edge("ab", "a", "b", std::nullopt, cost);
  b.add_edge("at", "a", "t", std::nullopt, cost);
  b.add_edge("bc", "b", "c", std::nullopt, cost);
  b.add_edge("bt", "b", "t", std::nullopt, cost);
  b.add_edge("cb", "c", "b", std::nullopt, cost);
  b.add_edge("ct", "c", "t", std::nullopt, cost);

  b.set_source("s", Eigen::Vector2d(0.0, 0.0));
  b.set_target("t", Eigen::Vector2d(8.5, 0.0));
  return b.build();
}

Gcs build_bezier_gcs(const BezierSpec& spec) {
  const int m = spec.state_dim;
  const int d = spec.degree;
  if (m < 1 || d < 2) {
    throw std::invalid_argument("build_bezier_gcs: need state_dim >= 1 and degree >= 2");
  }
  if (spec.dt <= 0.0) throw std::invalid_argument("build_bezier_gcs: dt must be positive");
  if (spec.vel_limit.size() != m || spec.acc_limit.size() != m ||
      (spec.vel_limit.array() <= 0).any() || (spec.acc_limit.array() <= 0).any()) {
    throw std::invalid_argument("build_bezier_gcs: limits must be strictly positive per axis");
  }
  if (spec.start.size() != m || spec.goal.size() != m) {
    throw std::invalid_argument("build_bezier_gcs: start/goal dimension mismatch");
  }
  const int num_points = d + 1;
  const int vdim = m * num_points;
  const auto coord = [m](int point, int axis) { return m * point + axis; };

  GcsBuilder builder;
  builder.add_vertex("src", ConvexSet::point(spec.start));

  // One vertex per region: control points inside the region, velocity and
  // acceleration control points inside their boxes.
  for (size_t r = 0; r < spec.regions.size(); ++r) {
    const ConvexSet& region = spec.regions[r];
    if (region.dim() != m) {
      throw std::invalid_argument("build_bezier_gcs: region dimension mismatch");
    }
    const ConvexSet::Description& desc = region.description();
    if (desc.A_eq.rows() > 0 || !desc.ellipsoids.empty()) {
      throw std::invalid_argument("build_bezier_gcs: regions must be polyhedra");
    }
    const int rows_per_point = static_cast<int>(desc.A.rows());
    const int vel_rows = 2 * m * d;
    const int acc_rows = 2 * m * (d - 1);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows_per_point * num_points + vel_rows + acc_rows,
                                              vdim);
    Eigen::VectorXd rhs(A.rows());
    int cursor = 0;
    for (int p = 0; p < num_points; ++p) {
      A.block(cursor, m * p, rows_per_point, m) = desc.A;
      rhs.segment(cursor, rows_per_point) = desc.b;
      cursor += rows_per_point;
    }
    // Velocity control points: d * (p_{i+1} - p_i) / dt componentwise in
    // [-vel, vel].
    const double vel_scale = d / spec.dt;
    for (int i = 0; i < d; ++i) {
      for (int axis = 0; axis < m; ++axis) {
        A(cursor, coord(i + 1, axis)) = vel_scale;
        A(cursor, coord(i, axis)) = -vel_scale;
        rhs(cursor++) = spec.vel_limit(axis);
        A(cursor, coord(i + 1, axis)) = -vel_scale;
        A(cursor, coord(i, axis)) = vel_scale;
        rhs(cursor++) = spec.vel_limit(axis);
      }
    }
    // Acceleration control points: d(d-1) * (p_{i+2} - 2 p_{i+1} + p_i) / dt^2.
    const double acc_scale = d * (d - 1) / (spec.dt * spec.dt);
    for (int i = 0; i + 2 <= d; ++i) {
      for (int axis = 0; axis < m; ++axis) {
        A(cursor, coord(i + 2, axis)) = acc_scale;
        A(cursor, coord(i + 1, axis)) = -2 * acc_scale;
        A(cursor, coord(i, axis)) = acc_scale;
        rhs(cursor++) = spec.acc_limit(axis);
        A(cursor, coord(i + 2, axis)) = -acc_scale;
        A(cursor, coord(i + 1, axis)) = 2 * acc_scale;
        A(cursor, coord(i, axis)) = -acc_scale;
        rhs(cursor++) = spec.acc_limit(axis);
      }
    }

    // Vertex cost: fixed time per visit plus control-point displacement.
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(vdim, vdim);
    for (int i = 0; i < d; ++i) {
      for (int axis = 0; axis < m; ++axis) {
        const int a0 = coord(i, axis);
        const int a1 = coord(i + 1, axis);
        Q(a0, a0) += spec.displacement_weight;
        Q(a1, a1) += spec.displacement_weight;
        Q(a0, a1) -= spec.displacement_weight;
        Q(a1, a0) -= spec.displacement_weight;
      }
    }
    QuadraticFunction cost = QuadraticFunction::from_blocks(Q, Eigen::VectorXd::Zero(vdim),
                                                            spec.time_weight * spec.dt);
    builder.add_vertex("r" + std::to_string(r), ConvexSet::polyhedron(A, rhs), cost);
  }
  builder.add_vertex("tgt", ConvexSet::point(spec.goal));

  // Region-to-region edges (both directions plus self-loops) impose C0 and
  // C1 continuity on the boundary control points.
  auto add_continuity_edge = [&](size_t from, size_t to) {
    EqualityRows eq(2 * vdim);
    for (int axis = 0; axis < m; ++axis) {
      // C0: last point of tail == first point of head.
      eq.add({{coord(d, axis), 1.0}, {vdim + coord(0, axis), -1.0}}, 0.0);
      // C1: last difference of tail == first difference of head.
      eq.add({{coord(d, axis), 1.0},
              {coord(d - 1, axis), -1.0},
              {vdim + coord(1, axis), -1.0},
              {vdim + coord(0, axis), 1.0}},
             0.0);
    }
    builder.add_edge("r" + std::to_string(from) + "_r" + std::to_string(to),
                     "r" + std::to_string(from), "r" + std::to_string(to), eq.as_set(),
                     QuadraticFunction::zero(2 * vdim));
  };
  for (size_t r = 0; r < spec.regions.size(); ++r) add_continuity_edge(r, r);
  for (const auto& [i, j] : spec.adjacency) {
    if (i < 0 || j < 0 || i >= static_cast<int>(spec.regions.size()) ||
        j >= static_cast<int>(spec.regions.size()) || i == j) {
      throw std::invalid_argument("build_bezier_gcs: bad adjacency pair");
    }
    add_continuity_edge(i, j);
    add_continuity_edge(j, i);
  }

  // Source/target edges pin position and zero velocity (rest-to-rest).
  for (size_t r = 0; r < spec.regions.size(); ++r) {
    const std::string rid = "r" + std::to_string(r);
    if (spec.regions[r].contains(spec.start, kMembershipTol)) {
      EqualityRows eq(m + vdim);
      for (int axis = 0; axis < m; ++axis) {
        eq.add({{axis, 1.0}, {m + coord(0, axis), -1.0}}, 0.0);
        eq.add({{m + coord(1, axis), 1.0}, {m + coord(0, axis), -1.0}}, 0.0);
      }
      builder.add_edge("src_" + rid, "src", rid, eq.as_set(),
                       QuadraticFunction::zero(m + vdim));
    }
    if (spec.regions[r].contains(spec.goal, kMembershipTol)) {
      EqualityRows eq(vdim + m);
      for (int axis = 0; axis < m; ++axis) {
        eq.add({{coord(d, axis), 1.0}, {vdim + axis, -1.0}}, 0.0);
        eq.add({{coord(d, axis), 1.0}, {coord(d - 1, axis), -1.0}}, 0.0);
      }
      builder.add_edge(rid + "_tgt", rid, "tgt", eq.as_set(),
                       QuadraticFunction::zero(vdim + m));
    }
  }

  builder.set_source("src", spec.start);
  builder.set_target("tgt", spec.goal);
  return builder.build();
}

Gcs build_pwa_gcs(const PwaSpec& spec) {
  if (spec.modes.empty()) throw std::invalid_argument("build_pwa_gcs: empty mode set");
  const int ns = static_cast<int>(spec.source_state.size());
  const int na = spec.control_set.dim();
  if (spec.target_state.size() != ns) {
    throw std::invalid_argument("build_pwa_gcs: source/target state dimension mismatch");
  }
  for (const PwaMode& mode : spec.modes) {
    if (mode.state_set.dim() != ns || mode.A.rows() != ns || mode.A.cols() != ns ||
        mode.B.rows() != ns || mode.B.cols() != na || mode.c.size() != ns ||
        mode.stage_cost.dim() != ns + na) {
      throw std::invalid_argument("build_pwa_gcs: inconsistent dimensions in mode '" +
                                  mode.name + "'");
    }
    if (mode.name == "src" || mode.name == "tgt") {
      throw std::invalid_argument("build_pwa_gcs: mode names 'src'/'tgt' are reserved");
    }
  }

  GcsBuilder builder;
  builder.add_vertex("src", ConvexSet::point(spec.source_state));
  for (const PwaMode& mode : spec.modes) {
    builder.add_vertex(mode.name, ConvexSet::product({mode.state_set, spec.control_set}),
                       mode.stage_cost);
  }
  builder.add_vertex("tgt", ConvexSet::point(spec.target_state));

  // Image of the tail (state, control) block under the tail mode's dynamics
  // equated with `head_terms` starting at column head_offset.
  auto dynamics_rows = [&](const PwaMode& mode, int product_dim, int tail_offset,
                           int head_offset) {
    EqualityRows eq(product_dim);
    for (int i = 0; i < ns; ++i) {
      std::vector<std::pair<int, double>> terms;
      terms.push_back({head_offset + i, 1.0});
      for (int j = 0; j < ns; ++j) {
        if (mode.A(i, j) != 0.0) terms.push_back({tail_offset + j, -mode.A(i, j)});
      }
      for (int j = 0; j < na; ++j) {
        if (mode.B(i, j) != 0.0) terms.push_back({tail_offset + ns + j, -mode.B(i, j)});
      }
      eq.add(terms, mode.c(i));
    }
    return eq;
  };

  // Feasibility programs for candidate edges, batched; the resulting edge set
  // depends only on the spec.
  struct Candidate {
    std::string id, tail, head;
    EqualityRows coupling;
    int product_dim;
    int probe = -1;  // index into `probes`; -1 means known feasible
  };
  std::vector<Candidate> candidates;
  std::vector<ConicProgram> probes;

  // src -> mode: the state is copied; the first control is chosen on arrival.
  for (const PwaMode& mode : spec.modes) {
    if (!mode.state_set.contains(spec.source_state, kMembershipTol)) continue;
    EqualityRows eq(ns + ns + na);
    for (int i = 0; i < ns; ++i) eq.add({{i, 1.0}, {ns + i, -1.0}}, 0.0);
    candidates.push_back({"src_" + mode.name, "src", mode.name, std::move(eq), ns + ns + na, -1});
  }

  for (const PwaMode& tail : spec.modes) {
    for (const PwaMode& head : spec.modes) {
      const int product_dim = 2 * (ns + na);
      EqualityRows eq = dynamics_rows(tail, product_dim, 0, ns + na);
      ConicProgram probe;
      const int v = probe.add_variables(ns + na);
      add_membership_constraints(probe, tail.state_set, variable_rows(v, ns));
      add_membership_constraints(probe, spec.control_set, variable_rows(v + ns, na));
      // Image constrained to the head's state set.
      std::vector<ConicProgram::AffineRow> image(ns);
      for (int i = 0; i < ns; ++i) {
        image[i].constant = tail.c(i);
        for (int j = 0; j < ns; ++j) {
          if (tail.A(i, j) != 0.0) image[i].terms.push_back({v + j, tail.A(i, j)});
        }
        for (int j = 0; j < na; ++j) {
          if (tail.B(i, j) != 0.0) image[i].terms.push_back({v + ns + j, tail.B(i, j)});
        }
      }
      add_membership_constraints(probe, head.state_set, image);
      candidates.push_back({tail.name + "_" + head.name, tail.name, head.name, std::move(eq),
                            product_dim, static_cast<int>(probes.size())});
      probes.push_back(std::move(probe));
    }
    // mode -> tgt: dynamics must reach the target state exactly.
    {
      const int product_dim = ns + na + ns;
      EqualityRows eq = dynamics_rows(tail, product_dim, 0, ns + na);
      ConicProgram probe;
      const int v = probe.add_variables(ns + na);
      add_membership_constraints(probe, tail.state_set, variable_rows(v, ns));
      add_membership_constraints(probe, spec.control_set, variable_rows(v + ns, na));
      for (int i = 0; i < ns; ++i) {
        ConicProgram::AffineRow row;
        row.constant = tail.c(i) - spec.target_state(i);
        for (int j = 0; j < ns; ++j) {
          if (tail.A(i, j) != 0.0) row.terms.push_back({v + j, tail.A(i, j)});
        }
        for (int j = 0; j < na; ++j) {
          if (tail.B(i, j) != 0.0) row.terms.push_back({v + ns + j, tail.B(i, j)});
        }
        probe.add_equality(std::move(row));
      }
      candidates.push_back({tail.name + "_tgt", tail.name, "tgt", std::move(eq), product_dim,
                            static_cast<int>(probes.size())});
      probes.push_back(std::move(probe));
    }
  }

  std::vector<SolveReport> reports = solve_batch(probes);
  for (Candidate& cand : candidates) {
    if (cand.probe >= 0 && !reports[cand.probe].optimal()) continue;
    builder.add_edge(cand.id, cand.tail, cand.head, cand.coupling.as_set(),
                     QuadraticFunction::zero(cand.product_dim));
  }

  builder.set_source("src", spec.source_state);
  builder.set_target("tgt", spec.target_state);
  return builder.build();
}

PwaReplayReport replay_pwa_solution(const PwaSpec& spec, const Gcs& g, const WalkSolution& sol,
                                    double tol) {
  const int ns = static_cast<int>(spec.source_state.size());
  PwaReplayReport report;
  auto find_mode = [&](const std::string& name) -> const PwaMode* {
    for (const PwaMode& mode : spec.modes) {
      if (mode.name == name) return &mode;
    }
    return nullptr;
  };
  for (size_t k = 0; k + 1 < sol.walk.size(); ++k) {
    const std::string& tail = sol.walk[k];
    Eigen::VectorXd predicted;
    if (tail == "src") {
      predicted = sol.trajectory[k];  // state copy
    } else {
      const PwaMode* mode = find_mode(tail);
      if (mode == nullptr) continue;
      const Eigen::VectorXd state = sol.trajectory[k].head(ns);
      const Eigen::VectorXd control = sol.trajectory[k].tail(sol.trajectory[k].size() - ns);
      predicted = mode->A * state + mode->B * control + mode->c;
      if (!mode->state_set.contains(state, tol) ||
          !spec.control_set.contains(control, tol)) {
        report.states_in_mode_sets = false;
      }
    }
    const Eigen::VectorXd next_state = sol.trajectory[k + 1].head(ns);
    report.max_dynamics_residual = std::max(report.max_dynamics_residual,
                                            (next_state - predicted).cwiseAbs().maxCoeff());
  }
  return report;
}

Gcs build_skill_gcs(const SkillSpec& spec) {
  const int n = spec.config_dim;
  if (n < 1) throw std::invalid_argument("build_skill_gcs: config_dim must be >= 1");
  if (spec.start.size() != n || spec.goal.size() != n) {
    throw std::invalid_argument("build_skill_gcs: start/goal dimension mismatch");
  }
  for (const Skill& skill : spec.skills) {
    if (skill.transitions.dim() != 2 * n) {
      throw std::invalid_argument("build_skill_gcs: skill '" + skill.name +
                                  "' transition set must live in R^(2n)");
    }
    if (skill.cost.dim() != 2 * n) {
      throw std::invalid_argument("build_skill_gcs: skill '" + skill.name +
                                  "' cost dimension mismatch");
    }
    if (skill.name == "src" || skill.name == "tgt") {
      throw std::invalid_argument("build_skill_gcs: skill names 'src'/'tgt' are reserved");
    }
  }

  GcsBuilder builder;
  builder.add_vertex("src", ConvexSet::point(spec.start));
  for (const Skill& skill : spec.skills) builder.add_vertex(skill.name, skill.transitions, skill.cost);
  builder.add_vertex("tgt", ConvexSet::point(spec.goal));

  struct Candidate {
    std::string id, tail, head;
    EqualityRows coupling;
    int product_dim;
  };
  std::vector<Candidate> candidates;
  std::vector<ConicProgram> probes;

  // src -> skill: the skill must be executable from the start configuration.
  for (const Skill& skill : spec.skills) {
    ConicProgram probe;
    const int v = probe.add_variables(2 * n);
    add_membership_constraints(probe, skill.transitions, variable_rows(v, 2 * n));
    for (int i = 0; i < n; ++i) {
      probe.add_equality({{{v + i, 1.0}}, -spec.start(i)});
    }
    EqualityRows eq(n + 2 * n);
    for (int i = 0; i < n; ++i) eq.add({{i, 1.0}, {n + i, -1.0}}, 0.0);
    candidates.push_back({"src_" + skill.name, "src", skill.name, std::move(eq), 3 * n});
    probes.push_back(std::move(probe));
  }
  // skill -> skill chaining: end of the first is the start of the second.
  for (const Skill& first : spec.skills) {
    for (const Skill& second : spec.skills) {
      ConicProgram probe;
      const int u = probe.add_variables(2 * n);
      const int v = probe.add_variables(2 * n);
      add_membership_constraints(probe, first.transitions, variable_rows(u, 2 * n));
      add_membership_constraints(probe, second.transitions, variable_rows(v, 2 * n));
      for (int i = 0; i < n; ++i) {
        probe.add_equality({{{u + n + i, 1.0}, {v + i, -1.0}}, 0.0});
      }
      EqualityRows eq(4 * n);
      for (int i = 0; i < n; ++i) eq.add({{n + i, 1.0}, {2 * n + i, -1.0}}, 0.0);
      candidates.push_back(
          {first.name + "_" + second.name, first.name, second.name, std::move(eq), 4 * n});
      probes.push_back(std::move(probe));
    }
  }
  // skill -> tgt: the skill must be able to end at the goal configuration.
  for (const Skill& skill : spec.skills) {
    ConicProgram probe;
    const int v = probe.add_variables(2 * n);
    add_membership_constraints(probe, skill.transitions, variable_rows(v, 2 * n));
    for (int i = 0; i < n; ++i) {
      probe.add_equality({{{v + n + i, 1.0}}, -spec.goal(i)});
    }
    EqualityRows eq(2 * n + n);
    for (int i = 0; i < n; ++i) eq.add({{n + i, 1.0}, {2 * n + i, -1.0}}, 0.0);
    candidates.push_back({skill.name + "_tgt", skill.name, "tgt", std::move(eq), 3 * n});
    probes.push_back(std::move(probe));
  }

  std::vector<SolveReport> reports = solve_batch(probes);
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!reports[i].optimal()) continue;
    Candidate& cand = candidates[i];
    builder.add_edge(cand.id, cand.tail, cand.head, cand.coupling.as_set(),
                     QuadraticFunction::zero(cand.product_dim));
  }

  builder.set_source("src", spec.start);
  builder.set_target("tgt", spec.goal);
  return builder.build();
}

PwaSpec make_pendulum_spec() {
  // Torque-actuated inverted pendulum beside an elastic wall, explicit Euler
  // with step h. No-contact mode N and contact mode C split at the wall
  // angle; the wall spring acts only in C.
  const double h = 0.1;
  const double gain = 2.0;      // gravity lever term in theta-double-dot
  const double spring = 50.0;   // wall stiffness
  const double wall = 0.1;      // wall angle

  PwaSpec spec;
  Eigen::MatrixXd B(2, 1);
  B << 0.0, h;
  Eigen::MatrixXd Qcost = Eigen::MatrixXd::Zero(3, 3);
  Qcost(0, 0) = 10.0;
  Qcost(1, 1) = 1.0;
  Qcost(2, 2) = 0.1;
  QuadraticFunction stage_cost =
      QuadraticFunction::from_blocks(Qcost, Eigen::VectorXd::Zero(3), 0.0);

  PwaMode no_contact;
  no_contact.name = "N";
  no_contact.state_set = ConvexSet::box(Eigen::Vector2d(-0.3, -1.0), Eigen::Vector2d(wall, 1.0));
  no_contact.A = Eigen::MatrixXd(2, 2);
  no_contact.A << 1.0, h, gain * h, 1.0;
  no_contact.B = B;
  no_contact.c = Eigen::Vector2d::Zero();
  no_contact.stage_cost = stage_cost;

  PwaMode contact;
  contact.name = "C";
  contact.state_set = ConvexSet::box(Eigen::Vector2d(wall, -1.0), Eigen::Vector2d(0.25, 1.0));
  contact.A = Eigen::MatrixXd(2, 2);
  contact.A << 1.0, h, (gain - spring) * h, 1.0;
  contact.B = B;
  contact.c = Eigen::Vector2d(0.0, spring * wall * h);
  contact.stage_cost = stage_cost;

  spec.modes = {std::move(no_contact), std::move(contact)};
  spec.control_set = ConvexSet::box(Eigen::VectorXd::Constant(1, -2.0),
                                    Eigen::VectorXd::Constant(1, 2.0));
  spec.source_state = Eigen::Vector2d(0.0, 0.9);
  spec.target_state = Eigen::Vector2d(0.0, 0.0);
  return spec;
}

BezierSpec make_corridor_spec() {
  BezierSpec spec;
  spec.state_dim = 2;
  spec.regions = {ConvexSet::box(Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.2, 1.0)),
                  ConvexSet::box(Eigen::Vector2d(0.8, 0.0), Eigen::Vector2d(2.0, 1.0))};
  spec.adjacency = {{0, 1}};
  spec.degree = 3;
  spec.dt = 0.125;
  spec.vel_limit = Eigen::Vector2d(4.0, 4.0);
  spec.acc_limit = Eigen::Vector2d(30.0, 30.0);
  spec.time_weight = 1.0;
  spec.displacement_weight = 1.0;
  spec.start = Eigen::Vector2d(0.1, 0.5);
  spec.goal = Eigen::Vector2d(1.9, 0.5);
  return spec;
}

SkillSpec make_gripper_spec() {
  // 1D gripper with three overlapping translation ranges; each sub-skill
  // moves the gripper anywhere within its range.
  SkillSpec spec;
  spec.config_dim = 1;
  auto range_skill = [](std::string name, double lo, double hi) {
    Skill skill;
    skill.name = std::move(name);
    skill.transitions = ConvexSet::box(Eigen::Vector2d(lo, lo), Eigen::Vector2d(hi, hi));
    Eigen::Matrix2d Q;
    Q << 1, -1, -1, 1;
    skill.cost = QuadraticFunction::from_blocks(Q, Eigen::Vector2d::Zero(), 1.0);
    return skill;
  };
  spec.skills = {range_skill("move_low", 0.0, 1.2), range_skill("move_mid", 1.0, 2.2),
                 range_skill("move_high", 2.0, 3.0)};
  spec.start = Eigen::VectorXd::Constant(1, 0.1);
  spec.goal = Eigen::VectorXd::Constant(1, 2.9);
  return spec;
}

}  // namespace swgcs
