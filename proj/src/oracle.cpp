#include "swgcs/oracle.hpp"

#include <stdexcept>

#include "swgcs/gcs_programs.hpp"

namespace swgcs {

namespace {

void enumerate_recursive(const Gcs& g, const std::string& current, const std::string& to,
                         int remaining, long cap, long* expansions, Walk* partial,
                         std::vector<Walk>* out) {
  if (remaining == 0) {
    if (current == to) out->push_back(*partial);
    return;
  }
  for (const Edge* e : g.out_edges(current)) {
    if (++(*expansions) > cap) {
      throw std::runtime_error("enumerate_walks: enumeration cap exceeded (" +
                               std::to_string(cap) + "); instance too large for the oracle");
    }
    partial->vertices.push_back(e->head);
    partial->edge_ids.push_back(e->id);
    enumerate_recursive(g, e->head, to, remaining - 1, cap, expansions, partial, out);
    partial->vertices.pop_back();
    partial->edge_ids.pop_back();
  }
}

}  // namespace

std::vector<Walk> enumerate_walks(const Gcs& g, const std::string& from, const std::string& to,
                                  int steps, long cap) {
  if (steps < 1) throw std::invalid_argument("enumerate_walks: steps must be >= 1");
  std::vector<Walk> out;
  Walk partial;
  partial.vertices.push_back(from);
  long expansions = 0;
  enumerate_recursive(g, from, to, steps, cap, &expansions, &partial, &out);
  return out;
}

OracleResult exact_best_walk(const Gcs& g, const OracleSettings& settings) {
  OracleResult result;
  long budget_used = 0;
  for (int k = 1; k <= settings.k_max; ++k) {
    OraclePerK per_k;
    per_k.k = k;
    std::vector<Walk> walks =
        enumerate_walks(g, g.source(), g.target(), k, settings.enumeration_cap - budget_used);
    per_k.num_walks = static_cast<long>(walks.size());
    budget_used += per_k.num_walks;
    if (budget_used > settings.enumeration_cap) {
      throw std::runtime_error("exact_best_walk: enumeration cap exceeded at K = " +
                               std::to_string(k));
    }

    std::vector<RestrictionProgram> restrictions;
    std::vector<ConicProgram> programs;
    restrictions.reserve(walks.size());
    programs.reserve(walks.size());
    for (const Walk& walk : walks) {
      restrictions.push_back(build_restriction(g, walk.vertices, walk.edge_ids, g.source_point(),
                                               g.target_point()));
      programs.push_back(restrictions.back().program);
    }
    std::vector<SolveReport> reports = solve_batch(programs, settings.solve);
    result.total_restrictions += static_cast<long>(programs.size());

    for (size_t i = 0; i < walks.size(); ++i) {
      if (!reports[i].optimal()) continue;
      ++per_k.num_feasible;
      WalkSolution sol = extract_restriction_solution(g, walks[i].vertices, walks[i].edge_ids,
                                                      restrictions[i], reports[i]);
      if (!per_k.best || sol.cost < per_k.best->cost - settings.improvement_tol) {
        per_k.best = std::move(sol);
      }
    }
    if (per_k.best &&
        (!result.best || per_k.best->cost < result.best->cost - settings.improvement_tol)) {
      result.best = per_k.best;
      result.stabilization_k = k;
    }
    result.per_k.push_back(std::move(per_k));
  }
  result.stabilized = result.best.has_value() &&
                      settings.k_max - result.stabilization_k >= settings.stabilization_window;
  return result;
}

Gcs build_layered_gcs(const Gcs& g, int K) {
  if (K < 1) throw std::invalid_argument("build_layered_gcs: K must be >= 1");
  GcsBuilder builder;
  const std::string source_id = g.source() + "@0";
  const std::string target_id = g.target() + "@" + std::to_string(K);

  builder.add_vertex(source_id, g.vertex(g.source()).set, g.vertex(g.source()).cost);
  for (int k = 1; k <= K - 1; ++k) {
    for (const Vertex& v : g.vertices()) {
      builder.add_vertex(v.id + "@" + std::to_string(k), v.set, v.cost);
    }
  }
  builder.add_vertex(target_id, g.vertex(g.target()).set, g.vertex(g.target()).cost);

  for (int k = 1; k <= K; ++k) {
    for (const Edge& e : g.edges()) {
      std::string tail;
      if (k == 1) {
        if (e.tail != g.source()) continue;
        tail = source_id;
      } else {
        tail = e.tail + "@" + std::to_string(k - 1);
      }
      const std::string step = std::to_string(k);
      if (k < K) {
        builder.add_edge(e.id + "@" + step, tail, e.head + "@" + step, e.set, e.cost);
      }
      if (e.head == g.target()) {
        const std::string id = (k < K) ? e.id + "@" + step + ".end" : e.id + "@" + step;
        builder.add_edge(id, tail, target_id, e.set, e.cost);
      }
    }
  }
  builder.set_source(source_id, g.source_point());
  builder.set_target(target_id, g.target_point());
  return builder.build();
}

}  // namespace swgcs
