#include "swgcs/gcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace swgcs {

bool Gcs::has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }

const Vertex& Gcs::vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw std::out_of_range("Gcs: unknown vertex '" + id + "'");
  return vertices_[it->second];
}

const Edge& Gcs::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw std::out_of_range("Gcs: unknown edge '" + id + "'");
  return edges_[it->second];
}

const std::vector<const Edge*>& Gcs::out_edges(const std::string& vertex_id) const {
  auto it = out_edges_.find(vertex_id);
  if (it == out_edges_.end()) throw std::out_of_range("Gcs: unknown vertex '" + vertex_id + "'");
  return it->second;
}

std::vector<const Edge*> Gcs::edges_between(const std::string& tail,
                                            const std::string& head) const {
  std::vector<const Edge*> out;
  for (const Edge* e : out_edges(tail)) {
    if (e->head == head) out.push_back(e);
  }
  return out;
}

GcsBuilder& GcsBuilder::add_vertex(std::string id, ConvexSet set,
                                   std::optional<QuadraticFunction> cost) {
  QuadraticFunction c = cost ? std::move(*cost) : QuadraticFunction::zero(set.dim());
  vertices_.push_back(Vertex{std::move(id), std::move(set), std::move(c)});
  return *this;
}

GcsBuilder& GcsBuilder::add_edge(std::string id, std::string tail, std::string head,
                                 std::optional<ConvexSet> coupling,
                                 std::optional<QuadraticFunction> cost) {
  edges_.push_back(PendingEdge{std::move(id), std::move(tail), std::move(head),
                               std::move(coupling), std::move(cost)});
  return *this;
}

GcsBuilder& GcsBuilder::set_source(std::string id, Eigen::VectorXd point) {
  source_ = std::move(id);
  source_point_ = std::move(point);
  return *this;
}

GcsBuilder& GcsBuilder::set_target(std::string id, Eigen::VectorXd point) {
  target_ = std::move(id);
  target_point_ = std::move(point);
  return *this;
}

Gcs GcsBuilder::build() const {
  Gcs g;
  for (const Vertex& v : vertices_) {
    if (g.vertex_index_.count(v.id)) {
      throw std::invalid_argument("Gcs: duplicate vertex id '" + v.id + "'");
    }
    if (v.cost.dim() != v.set.dim()) {
      throw std::invalid_argument("Gcs: vertex '" + v.id + "' cost dimension " +
                                  std::to_string(v.cost.dim()) + " != set dimension " +
                                  std::to_string(v.set.dim()));
    }
    if (!v.cost.is_convex(kPsdTol)) {
      throw std::invalid_argument("Gcs: vertex '" + v.id + "' cost is not convex");
    }
    // Vertex sets must be compact; composites are admitted as long as the
    // intersection has a finite bounding box.
    if (!v.set.box_lower().allFinite() || !v.set.box_upper().allFinite()) {
      throw std::invalid_argument("Gcs: vertex '" + v.id + "' set is not bounded");
    }
    g.vertex_index_[v.id] = static_cast<int>(g.vertices_.size());
    g.vertices_.push_back(v);
    g.out_edges_[v.id] = {};
  }

  for (const PendingEdge& pe : edges_) {
    if (g.edge_index_.count(pe.id)) {
      throw std::invalid_argument("Gcs: duplicate edge id '" + pe.id + "'");
    }
    if (!g.vertex_index_.count(pe.tail) || !g.vertex_index_.count(pe.head)) {
      throw std::invalid_argument("Gcs: edge '" + pe.id + "' references unknown vertex");
    }
    const Vertex& tail = g.vertices_[g.vertex_index_.at(pe.tail)];
    const Vertex& head = g.vertices_[g.vertex_index_.at(pe.head)];
    const int product_dim = tail.set.dim() + head.set.dim();

    ConvexSet product = ConvexSet::product({tail.set, head.set});
    ConvexSet set = product;
    if (pe.coupling) {
      if (pe.coupling->dim() != product_dim) {
        throw std::invalid_argument("Gcs: edge '" + pe.id + "' coupling set dimension " +
                                    std::to_string(pe.coupling->dim()) + " != " +
                                    std::to_string(product_dim));
      }
      set = ConvexSet::intersection({*pe.coupling, std::move(product)});
    }
    QuadraticFunction cost =
        pe.cost ? *pe.cost : QuadraticFunction::zero(product_dim);
    if (cost.dim() != product_dim) {
      throw std::invalid_argument("Gcs: edge '" + pe.id + "' cost dimension mismatch");
    }
    if (!cost.is_convex(kPsdTol)) {
      throw std::invalid_argument("Gcs: edge '" + pe.id + "' cost is not convex");
    }
    g.edge_index_[pe.id] = static_cast<int>(g.edges_.size());
    g.edges_.push_back(Edge{pe.id, pe.tail, pe.head, std::move(set), std::move(cost)});
  }
  for (const Edge& e : g.edges_) {
    g.out_edges_[e.tail].push_back(&g.edges_[g.edge_index_.at(e.id)]);
  }
  for (auto& [id, list] : g.out_edges_) {
    std::sort(list.begin(), list.end(),
              [](const Edge* a, const Edge* b) { return a->id < b->id; });
  }

  if (source_.empty() || target_.empty()) {
    throw std::invalid_argument("Gcs: source and target must be set");
  }
  if (!g.vertex_index_.count(source_) || !g.vertex_index_.count(target_)) {
    throw std::invalid_argument("Gcs: source/target vertex not found");
  }
  g.source_ = source_;
  g.target_ = target_;
  g.source_point_ = source_point_;
  g.target_point_ = target_point_;
  const Vertex& s = g.vertex(source_);
  const Vertex& t = g.vertex(target_);
  if (source_point_.size() != s.set.dim() || !s.set.contains(source_point_, kMembershipTol)) {
    throw std::invalid_argument("Gcs: source point is not in the source vertex set");
  }
  if (target_point_.size() != t.set.dim() || !t.set.contains(target_point_, kMembershipTol)) {
    throw std::invalid_argument("Gcs: target point is not in the target vertex set");
  }
  return g;
}

WalkValidation validate_walk(const Gcs& g, const std::vector<std::string>& walk) {
  WalkValidation out;
  if (walk.size() < 2) {
    out.message = "walk must contain at least two vertices";
    return out;
  }
  for (const std::string& id : walk) {
    if (!g.has_vertex(id)) {
      out.message = "unknown vertex '" + id + "'";
      return out;
    }
  }
  if (walk.front() != g.source()) {
    out.message = "walk must start at source '" + g.source() + "'";
    return out;
  }
  if (walk.back() != g.target()) {
    out.message = "walk must end at target '" + g.target() + "'";
    return out;
  }
  for (size_t k = 1; k < walk.size(); ++k) {
    std::vector<const Edge*> options = g.edges_between(walk[k - 1], walk[k]);
    if (options.empty()) {
      out.error_index = static_cast<int>(k);
      out.message = "no edge from '" + walk[k - 1] + "' to '" + walk[k] + "' at step " +
                    std::to_string(k);
      out.edge_ids.clear();
      return out;
    }
    out.edge_ids.push_back(options.front()->id);  // smallest id wins
  }
  out.ok = true;
  return out;
}

double walk_cost(const Gcs& g, const WalkSolution& sol) {
  const size_t n = sol.walk.size();
  if (n < 2 || sol.trajectory.size() != n || sol.edge_ids.size() != n - 1) {
    throw std::invalid_argument("walk_cost: inconsistent solution sizes");
  }
  double total = 0.0;
  for (size_t k = 0; k < n; ++k) {
    total += g.vertex(sol.walk[k]).cost.eval(sol.trajectory[k]);
  }
  for (size_t k = 1; k < n; ++k) {
    const Edge& e = g.edge(sol.edge_ids[k - 1]);
    if (e.tail != sol.walk[k - 1] || e.head != sol.walk[k]) {
      throw std::invalid_argument("walk_cost: edge '" + e.id + "' does not match step " +
                                  std::to_string(k));
    }
    Eigen::VectorXd pair(sol.trajectory[k - 1].size() + sol.trajectory[k].size());
    pair << sol.trajectory[k - 1], sol.trajectory[k];
    total += e.cost.eval(pair);
  }
  return total;
}

std::optional<std::string> solution_error(const Gcs& g, const WalkSolution& sol, double tol) {
  const size_t n = sol.walk.size();
  if (n < 2) return "walk too short";
  if (sol.trajectory.size() != n) return "trajectory length mismatch";
  if (sol.edge_ids.size() != n - 1) return "edge list length mismatch";
  if (sol.walk.front() != g.source()) return "walk does not start at source";
  if (sol.walk.back() != g.target()) return "walk does not end at target";
  if ((sol.trajectory.front() - g.source_point()).cwiseAbs().maxCoeff() > tol) {
    return "trajectory does not start at the source point";
  }
  if ((sol.trajectory.back() - g.target_point()).cwiseAbs().maxCoeff() > tol) {
    return "trajectory does not end at the target point";
  }
  for (size_t k = 1; k < n; ++k) {
    const Edge& e = g.edge(sol.edge_ids[k - 1]);
    if (e.tail != sol.walk[k - 1] || e.head != sol.walk[k]) {
      return "edge '" + e.id + "' does not connect step " + std::to_string(k);
    }
    Eigen::VectorXd pair(sol.trajectory[k - 1].size() + sol.trajectory[k].size());
    pair << sol.trajectory[k - 1], sol.trajectory[k];
    if (!e.set.contains(pair, tol)) {
      return "step " + std::to_string(k) + " violates edge set of '" + e.id + "'";
    }
  }
  return std::nullopt;
}

Gcs apply_epsilon_edge_costs(const Gcs& g, double epsilon) {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("apply_epsilon_edge_costs: epsilon must be positive");
  }
  GcsBuilder builder;
  for (const Vertex& v : g.vertices()) builder.add_vertex(v.id, v.set, v.cost);
  for (const Edge& e : g.edges()) {
    // Re-adding the stored set would intersect with the endpoint product a
    // second time; harmless but wasteful, so pass it as the coupling as-is.
    builder.add_edge(e.id, e.tail, e.head, e.set, e.cost.plus_constant(epsilon));
  }
  builder.set_source(g.source(), g.source_point());
  builder.set_target(g.target(), g.target_point());
  return builder.build();
}

}  // namespace swgcs
