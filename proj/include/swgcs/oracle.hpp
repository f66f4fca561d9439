#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swgcs/conic.hpp"
#include "swgcs/gcs.hpp"

namespace swgcs {

/// A discrete walk through the graph (vertices plus the edge taken at each
/// step; the edge list disambiguates parallel edges).
struct Walk {
  std::vector<std::string> vertices;
  std::vector<std::string> edge_ids;

  int steps() const { return static_cast<int>(edge_ids.size()); }
};

struct OracleSettings {
  int k_max = 8;
  // Upper bound on DFS expansions + restrictions per call; exceeding it is an
  // error (the oracle exists for small instances, not scale).
  long enumeration_cap = 1000000;
  // A per-K best must beat the incumbent by more than this to count as an
  // improvement.
  double improvement_tol = 1e-9;
  // The best-cost sequence counts as stabilized when the last
  // `stabilization_window` values of K brought no improvement.
  int stabilization_window = 2;
  SolveSettings solve;
};

struct OraclePerK {
  int k = 0;
  long num_walks = 0;
  long num_feasible = 0;
  std::optional<WalkSolution> best;
};

struct OracleResult {
  std::vector<OraclePerK> per_k;
  std::optional<WalkSolution> best;
  // Smallest K whose optimum matches the overall best (within tolerance).
  int stabilization_k = -1;
  bool stabilized = false;
  long total_restrictions = 0;
};

/// All walks with exactly `steps` steps from `from` to `to`, in lexicographic
/// order of their edge-id sequences. Throws if the enumeration cap is hit.
std::vector<Walk> enumerate_walks(const Gcs& g, const std::string& from, const std::string& to,
                                  int steps, long cap = 1000000);

/// Ground-truth solver: enumerates all s-t walks for K = 1..k_max, solves the
/// convex restriction of each (endpoints pinned), and keeps the best.
OracleResult exact_best_walk(const Gcs& g, const OracleSettings& settings = {});

/// Layered acyclic expansion: s-t paths of the result biject with K'-step
/// walks of g for K' <= K. Vertex copies are named "v@k", the source copy
/// "s@0", the final target copy "t@K"; mirrored edges are named "e@k" with
/// early target arcs "e@k.end".
Gcs build_layered_gcs(const Gcs& g, int K);

}  // namespace swgcs
