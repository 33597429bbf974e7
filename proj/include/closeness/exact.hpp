#pragma once

#include "closeness/centrality.hpp"
#include "closeness/graph.hpp"
#include "closeness/parallel.hpp"

namespace closeness {

// Everything the all-sources pass produces.
struct ExactAnalysis {
  CentralityReport report;
  std::vector<Weight> distance_sums;  // sum over i of d(i, u)
  DiameterInfo diameter;
};

// One search per vertex, reduced deterministically by vertex id.
// Requires n >= 2 (GraphPrecondition) and every d(i, u) finite
// (DisconnectedGraph).
ExactAnalysis exact_analysis(const Graph& g, const ExecOptions& opts = {});

// values[u] = (n - 1) / sum_i d(i, u)
CentralityReport exact_centrality(const Graph& g, const ExecOptions& opts = {});

DiameterInfo exact_diameter(const Graph& g, const ExecOptions& opts = {});

// ecc(probe) <= diameter <= 2 ecc(probe). Exact for the lower side only.
// The upper side relies on symmetric distances, so directed graphs are
// rejected with InvalidArgument.
DiameterInfo diameter_upper_bound(const Graph& g, VertexId probe);

}  // namespace closeness
