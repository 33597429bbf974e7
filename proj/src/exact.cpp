#include "closeness/exact.hpp"

#include <algorithm>
#include <limits>

#include "closeness/shortest_paths.hpp"

namespace closeness {

namespace {

constexpr VertexId kNoWitness = std::numeric_limits<VertexId>::max();

void require_two_vertices(const Graph& g) {
  if (g.vertex_count() < 2) throw GraphPrecondition("closeness needs at least 2 vertices");
}

}  // namespace

ExactAnalysis exact_analysis(const Graph& g, const ExecOptions& opts) {
  require_two_vertices(g);
  if (!g.directed()) require_connected(g);

  const auto n = g.vertex_count();
  std::vector<Weight> sums(n, 0);
  std::vector<Weight> in_ecc(n, 0);
  std::vector<VertexId> witness(n, kNoWitness);

  parallel_for(n, opts, [&](std::size_t u) {
    const auto dv = sssp(g, static_cast<VertexId>(u), SearchMethod::automatic,
                         SearchDirection::into);
    Weight sum = 0;
    Weight far = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Weight d = dv.dist[i];
      if (d == kInfinity) {
        witness[u] = static_cast<VertexId>(i);
        return;
      }
      sum += d;
      far = std::max(far, d);
    }
    sums[u] = sum;
    in_ecc[u] = far;
  });

  // Lowest target with an unreachable source, independent of scheduling.
  for (std::size_t u = 0; u < n; ++u) {
    if (witness[u] != kNoWitness) throw DisconnectedGraph(witness[u]);
  }

  ExactAnalysis result;
  result.report.method = CentralityMethod::exact;
  result.report.values.resize(n);
  const auto scale = static_cast<double>(n - 1);
  for (std::size_t u = 0; u < n; ++u) {
    // Only possible with zero-weight edges everywhere around u.
    result.report.values[u] = sums[u] > 0 ? scale / sums[u] : kInfinity;
  }
  const Weight diameter = *std::max_element(in_ecc.begin(), in_ecc.end());
  result.diameter = {diameter, diameter, true};
  result.distance_sums = std::move(sums);
  return result;
}

CentralityReport exact_centrality(const Graph& g, const ExecOptions& opts) {
  return exact_analysis(g, opts).report;
}

DiameterInfo exact_diameter(const Graph& g, const ExecOptions& opts) {
  return exact_analysis(g, opts).diameter;
}

DiameterInfo diameter_upper_bound(const Graph& g, VertexId probe) {
  if (g.directed()) throw InvalidArgument("the 2*ecc diameter bound needs an undirected graph");
  require_connected(g);
  const Weight ecc = eccentricity(sssp(g, probe));
  return {ecc, 2 * ecc, false};
}

}  // namespace closeness
