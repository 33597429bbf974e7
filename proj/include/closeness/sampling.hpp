#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "closeness/centrality.hpp"
#include "closeness/graph.hpp"
#include "closeness/parallel.hpp"

namespace closeness {

// Smallest k with 2 exp(-2 k eps^2 ((n-1)/n)^2) <= delta_vertex.
// Requires n >= 2, epsilon > 0 and 0 < delta_vertex < 1.
SamplePlan sample_size(std::size_t n, double epsilon, double delta_vertex);

// 1 / n^2, the default per-vertex failure probability.
double default_delta_vertex(std::size_t n);

// The source stream for (n, k, seed): one uniform draw per iteration.
std::vector<VertexId> draw_sources(std::size_t n, std::size_t k, std::uint64_t seed);

struct Estimate {
  CentralityReport report;
  SampleTrace trace;
};

// Sampled closeness: k uniform sources with replacement, one search each,
// values[u] = k (n-1) / (n * sum_i d(v_i, u)). A vertex whose distance sum is
// zero gets kInfinity and is listed in trace.self_sampled.
Estimate estimate_centrality(const Graph& g, std::size_t k, std::uint64_t seed,
                             const ExecOptions& opts = {});

// Same estimator over a caller-chosen source list, bypassing the RNG.
Estimate estimate_from_sources(const Graph& g, std::span<const VertexId> sources,
                               const ExecOptions& opts = {});

struct PlannedEstimate {
  CentralityReport report;
  SamplePlan plan;
  SampleTrace trace;
};

// sample_size followed by estimate_centrality. delta_vertex defaults to 1/n^2.
PlannedEstimate estimate_with_plan(const Graph& g, double epsilon,
                                   std::optional<double> delta_vertex, std::uint64_t seed,
                                   const ExecOptions& opts = {});

}  // namespace closeness
