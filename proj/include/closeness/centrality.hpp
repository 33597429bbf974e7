#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closeness/graph.hpp"

namespace closeness {

enum class CentralityMethod { exact, sampled };

// Sample count plus the guarantee it buys: every vertex's inverse
// centrality is within epsilon * diameter with probability >= 1 - delta_vertex.
struct SamplePlan {
  std::size_t k = 0;
  double epsilon = 0;
  double delta_vertex = 0;
  double delta_graph = 0;  // min(1, n * delta_vertex)
  std::size_t n = 0;
};

struct SampleTrace {
  std::uint64_t seed = 0;
  std::string generator;            // RNG family, or "injected"
  std::vector<VertexId> sources;    // one per iteration, in order
  std::vector<double> source_seconds;
  std::vector<VertexId> self_sampled;  // vertices whose every sample was themselves
};

struct SamplingMetadata {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
  std::optional<SamplePlan> plan;
};

struct CentralityReport {
  // values[u] = c_u. Sampled reports may hold kInfinity (see SampleTrace).
  std::vector<double> values;
  CentralityMethod method = CentralityMethod::exact;
  std::optional<SamplingMetadata> sampling;
};

struct DiameterInfo {
  Weight lower = 0;
  Weight upper = 0;
  bool exact = false;
};

}  // namespace closeness
