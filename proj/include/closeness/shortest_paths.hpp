#pragma once

#include <cstddef>
#include <vector>

#include "closeness/graph.hpp"

namespace closeness {

struct DistanceVector {
  VertexId source = 0;
  std::vector<Weight> dist;  // kInfinity marks unreachable vertices
};

enum class SearchMethod {
  automatic,  // breadth-first when every weight is 1, heap otherwise
  heap,
  breadth_first,
};

// Which way arcs are followed. `into` yields d(v, source) for every v.
enum class SearchDirection { from, into };

struct SearchStats {
  std::size_t settled = 0;
  std::size_t pushes = 0;
  std::size_t stale_pops = 0;
};

// Single-source shortest paths with a lazy-deletion binary heap, or BFS on
// unit-weight graphs. Throws InvalidArgument if source >= n, or if
// breadth_first is requested on a graph with non-unit weights.
DistanceVector sssp(const Graph& g, VertexId source,
                    SearchMethod method = SearchMethod::automatic,
                    SearchDirection direction = SearchDirection::from,
                    SearchStats* stats = nullptr);

// Max entry of dv.dist. Throws DisconnectedGraph on an infinite entry.
Weight eccentricity(const DistanceVector& dv);

}  // namespace closeness
