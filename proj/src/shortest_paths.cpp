#include "closeness/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

namespace closeness {

namespace {

template <typename Arcs>
void heap_search(std::vector<Weight>& dist, VertexId source, Arcs&& arcs, SearchStats& stats) {
  using Entry = std::pair<Weight, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<char> settled(dist.size(), 0);
  dist[source] = 0;
  heap.push({0, source});
  ++stats.pushes;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    // Stale entry left behind by a later improvement.
    if (settled[u]) {
      ++stats.stale_pops;
      continue;
    }
    settled[u] = 1;
    ++stats.settled;
    for (const auto& a : arcs(u)) {
      const Weight candidate = d + a.weight;
      if (candidate < dist[a.target]) {
        dist[a.target] = candidate;
        heap.push({candidate, a.target});
        ++stats.pushes;
      }
    }
  }
}

template <typename Arcs>
void bfs_search(std::vector<Weight>& dist, VertexId source, Arcs&& arcs, SearchStats& stats) {
  std::vector<VertexId> frontier{source};
  frontier.reserve(dist.size());
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId u = frontier[head];
    ++stats.settled;
    const Weight next = dist[u] + 1;
    for (const auto& a : arcs(u)) {
      if (dist[a.target] == kInfinity) {
        dist[a.target] = next;
        frontier.push_back(a.target);
        ++stats.pushes;
      }
    }
  }
}

}  // namespace

DistanceVector sssp(const Graph& g, VertexId source, SearchMethod method,
                    SearchDirection direction, SearchStats* stats) {
  const auto n = g.vertex_count();
  if (source >= n) {
    throw InvalidArgument("source " + std::to_string(source) + " out of range (n = " +
                          std::to_string(n) + ")");
  }
  if (method == SearchMethod::automatic) {
    method = g.unit_weights() ? SearchMethod::breadth_first : SearchMethod::heap;
  } else if (method == SearchMethod::breadth_first && !g.unit_weights()) {
    throw InvalidArgument("breadth-first search requires unit weights");
  }

  DistanceVector dv{source, std::vector<Weight>(n, kInfinity)};
  SearchStats local;
  const bool into = direction == SearchDirection::into;
  auto arcs = [&g, into](VertexId u) { return into ? g.in_arcs(u) : g.out_arcs(u); };
  if (method == SearchMethod::heap) {
    heap_search(dv.dist, source, arcs, local);
  } else {
    bfs_search(dv.dist, source, arcs, local);
  }
  if (stats) *stats = local;
  return dv;
}

Weight eccentricity(const DistanceVector& dv) {
  Weight ecc = 0;
  for (std::size_t v = 0; v < dv.dist.size(); ++v) {
    if (dv.dist[v] == kInfinity) throw DisconnectedGraph(static_cast<VertexId>(v));
    ecc = std::max(ecc, dv.dist[v]);
  }
  return ecc;
}

}  // namespace closeness
