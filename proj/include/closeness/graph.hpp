#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "closeness/errors.hpp"

namespace closeness {

using Weight = double;

// Distance of an unreachable vertex.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

struct Arc {
  VertexId target;
  Weight weight;
};

struct Edge {
  VertexId from;
  VertexId to;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Directedness { undirected, directed };

struct IngestStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Immutable weighted graph in compressed adjacency form.
//
// Vertices are dense ids 0..n-1. Undirected edges are stored once per
// endpoint with equal weights. Directed graphs also keep the reverse
// adjacency so distances *into* a vertex can be computed with one search.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from raw edges. Self-loops are dropped and parallel
  // edges collapse to their minimum weight; both are counted in `stats`.
  // Throws InvalidArgument on an out-of-range id or a negative/non-finite
  // weight.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          Directedness directedness = Directedness::undirected,
                          IngestStats* stats = nullptr);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  // Number of logical edges (an undirected edge counts once).
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool directed() const noexcept { return directed_; }
  bool unit_weights() const noexcept { return unit_weights_; }

  std::span<const Arc> out_arcs(VertexId u) const noexcept {
    return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
  }
  // Arcs (w -> u) presented as (w, weight). Same as out_arcs when undirected.
  std::span<const Arc> in_arcs(VertexId u) const noexcept {
    if (!directed_) return out_arcs(u);
    return {rev_arcs_.data() + rev_offsets_[u], rev_arcs_.data() + rev_offsets_[u + 1]};
  }

  // Logical edges sorted by (from, to); undirected edges have from < to.
  std::vector<Edge> edges() const;

  // Same structure with every weight multiplied by `factor` (> 0).
  Graph scaled(Weight factor) const;

  friend bool operator==(const Graph&, const Graph&);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> rev_offsets_;
  std::vector<Arc> rev_arcs_;
  std::size_t edge_count_ = 0;
  bool directed_ = false;
  bool unit_weights_ = true;
};

struct LoadedGraph {
  Graph graph;
  IngestStats stats;
};

// Reads "u v [w]" lines. '#' starts a comment line, blank lines are skipped.
// A line holding a single id declares that vertex without edges.
// n is one more than the largest id seen.
LoadedGraph load_edge_list(std::istream& in,
                           Directedness directedness = Directedness::undirected);
LoadedGraph load_edge_list_file(const std::string& path,
                                Directedness directedness = Directedness::undirected);

// Side table for inputs whose vertices are string labels rather than ids.
class LabelTable {
 public:
  VertexId intern(const std::string& label);
  std::optional<VertexId> find(const std::string& label) const;
  const std::string& label(VertexId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

struct LabeledGraph {
  Graph graph;
  IngestStats stats;
  LabelTable labels;
};

// Like load_edge_list, but the first two tokens are arbitrary labels assigned
// ids in order of first appearance.
LabeledGraph load_labeled_edge_list(std::istream& in,
                                    Directedness directedness = Directedness::undirected);

// Writes sorted "u v w" lines, w in shortest round-trip decimal form.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Shortest round-trip decimal text for a double ("1", "0.1", "inf").
std::string format_double(double value);

struct ConnectivityCertificate {
  bool connected = true;
  std::optional<VertexId> witness;  // set iff !connected
};

// Reachability from vertex 0, ignoring arc direction.
ConnectivityCertificate check_connected(const Graph& g);

// Throws DisconnectedGraph carrying the witness when not connected.
void require_connected(const Graph& g);

}  // namespace closeness
