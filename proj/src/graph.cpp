#include "closeness/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace closeness {

namespace {

void validate_weight(Weight w) {
  if (!std::isfinite(w)) throw InvalidArgument("edge weight must be finite");
  if (w < 0) throw InvalidArgument("edge weight must be non-negative");
}

// Sort (from, to) then weight, keep the first (minimum) of each run.
std::size_t collapse_duplicates(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.weight < b.weight;
  });
  const auto before = edges.size();
  auto last = std::unique(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to;
  });
  edges.erase(last, edges.end());
  return before - edges.size();
}

void build_csr(std::size_t n, const std::vector<Edge>& arcs, std::vector<std::size_t>& offsets,
               std::vector<Arc>& out, bool reverse) {
  offsets.assign(n + 1, 0);
  for (const auto& e : arcs) ++offsets[(reverse ? e.to : e.from) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  out.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : arcs) {
    const VertexId tail = reverse ? e.to : e.from;
    const VertexId head = reverse ? e.from : e.to;
    out[cursor[tail]++] = Arc{head, e.weight};
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

VertexId parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "invalid vertex id '" + std::string(token) + "'");
  }
  if (value >= std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "vertex id out of range '" + std::string(token) + "'");
  }
  return static_cast<VertexId>(value);
}

Weight parse_weight(std::string_view token, std::size_t line_no) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_no, "non-finite weight '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "invalid weight '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line_no, "non-finite weight '" + std::string(token) + "'");
  if (value < 0) throw ParseError(line_no, "negative weight '" + std::string(token) + "'");
  return value;
}

// Shared line loop. `resolve` maps a token to an id.
template <typename Resolve>
LoadedGraph read_lines(std::istream& in, Directedness directedness, Resolve&& resolve) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_tokens(line);
    if (tokens.size() > 3) throw ParseError(line_no, "expected 'u v [w]'");
    const VertexId u = resolve(tokens[0], line_no);
    n = std::max<std::size_t>(n, std::size_t{u} + 1);
    if (tokens.size() == 1) continue;
    const VertexId v = resolve(tokens[1], line_no);
    n = std::max<std::size_t>(n, std::size_t{v} + 1);
    const Weight w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    edges.push_back({u, v, w});
  }
  if (in.bad()) throw Error("read error");
  LoadedGraph result;
  result.graph = Graph::from_edges(n, edges, directedness, &result.stats);
  return result;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, Directedness directedness,
                        IngestStats* stats) {
  if (n >= std::numeric_limits<VertexId>::max()) throw InvalidArgument("too many vertices");
  Graph g;
  g.directed_ = directedness == Directedness::directed;

  IngestStats local;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                            ") references a vertex >= n = " + std::to_string(n));
    }
    validate_weight(e.weight);
    if (e.from == e.to) {
      ++local.self_loops_dropped;
      continue;
    }
    Edge k = e;
    if (!g.directed_ && k.from > k.to) std::swap(k.from, k.to);
    normalized.push_back(k);
  }
  local.duplicates_merged = collapse_duplicates(normalized);
  g.edge_count_ = normalized.size();
  g.unit_weights_ = std::all_of(normalized.begin(), normalized.end(),
                                [](const Edge& e) { return e.weight == 1.0; });

  if (g.directed_) {
    build_csr(n, normalized, g.offsets_, g.arcs_, false);
    build_csr(n, normalized, g.rev_offsets_, g.rev_arcs_, true);
  } else {
    std::vector<Edge> both;
    both.reserve(2 * normalized.size());
    for (const auto& e : normalized) {
      both.push_back(e);
      both.push_back({e.to, e.from, e.weight});
    }
    build_csr(n, both, g.offsets_, g.arcs_, false);
  }
  if (stats) *stats = local;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (const auto& a : out_arcs(u)) {
      if (directed_ || u < a.target) out.push_back({u, a.target, a.weight});
    }
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  return out;
}

Graph Graph::scaled(Weight factor) const {
  if (!(factor > 0) || !std::isfinite(factor)) throw InvalidArgument("scale factor must be positive");
  auto list = edges();
  for (auto& e : list) e.weight *= factor;
  return from_edges(vertex_count(), list,
                    directed_ ? Directedness::directed : Directedness::undirected);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.directed_ == b.directed_ && a.vertex_count() == b.vertex_count() &&
         a.edges() == b.edges();
}

LoadedGraph load_edge_list(std::istream& in, Directedness directedness) {
  return read_lines(in, directedness, parse_id);
}

LoadedGraph load_edge_list_file(const std::string& path, Directedness directedness) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_edge_list(in, directedness);
}

VertexId LabelTable::intern(const std::string& label) {
  const auto [it, inserted] = ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<VertexId> LabelTable::find(const std::string& label) const {
  const auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

LabeledGraph load_labeled_edge_list(std::istream& in, Directedness directedness) {
  LabeledGraph result;
  auto loaded = read_lines(in, directedness, [&](std::string_view token, std::size_t) {
    return result.labels.intern(std::string(token));
  });
  result.graph = std::move(loaded.graph);
  result.stats = loaded.stats;
  return result;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto n = g.vertex_count();
  for (const auto& e : g.edges()) {
    out << e.from << ' ' << e.to << ' ' << format_double(e.weight) << '\n';
  }
  // n is recovered from the largest id, so an isolated last vertex needs
  // its own declaration line.
  if (n > 0 && g.out_arcs(static_cast<VertexId>(n - 1)).empty() &&
      g.in_arcs(static_cast<VertexId>(n - 1)).empty()) {
    out << n - 1 << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

ConnectivityCertificate check_connected(const Graph& g) {
  const auto n = g.vertex_count();
  if (n <= 1) return {};
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  auto visit = [&](VertexId v) {
    if (!seen[v]) {
      seen[v] = 1;
      ++reached;
      stack.push_back(v);
    }
  };
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const auto& a : g.out_arcs(u)) visit(a.target);
    if (g.directed()) {
      for (const auto& a : g.in_arcs(u)) visit(a.target);
    }
  }
  if (reached == n) return {};
  const auto it = std::find(seen.begin(), seen.end(), 0);
  return {false, static_cast<VertexId>(it - seen.begin())};
}

void require_connected(const Graph& g) {
  const auto cert = check_connected(g);
  if (!cert.connected) throw DisconnectedGraph(*cert.witness);
}

}  // namespace closeness
