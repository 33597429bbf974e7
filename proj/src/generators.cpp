#include "closeness/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "closeness/rng.hpp"

namespace closeness {

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::size_t require_vertices(std::size_t n, std::size_t minimum, const char* family) {
  require(n >= minimum, std::string(family) + " needs at least " + std::to_string(minimum) +
                            " vertices");
  require(n < std::numeric_limits<VertexId>::max(), std::string(family) + ": too many vertices");
  return n;
}

Pairs path_pairs(std::size_t n) {
  Pairs out;
  for (std::size_t v = 1; v < n; ++v) out.emplace_back(v - 1, v);
  return out;
}

Pairs cycle_pairs(std::size_t n) {
  auto out = path_pairs(n);
  out.emplace_back(0, static_cast<VertexId>(n - 1));
  return out;
}

Pairs star_pairs(std::size_t n) {
  Pairs out;
  for (std::size_t v = 1; v < n; ++v) out.emplace_back(0, v);
  return out;
}

Pairs complete_pairs(std::size_t n) {
  Pairs out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

std::size_t tree_size(std::size_t arity, std::size_t depth) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t d = 0; d <= depth; ++d) {
    total += level;
    require(total < (std::size_t{1} << 31), "balanced tree too large");
    level *= arity;
  }
  return total;
}

Pairs tree_pairs(std::size_t arity, std::size_t depth) {
  const auto n = tree_size(arity, depth);
  Pairs out;
  for (std::size_t v = 1; v < n; ++v) out.emplace_back((v - 1) / arity, v);
  return out;
}

bool pairs_connected(std::size_t n, const Pairs& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1.0});
  return check_connected(Graph::from_edges(n, edges)).connected;
}

// G(n, p) by geometric skipping over the lower triangle (Batagelj-Brandes).
Pairs gnp_pairs(std::size_t n, double p, Random& rng) {
  Pairs out;
  if (p <= 0 || n < 2) return out;
  if (p >= 1) return complete_pairs(n);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double skip = std::floor(std::log1p(-rng.unit()) / log_q);
    w += 1 + static_cast<std::int64_t>(std::min(skip, 9e15));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) out.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return out;
}

class Adjacency {
 public:
  explicit Adjacency(std::size_t n) : lists_(n) {}

  bool has(VertexId u, VertexId v) const {
    const auto& l = lists_[u];
    return std::find(l.begin(), l.end(), v) != l.end();
  }
  void add(VertexId u, VertexId v) {
    lists_[u].push_back(v);
    lists_[v].push_back(u);
  }
  void remove(VertexId u, VertexId v) {
    erase_one(lists_[u], v);
    erase_one(lists_[v], u);
  }
  std::size_t degree(VertexId u) const { return lists_[u].size(); }

  bool reaches(VertexId from, VertexId to, std::vector<char>& seen,
               std::vector<VertexId>& queue) const {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(from);
    seen[from] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const VertexId x : lists_[queue[head]]) {
        if (x == to) return true;
        if (!seen[x]) {
          seen[x] = 1;
          queue.push_back(x);
        }
      }
    }
    return from == to;
  }

  Pairs pairs() const {
    Pairs out;
    for (std::size_t u = 0; u < lists_.size(); ++u) {
      for (const VertexId v : lists_[u]) {
        if (u < v) out.emplace_back(static_cast<VertexId>(u), v);
      }
    }
    return out;
  }

 private:
  static void erase_one(std::vector<VertexId>& l, VertexId v) {
    const auto it = std::find(l.begin(), l.end(), v);
    if (it != l.end()) l.erase(it);
  }

  std::vector<std::vector<VertexId>> lists_;
};

// Ring lattice, then rewire the far end of each lattice edge with
// probability `rewire`. A move that would disconnect the graph is undone and
// redrawn; after kRewireRetryCap failed draws the lattice edge stays.
Pairs watts_strogatz_pairs(const family::WattsStrogatz& ws, Random& rng) {
  const auto n = ws.n;
  const auto half = ws.degree / 2;
  Adjacency adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= half; ++j) {
      adj.add(static_cast<VertexId>(u), static_cast<VertexId>((u + j) % n));
    }
  }
  std::vector<char> seen(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t ui = 0; ui < n; ++ui) {
      const auto u = static_cast<VertexId>(ui);
      const auto v = static_cast<VertexId>((ui + j) % n);
      if (!rng.bernoulli(ws.rewire)) continue;
      if (!adj.has(u, v) || adj.degree(u) >= n - 1) continue;
      for (std::size_t attempt = 0; attempt < kRewireRetryCap; ++attempt) {
        const auto w = static_cast<VertexId>(rng.below(n));
        if (w == u || adj.has(u, w)) continue;
        adj.remove(u, v);
        adj.add(u, w);
        if (adj.reaches(u, v, seen, queue)) break;
        adj.remove(u, w);
        adj.add(u, v);
      }
    }
  }
  auto out = adj.pairs();
  std::sort(out.begin(), out.end());
  return out;
}

struct Structure {
  std::size_t n = 0;
  Pairs pairs;
  std::size_t retries = 0;
};

Structure build_structure(const GeneratorSpec& spec) {
  const bool random = is_random(spec.family);
  require(!random || spec.seed.has_value(), "random graph families require a seed");
  Random rng(random ? derive_seed(*spec.seed, 0) : 0);

  return std::visit(
      overloaded{
          [](const family::Path& f) {
            return Structure{require_vertices(f.n, 1, "path"), path_pairs(f.n), 0};
          },
          [](const family::Cycle& f) {
            return Structure{require_vertices(f.n, 3, "cycle"), cycle_pairs(f.n), 0};
          },
          [](const family::Star& f) {
            return Structure{require_vertices(f.n, 1, "star"), star_pairs(f.n), 0};
          },
          [](const family::Complete& f) {
            require(f.n <= 100000, "complete graph too large");
            return Structure{require_vertices(f.n, 1, "complete"), complete_pairs(f.n), 0};
          },
          [](const family::BalancedTree& f) {
            require(f.arity >= 2, "balanced tree arity must be >= 2");
            return Structure{tree_size(f.arity, f.depth), tree_pairs(f.arity, f.depth), 0};
          },
          [&rng](const family::ErdosRenyi& f) {
            require_vertices(f.n, 1, "erdos-renyi");
            require(f.p >= 0 && f.p <= 1, "erdos-renyi p must lie in [0, 1]");
            for (std::size_t attempt = 0; attempt < kErdosRenyiRetryCap; ++attempt) {
              auto pairs = gnp_pairs(f.n, f.p, rng);
              if (pairs_connected(f.n, pairs)) return Structure{f.n, std::move(pairs), attempt};
            }
            throw GraphPrecondition("erdos-renyi(" + std::to_string(f.n) + ", " +
                                    format_double(f.p) + ") stayed disconnected after " +
                                    std::to_string(kErdosRenyiRetryCap) + " draws");
          },
          [&rng](const family::WattsStrogatz& f) {
            require_vertices(f.n, 3, "watts-strogatz");
            require(f.degree >= 2 && f.degree % 2 == 0, "watts-strogatz degree must be even and >= 2");
            require(f.degree < f.n, "watts-strogatz degree must be below n");
            require(f.rewire >= 0 && f.rewire <= 1, "watts-strogatz rewire must lie in [0, 1]");
            return Structure{f.n, watts_strogatz_pairs(f, rng), 0};
          },
      },
      spec.family);
}

template <typename T>
T parse_number(std::string_view token, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InvalidArgument("bad number '" + std::string(token) + "' in generator spec '" +
                          std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

bool is_random(const Family& f) {
  return std::holds_alternative<family::ErdosRenyi>(f) ||
         std::holds_alternative<family::WattsStrogatz>(f);
}

GeneratedGraph generate(const GeneratorSpec& spec) {
  const auto& wm = spec.weights;
  if (wm.kind == WeightModel::Kind::uniform) {
    require(wm.lo > 0 && std::isfinite(wm.hi) && wm.hi >= wm.lo,
            "uniform weights need 0 < lo <= hi");
    require(spec.seed.has_value(), "uniform weights require a seed");
  }
  auto structure = build_structure(spec);

  std::vector<Edge> edges;
  edges.reserve(structure.pairs.size());
  std::optional<Random> weight_rng;
  if (wm.kind == WeightModel::Kind::uniform) weight_rng.emplace(derive_seed(*spec.seed, 1));
  for (const auto& [u, v] : structure.pairs) {
    const double w = weight_rng ? wm.lo + (wm.hi - wm.lo) * weight_rng->unit() : 1.0;
    edges.push_back({u, v, w});
  }
  return {Graph::from_edges(structure.n, edges), structure.retries};
}

GeneratorSpec parse_generator_spec(std::string_view text, std::optional<std::uint64_t> seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  auto family_text = text;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    family_text = text.substr(0, slash);
    const auto weights = split(text.substr(slash + 1), ':');
    if (weights.size() == 1 && weights[0] == "unit") {
      spec.weights = WeightModel::unit();
    } else if (weights.size() == 3 && weights[0] == "uniform") {
      spec.weights = WeightModel::uniform(parse_number<double>(weights[1], text),
                                          parse_number<double>(weights[2], text));
    } else {
      throw InvalidArgument("bad weight model in generator spec '" + std::string(text) + "'");
    }
  }
  const auto parts = split(family_text, ':');
  const auto& name = parts[0];
  auto arg_count = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw InvalidArgument("generator '" + std::string(name) + "' takes " +
                            std::to_string(count) + " argument(s): '" + std::string(text) + "'");
    }
  };
  auto size_arg = [&](std::size_t i) { return parse_number<std::size_t>(parts[i], text); };
  auto real_arg = [&](std::size_t i) { return parse_number<double>(parts[i], text); };

  if (name == "path") {
    arg_count(1);
    spec.family = family::Path{size_arg(1)};
  } else if (name == "cycle") {
    arg_count(1);
    spec.family = family::Cycle{size_arg(1)};
  } else if (name == "star") {
    arg_count(1);
    spec.family = family::Star{size_arg(1)};
  } else if (name == "complete") {
    arg_count(1);
    spec.family = family::Complete{size_arg(1)};
  } else if (name == "tree") {
    arg_count(2);
    spec.family = family::BalancedTree{size_arg(1), size_arg(2)};
  } else if (name == "er") {
    arg_count(2);
    spec.family = family::ErdosRenyi{size_arg(1), real_arg(2)};
  } else if (name == "ws") {
    arg_count(3);
    spec.family = family::WattsStrogatz{size_arg(1), size_arg(2), real_arg(3)};
  } else {
    throw InvalidArgument("unknown generator family '" + std::string(name) + "'");
  }
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  auto text = std::visit(
      overloaded{
          [](const family::Path& f) { return "path:" + std::to_string(f.n); },
          [](const family::Cycle& f) { return "cycle:" + std::to_string(f.n); },
          [](const family::Star& f) { return "star:" + std::to_string(f.n); },
          [](const family::Complete& f) { return "complete:" + std::to_string(f.n); },
          [](const family::BalancedTree& f) {
            return "tree:" + std::to_string(f.arity) + ":" + std::to_string(f.depth);
          },
          [](const family::ErdosRenyi& f) {
            return "er:" + std::to_string(f.n) + ":" + format_double(f.p);
          },
          [](const family::WattsStrogatz& f) {
            return "ws:" + std::to_string(f.n) + ":" + std::to_string(f.degree) + ":" +
                   format_double(f.rewire);
          },
      },
      spec.family);
  if (spec.weights.kind == WeightModel::Kind::uniform) {
    text += "/uniform:" + format_double(spec.weights.lo) + ":" + format_double(spec.weights.hi);
  }
  return text;
}

}  // namespace closeness
