#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "closeness/graph.hpp"

namespace closeness {

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
// n vertices in total: vertex 0 is the center, 1..n-1 are leaves.
struct Star { std::size_t n; };
struct Complete { std::size_t n; };
// Root 0, children of v are arity*v+1 .. arity*v+arity (heap order).
struct BalancedTree { std::size_t arity; std::size_t depth; };
struct ErdosRenyi { std::size_t n; double p; };
// Ring lattice where each vertex links to degree/2 neighbours per side,
// then each edge's far end is rewired with probability rewire.
struct WattsStrogatz { std::size_t n; std::size_t degree; double rewire; };
}  // namespace family

using Family = std::variant<family::Path, family::Cycle, family::Star, family::Complete,
                            family::BalancedTree, family::ErdosRenyi, family::WattsStrogatz>;

struct WeightModel {
  enum class Kind { unit, uniform };
  Kind kind = Kind::unit;
  double lo = 1.0;  // uniform draws land in [lo, hi)
  double hi = 1.0;

  static WeightModel unit() { return {}; }
  static WeightModel uniform(double lo, double hi) { return {Kind::uniform, lo, hi}; }
};

struct GeneratorSpec {
  Family family;
  std::optional<std::uint64_t> seed;
  WeightModel weights;
};

struct GeneratedGraph {
  Graph graph;
  std::size_t retries = 0;  // Erdos-Renyi redraws needed to get a connected sample
};

inline constexpr std::size_t kErdosRenyiRetryCap = 1000;
inline constexpr std::size_t kRewireRetryCap = 64;

// Deterministic in the spec (including seed). Throws InvalidArgument for
// out-of-range parameters or a random spec without a seed, and
// GraphPrecondition if Erdos-Renyi stays disconnected after the retry cap.
GeneratedGraph generate(const GeneratorSpec& spec);

bool is_random(const Family& f);

// Text form used by the CLI:
//   path:N cycle:N star:N complete:N tree:ARITY:DEPTH er:N:P ws:N:DEGREE:REWIRE
// optionally followed by "/uniform:LO:HI".
GeneratorSpec parse_generator_spec(std::string_view text,
                                   std::optional<std::uint64_t> seed = std::nullopt);
std::string to_string(const GeneratorSpec& spec);

}  // namespace closeness
