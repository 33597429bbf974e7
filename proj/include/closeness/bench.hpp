#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "closeness/generators.hpp"
#include "closeness/parallel.hpp"
#include "closeness/report.hpp"

namespace closeness {

struct BenchRecord {
  std::string label;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double exact_seconds = 0;
  double approx_seconds = 0;
  double speedup = 0;  // exact / approx
  double k_over_n = 0;
  bool exact_cheaper = false;  // k >= n: sampling cannot win
};

// One untimed warmup, then the median of `repeats` timed runs on a
// monotonic clock.
double median_seconds(const std::function<void()>& run, std::size_t repeats = 3);

struct BenchOptions {
  double epsilon = 0.2;
  std::uint64_t seed = 0;
  std::size_t repeats = 3;
  ExecOptions exec;
};

BenchRecord bench_graph(const Graph& g, const std::string& label, const BenchOptions& opts);
std::vector<BenchRecord> run_bench(const std::vector<GeneratorSpec>& specs,
                                   const BenchOptions& opts);

void write_bench(std::ostream& out, OutputFormat format, const std::vector<BenchRecord>& records);

}  // namespace closeness
