#include "closeness/sampling.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "closeness/rng.hpp"
#include "closeness/shortest_paths.hpp"

namespace closeness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Estimate run_estimator(const Graph& g, std::span<const VertexId> sources, const ExecOptions& opts) {
  const auto n = g.vertex_count();
  if (n < 2) throw GraphPrecondition("closeness needs at least 2 vertices");
  if (sources.empty()) throw InvalidArgument("sample count k must be at least 1");
  for (const auto s : sources) {
    if (s >= n) throw InvalidArgument("sampled source " + std::to_string(s) + " out of range");
  }
  if (!g.directed()) require_connected(g);

  const auto start = Clock::now();
  const auto k = sources.size();
  Estimate result;
  result.trace.sources.assign(sources.begin(), sources.end());
  result.trace.source_seconds.assign(k, 0.0);

  // Searches run in parallel batches; sums are folded in iteration order so
  // the floating-point result does not depend on scheduling.
  const std::size_t batch = std::size_t{resolve_threads(opts, k)} * 4;
  std::vector<Weight> sums(n, 0);
  std::vector<std::vector<Weight>> pending(std::min(batch, k));
  for (std::size_t first = 0; first < k; first += batch) {
    const auto count = std::min(batch, k - first);
    parallel_for(count, opts, [&](std::size_t j) {
      const auto t0 = Clock::now();
      pending[j] = sssp(g, sources[first + j]).dist;
      result.trace.source_seconds[first + j] = seconds_since(t0);
    });
    for (std::size_t j = 0; j < count; ++j) {
      const auto& dist = pending[j];
      for (std::size_t u = 0; u < n; ++u) {
        if (dist[u] == kInfinity) throw DisconnectedGraph(static_cast<VertexId>(u));
        sums[u] += dist[u];
      }
    }
  }

  auto& report = result.report;
  report.method = CentralityMethod::sampled;
  report.values.resize(n);
  const double numerator = static_cast<double>(k) * static_cast<double>(n - 1);
  const auto nd = static_cast<double>(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (sums[u] > 0) {
      report.values[u] = numerator / (nd * sums[u]);
    } else {
      report.values[u] = kInfinity;
      result.trace.self_sampled.push_back(static_cast<VertexId>(u));
    }
  }
  report.sampling = SamplingMetadata{k, 0, seconds_since(start), std::nullopt};
  return result;
}

double hoeffding_failure(std::size_t k, double rate) {
  return 2.0 * std::exp(-static_cast<double>(k) * rate);
}

}  // namespace

SamplePlan sample_size(std::size_t n, double epsilon, double delta_vertex) {
  if (n < 2) throw InvalidArgument("sample_size needs n >= 2");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive");
  if (!(delta_vertex > 0 && delta_vertex < 1)) {
    throw InvalidArgument("delta must lie strictly between 0 and 1");
  }
  const double ratio = static_cast<double>(n - 1) / static_cast<double>(n);
  // Per-sample exponent: each distance term lies in [0, n*diam/(n-1)] and
  // the target deviation is epsilon*diam, so the diameter cancels.
  const double rate = 2.0 * epsilon * epsilon * ratio * ratio;
  const double raw = std::ceil(std::log(2.0 / delta_vertex) / rate);
  if (!(raw < 1e15)) throw InvalidArgument("epsilon too small: sample count overflows");

  auto k = static_cast<std::size_t>(std::max(raw, 1.0));
  // Nudge across rounding noise in the closed form.
  while (k > 1 && hoeffding_failure(k - 1, rate) <= delta_vertex) --k;
  while (hoeffding_failure(k, rate) > delta_vertex) ++k;

  SamplePlan plan;
  plan.k = k;
  plan.epsilon = epsilon;
  plan.delta_vertex = delta_vertex;
  plan.delta_graph = std::min(1.0, static_cast<double>(n) * delta_vertex);
  plan.n = n;
  return plan;
}

double default_delta_vertex(std::size_t n) {
  const auto nd = static_cast<double>(n);
  return 1.0 / (nd * nd);
}

std::vector<VertexId> draw_sources(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("cannot sample from an empty graph");
  Random rng(seed);
  std::vector<VertexId> sources(k);
  for (auto& s : sources) s = static_cast<VertexId>(rng.below(n));
  return sources;
}

Estimate estimate_centrality(const Graph& g, std::size_t k, std::uint64_t seed,
                             const ExecOptions& opts) {
  if (k < 1) throw InvalidArgument("sample count k must be at least 1");
  if (g.vertex_count() < 2) throw GraphPrecondition("closeness needs at least 2 vertices");
  const auto sources = draw_sources(g.vertex_count(), k, seed);
  auto est = run_estimator(g, sources, opts);
  est.trace.seed = seed;
  est.trace.generator = Random::kFamily;
  est.report.sampling->seed = seed;
  return est;
}

Estimate estimate_from_sources(const Graph& g, std::span<const VertexId> sources,
                               const ExecOptions& opts) {
  auto est = run_estimator(g, sources, opts);
  est.trace.generator = "injected";
  return est;
}

PlannedEstimate estimate_with_plan(const Graph& g, double epsilon,
                                   std::optional<double> delta_vertex, std::uint64_t seed,
                                   const ExecOptions& opts) {
  const auto n = g.vertex_count();
  if (n < 2) throw GraphPrecondition("closeness needs at least 2 vertices");
  const auto plan = sample_size(n, epsilon, delta_vertex.value_or(default_delta_vertex(n)));
  auto est = estimate_centrality(g, plan.k, seed, opts);
  est.report.sampling->plan = plan;
  return {std::move(est.report), plan, std::move(est.trace)};
}

}  // namespace closeness
