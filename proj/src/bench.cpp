#include "closeness/bench.hpp"

#include <algorithm>
#include <ostream>

#include "closeness/exact.hpp"
#include "closeness/sampling.hpp"

namespace closeness {

double median_seconds(const std::function<void()>& run, std::size_t repeats) {
  if (repeats == 0) throw InvalidArgument("repeats must be at least 1");
  using Clock = std::chrono::steady_clock;
  run();  // warmup
  std::vector<double> samples;
  samples.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    run();
    samples.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const auto mid = repeats / 2;
  return repeats % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

BenchRecord bench_graph(const Graph& g, const std::string& label, const BenchOptions& opts) {
  const auto n = g.vertex_count();
  const auto plan = sample_size(n, opts.epsilon, default_delta_vertex(n));

  BenchRecord rec;
  rec.label = label;
  rec.n = n;
  rec.m = g.edge_count();
  rec.k = plan.k;
  rec.exact_seconds = median_seconds([&] { (void)exact_centrality(g, opts.exec); }, opts.repeats);
  rec.approx_seconds = median_seconds(
      [&] { (void)estimate_centrality(g, plan.k, opts.seed, opts.exec); }, opts.repeats);
  // Clock resolution floor keeps the ratio finite on trivial inputs.
  rec.exact_seconds = std::max(rec.exact_seconds, 1e-9);
  rec.approx_seconds = std::max(rec.approx_seconds, 1e-9);
  rec.speedup = rec.exact_seconds / rec.approx_seconds;
  rec.k_over_n = static_cast<double>(rec.k) / static_cast<double>(n);
  rec.exact_cheaper = rec.k >= n;
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<GeneratorSpec>& specs,
                                   const BenchOptions& opts) {
  if (specs.empty()) throw InvalidArgument("bench needs at least one graph spec");
  std::vector<BenchRecord> records;
  for (const auto& spec : specs) {
    const auto generated = generate(spec);
    records.push_back(bench_graph(generated.graph, to_string(spec), opts));
  }
  return records;
}

void write_bench(std::ostream& out, OutputFormat format, const std::vector<BenchRecord>& records) {
  if (format == OutputFormat::csv) {
    out << "spec,n,m,k,exact_seconds,approx_seconds,speedup,k_over_n,exact_cheaper\n";
    for (const auto& r : records) {
      out << r.label << ',' << r.n << ',' << r.m << ',' << r.k << ','
          << format_double(r.exact_seconds) << ',' << format_double(r.approx_seconds) << ','
          << format_double(r.speedup) << ',' << format_double(r.k_over_n) << ','
          << (r.exact_cheaper ? 1 : 0) << '\n';
    }
    return;
  }
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["spec"] = r.label;
    row["n"] = r.n;
    row["m"] = r.m;
    row["k"] = r.k;
    row["exact_seconds"] = r.exact_seconds;
    row["approx_seconds"] = r.approx_seconds;
    row["speedup"] = r.speedup;
    row["k_over_n"] = r.k_over_n;
    row["exact_cheaper"] = r.exact_cheaper;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace closeness
