#include "closeness/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "closeness/audit.hpp"
#include "closeness/bench.hpp"
#include "closeness/exact.hpp"
#include "closeness/generators.hpp"
#include "closeness/report.hpp"
#include "closeness/sampling.hpp"

namespace closeness {

namespace {

struct CommonOptions {
  std::string format = "csv";
  bool directed = false;
  unsigned threads = 0;

  ExecOptions exec() const { return {threads}; }
  Directedness directedness() const {
    return directed ? Directedness::directed : Directedness::undirected;
  }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--directed", common.directed, "Treat edges as directed (u -> v)");
  cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
}

LoadedGraph read_graph(const std::string& path, Directedness directedness) {
  if (path == "-") return load_edge_list(std::cin, directedness);
  return load_edge_list_file(path, directedness);
}

std::vector<VertexId> parse_source_list(const std::string& text) {
  std::vector<VertexId> sources;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InvalidArgument("bad source id '" + token + "'");
    sources.push_back(static_cast<VertexId>(value));
  }
  if (sources.empty()) throw InvalidArgument("--sources needs at least one id");
  return sources;
}

nlohmann::ordered_json id_list(const std::vector<VertexId>& ids) {
  auto j = nlohmann::ordered_json::array();
  for (const auto v : ids) j.push_back(v);
  return j;
}

int cmd_exact(const std::string& path, const CommonOptions& common, bool timings,
              std::ostream& out) {
  const auto loaded = read_graph(path, common.directedness());
  const auto start = std::chrono::steady_clock::now();
  const auto report = exact_centrality(loaded.graph, common.exec());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::ordered_json meta;
  meta["method"] = "exact";
  meta["n"] = loaded.graph.vertex_count();
  meta["m"] = loaded.graph.edge_count();
  if (timings) meta["elapsed_seconds"] = elapsed;
  write_report(out, parse_output_format(common.format), rank_rows(report.values), meta);
  return kExitOk;
}

struct ApproxOptions {
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::string sources;
  bool timings = false;
};

int cmd_approx(const std::string& path, const ApproxOptions& opts, const CommonOptions& common,
               std::ostream& out) {
  const bool by_plan = opts.epsilon.has_value();
  const bool by_k = opts.k.has_value();
  const bool injected = !opts.sources.empty();
  if (static_cast<int>(by_plan) + static_cast<int>(by_k) + static_cast<int>(injected) != 1) {
    throw InvalidArgument("approx needs exactly one of --epsilon [--delta] or --k");
  }
  if (opts.delta && !by_plan) throw InvalidArgument("--delta requires --epsilon");

  const auto loaded = read_graph(path, common.directedness());
  const auto& g = loaded.graph;

  CentralityReport report;
  SampleTrace trace;
  std::optional<SamplePlan> plan;
  if (by_plan) {
    auto planned = estimate_with_plan(g, *opts.epsilon, opts.delta, opts.seed, common.exec());
    report = std::move(planned.report);
    trace = std::move(planned.trace);
    plan = planned.plan;
  } else if (by_k) {
    auto est = estimate_centrality(g, *opts.k, opts.seed, common.exec());
    report = std::move(est.report);
    trace = std::move(est.trace);
  } else {
    const auto sources = parse_source_list(opts.sources);
    auto est = estimate_from_sources(g, sources, common.exec());
    report = std::move(est.report);
    trace = std::move(est.trace);
  }

  nlohmann::ordered_json meta;
  meta["method"] = "sampled";
  meta["n"] = g.vertex_count();
  meta["m"] = g.edge_count();
  meta["k"] = trace.sources.size();
  meta["seed"] = injected ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(opts.seed);
  meta["generator"] = trace.generator;
  meta["delta_graph"] = plan ? nlohmann::ordered_json(plan->delta_graph) : nlohmann::ordered_json(nullptr);
  if (plan) meta["plan"] = plan_to_json(*plan);
  meta["sources"] = id_list(trace.sources);
  meta["self_sampled"] = id_list(trace.self_sampled);
  if (opts.timings) meta["elapsed_seconds"] = report.sampling->elapsed_seconds;
  write_report(out, parse_output_format(common.format), rank_rows(report.values), meta);
  return kExitOk;
}

struct AuditCliOptions {
  std::string file;
  std::string spec;
  double epsilon = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;
  std::size_t cap = 5000;
};

int cmd_audit(const AuditCliOptions& opts, const CommonOptions& common, std::ostream& out) {
  if (opts.file.empty() == opts.spec.empty()) {
    throw InvalidArgument("audit needs exactly one of a graph file or --spec");
  }
  if (opts.trials == 0) throw InvalidArgument("--trials must be at least 1");
  if (!(opts.epsilon > 0)) throw InvalidArgument("--epsilon must be positive");

  Graph g;
  if (!opts.file.empty()) {
    g = read_graph(opts.file, common.directedness()).graph;
  } else {
    g = generate(parse_generator_spec(opts.spec, opts.seed)).graph;
  }
  AuditOptions audit_opts;
  audit_opts.epsilon = opts.epsilon;
  audit_opts.trials = opts.trials;
  audit_opts.seed = opts.seed;
  audit_opts.k_override = opts.k;
  audit_opts.cap = opts.cap;
  audit_opts.exec = common.exec();
  const auto audit = run_audit(g, audit_opts);
  write_audit(out, parse_output_format(common.format), audit);
  return audit.passed ? kExitOk : kExitAuditFailed;
}

int cmd_bench(const std::vector<std::string>& spec_texts, double epsilon, std::uint64_t seed,
              std::size_t repeats, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
  if (spec_texts.empty()) throw InvalidArgument("bench needs at least one graph spec");
  std::vector<GeneratorSpec> specs;
  for (const auto& text : spec_texts) specs.push_back(parse_generator_spec(text, seed));
  BenchOptions opts;
  opts.epsilon = epsilon;
  opts.seed = seed;
  opts.repeats = repeats;
  opts.exec = common.exec();
  const auto records = run_bench(specs, opts);
  for (const auto& r : records) {
    if (r.exact_cheaper) {
      err << "warning: " << r.label << ": k = " << r.k << " >= n = " << r.n
          << ", the exact computation is cheaper\n";
    }
  }
  write_bench(out, parse_output_format(common.format), records);
  return kExitOk;
}

int cmd_gen(const std::string& spec_text, std::optional<std::uint64_t> seed,
            const std::string& output, std::ostream& out, std::ostream& err) {
  const auto generated = generate(parse_generator_spec(spec_text, seed));
  if (generated.retries > 0) {
    err << "note: " << generated.retries << " disconnected draw(s) rejected\n";
  }
  if (output.empty() || output == "-") {
    write_edge_list(out, generated.graph);
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error("cannot open '" + output + "' for writing");
  write_edge_list(file, generated.graph);
  file.flush();
  if (!file) throw Error("write to '" + output + "' failed");
  return kExitOk;
}

int cmd_sample_size(std::size_t n, double epsilon, std::optional<double> delta,
                    const CommonOptions& common, std::ostream& out) {
  const auto plan = sample_size(n, epsilon, delta.value_or(default_delta_vertex(std::max<std::size_t>(n, 1))));
  if (parse_output_format(common.format) == OutputFormat::json) {
    out << plan_to_json(plan).dump(2) << '\n';
  } else {
    out << "k,epsilon,delta_vertex,delta_graph,n\n"
        << plan.k << ',' << format_double(plan.epsilon) << ',' << format_double(plan.delta_vertex)
        << ',' << format_double(plan.delta_graph) << ',' << plan.n << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closeness centrality: exact all-sources and sampled estimates", "closeness"};
  app.require_subcommand(1);

  CommonOptions common;

  std::string exact_file;
  bool exact_timings = false;
  auto* exact = app.add_subcommand("exact", "Exact closeness of every vertex");
  exact->add_option("graph", exact_file, "Edge-list file ('-' for stdin)")->required();
  exact->add_flag("--timings", exact_timings, "Include wall time in the metadata");
  add_common(exact, common);

  std::string approx_file;
  ApproxOptions approx_opts;
  auto* approx = app.add_subcommand("approx", "Sampled closeness estimate");
  approx->add_option("graph", approx_file, "Edge-list file ('-' for stdin)")->required();
  approx->add_option("--epsilon", approx_opts.epsilon, "Error as a fraction of the diameter");
  approx->add_option("--delta", approx_opts.delta, "Per-vertex failure probability (default 1/n^2)");
  approx->add_option("--k", approx_opts.k, "Explicit sample count");
  approx->add_option("--seed", approx_opts.seed, "RNG seed");
  approx->add_option("--sources", approx_opts.sources)->group("");
  approx->add_flag("--timings", approx_opts.timings, "Include wall time in the metadata");
  add_common(approx, common);

  AuditCliOptions audit_opts;
  auto* audit = app.add_subcommand("audit", "Check sampled estimates against the exact values");
  audit->add_option("graph", audit_opts.file, "Edge-list file");
  audit->add_option("--spec", audit_opts.spec, "Generator spec instead of a file");
  audit->add_option("--epsilon", audit_opts.epsilon, "Error as a fraction of the diameter")->required();
  audit->add_option("--trials", audit_opts.trials, "Independent estimates")->required();
  audit->add_option("--seed", audit_opts.seed, "Base seed");
  audit->add_option("--k", audit_opts.k, "Override the planned sample count");
  audit->add_option("--cap", audit_opts.cap, "Largest n allowed for the exact pass");
  add_common(audit, common);

  std::vector<std::string> bench_specs;
  double bench_epsilon = 0.2;
  std::uint64_t bench_seed = 0;
  std::size_t bench_repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time exact against sampled closeness");
  bench->add_option("specs", bench_specs, "Generator specs");
  bench->add_option("--epsilon", bench_epsilon, "Error as a fraction of the diameter");
  bench->add_option("--seed", bench_seed, "Seed for generators and sampling");
  bench->add_option("--repeats", bench_repeats, "Timed runs per measurement (median reported)");
  add_common(bench, common);

  std::string gen_spec;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "Generator spec, e.g. ws:100:6:0.1")->required();
  gen->add_option("--seed", gen_seed, "Seed for random families and weights");
  gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

  std::size_t ss_n = 0;
  double ss_epsilon = 0;
  std::optional<double> ss_delta;
  auto* ss = app.add_subcommand("sample-size", "Sample count for an error target");
  ss->add_option("--n", ss_n, "Vertex count")->required();
  ss->add_option("--epsilon", ss_epsilon, "Error as a fraction of the diameter")->required();
  ss->add_option("--delta", ss_delta, "Per-vertex failure probability (default 1/n^2)");
  ss->add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*exact) return cmd_exact(exact_file, common, exact_timings, out);
    if (*approx) return cmd_approx(approx_file, approx_opts, common, out);
    if (*audit) return cmd_audit(audit_opts, common, out);
    if (*bench) {
      return cmd_bench(bench_specs, bench_epsilon, bench_seed, bench_repeats, common, out, err);
    }
    if (*gen) return cmd_gen(gen_spec, gen_seed, gen_output, out, err);
    if (*ss) return cmd_sample_size(ss_n, ss_epsilon, ss_delta, common, out);
  } catch (const GraphPrecondition& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace closeness
