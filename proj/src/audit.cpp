#include "closeness/audit.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "closeness/exact.hpp"
#include "closeness/rng.hpp"
#include "closeness/sampling.hpp"

namespace closeness {

double binomial_allowance(std::size_t trials, double delta_graph) {
  const double t = static_cast<double>(trials);
  return t * delta_graph + 3.0 * std::sqrt(t * delta_graph * (1.0 - delta_graph));
}

ErrorAudit run_audit(const Graph& g, const AuditOptions& opts) {
  if (opts.trials == 0) throw InvalidArgument("audit needs at least one trial");
  if (opts.k_override && *opts.k_override == 0) throw InvalidArgument("k must be at least 1");
  const auto n = g.vertex_count();
  if (n > opts.cap) {
    throw GraphPrecondition("graph has " + std::to_string(n) + " vertices, above the exact-pass cap of " +
                            std::to_string(opts.cap));
  }

  const auto exact = exact_analysis(g, opts.exec);
  const auto plan = sample_size(n, opts.epsilon, default_delta_vertex(n));

  ErrorAudit audit;
  audit.n = n;
  audit.m = g.edge_count();
  audit.diameter = exact.diameter.upper;
  audit.max_centrality = *std::max_element(exact.report.values.begin(), exact.report.values.end());
  audit.epsilon = opts.epsilon;
  audit.k = opts.k_override.value_or(plan.k);
  audit.seed = opts.seed;
  audit.delta_graph = plan.delta_graph;
  const double budget = opts.epsilon * audit.diameter;

  std::vector<double> exact_inverse(n);
  for (std::size_t u = 0; u < n; ++u) exact_inverse[u] = 1.0 / exact.report.values[u];

  // Trials are independent streams; records land in trial order.
  audit.trials.resize(opts.trials);
  parallel_for(opts.trials, opts.exec, [&](std::size_t t) {
    const auto seed = derive_seed(opts.seed, t);
    // Searches inside a trial stay serial; parallelism is across trials.
    const auto est = estimate_centrality(g, audit.k, seed, ExecOptions{1});
    TrialRecord rec;
    rec.trial = t;
    rec.seed = seed;
    rec.k = audit.k;
    rec.budget = budget;
    for (std::size_t u = 0; u < n; ++u) {
      const double c = exact.report.values[u];
      const double estimate = est.report.values[u];
      const double inverse_error = std::abs(1.0 / estimate - exact_inverse[u]);
      rec.max_inverse_error = std::max(rec.max_inverse_error, inverse_error);
      rec.max_scaled_inverse_error = std::max(rec.max_scaled_inverse_error, c * inverse_error);
      rec.max_relative_error = std::max(rec.max_relative_error, std::abs(estimate - c) / c);
    }
    rec.violated = rec.max_inverse_error > budget;
    audit.trials[t] = rec;
  });

  audit.violations = static_cast<std::size_t>(
      std::count_if(audit.trials.begin(), audit.trials.end(),
                    [](const TrialRecord& r) { return r.violated; }));
  audit.violation_fraction =
      static_cast<double>(audit.violations) / static_cast<double>(opts.trials);
  audit.allowed_violations = binomial_allowance(opts.trials, audit.delta_graph);
  audit.passed = static_cast<double>(audit.violations) <= audit.allowed_violations;
  return audit;
}

void write_audit(std::ostream& out, OutputFormat format, const ErrorAudit& audit) {
  nlohmann::ordered_json meta;
  meta["n"] = audit.n;
  meta["m"] = audit.m;
  meta["diameter"] = audit.diameter;
  meta["max_centrality"] = audit.max_centrality;
  meta["epsilon"] = audit.epsilon;
  meta["budget"] = audit.epsilon * audit.diameter;
  meta["k"] = audit.k;
  meta["seed"] = audit.seed;
  meta["trials"] = audit.trials.size();
  meta["violations"] = audit.violations;
  meta["violation_fraction"] = audit.violation_fraction;
  meta["delta_graph"] = audit.delta_graph;
  meta["allowed_violations"] = audit.allowed_violations;
  meta["passed"] = audit.passed;

  if (format == OutputFormat::csv) {
    for (const auto& [key, value] : meta.items()) out << "# " << key << ": " << value.dump() << '\n';
    out << "trial,seed,k,max_inverse_error,budget,violated,max_relative_error,max_scaled_inverse_error\n";
    for (const auto& r : audit.trials) {
      out << r.trial << ',' << r.seed << ',' << r.k << ',' << format_double(r.max_inverse_error)
          << ',' << format_double(r.budget) << ',' << (r.violated ? 1 : 0) << ','
          << format_double(r.max_relative_error) << ',' << format_double(r.max_scaled_inverse_error)
          << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  auto& rows = doc["trials"] = nlohmann::ordered_json::array();
  for (const auto& r : audit.trials) {
    nlohmann::ordered_json row;
    row["trial"] = r.trial;
    row["seed"] = r.seed;
    row["k"] = r.k;
    row["max_inverse_error"] = r.max_inverse_error;
    row["budget"] = r.budget;
    row["violated"] = r.violated;
    row["max_relative_error"] = r.max_relative_error;
    row["max_scaled_inverse_error"] = r.max_scaled_inverse_error;
    rows.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace closeness
