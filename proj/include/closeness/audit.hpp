#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "closeness/graph.hpp"
#include "closeness/parallel.hpp"
#include "closeness/report.hpp"

namespace closeness {

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  double max_inverse_error = 0;  // max_u |1/est_u - 1/c_u|
  double budget = 0;             // epsilon * diameter
  bool violated = false;         // max_inverse_error > budget
  double max_relative_error = 0;          // max_u |est_u - c_u| / c_u
  double max_scaled_inverse_error = 0;    // max_u c_u |1/est_u - 1/c_u|
};

struct ErrorAudit {
  std::size_t n = 0;
  std::size_t m = 0;
  double diameter = 0;
  double max_centrality = 0;
  double epsilon = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  std::size_t violations = 0;
  double violation_fraction = 0;
  double delta_graph = 0;
  double allowed_violations = 0;  // trials*dg + 3 sqrt(trials*dg*(1-dg))
  bool passed = false;
};

struct AuditOptions {
  double epsilon = 0.1;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k_override;
  std::size_t cap = 5000;  // largest n the exact pass is allowed on
  ExecOptions exec;
};

// violations <= trials*dg + 3 sqrt(trials*dg*(1-dg))
double binomial_allowance(std::size_t trials, double delta_graph);

// Exact pass once, then `trials` estimates with k = sample_size(n, eps, 1/n^2)
// (or k_override). Trial t uses seed derive_seed(seed, t).
ErrorAudit run_audit(const Graph& g, const AuditOptions& opts);

void write_audit(std::ostream& out, OutputFormat format, const ErrorAudit& audit);

}  // namespace closeness
