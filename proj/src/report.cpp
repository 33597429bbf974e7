#include "closeness/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace closeness {

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw InvalidArgument("unknown output format '" + text + "' (expected csv or json)");
}

std::vector<RankedRow> rank_rows(std::span<const double> values) {
  std::vector<VertexId> order(values.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return values[a] > values[b]; });

  std::vector<RankedRow> rows;
  rows.reserve(values.size());
  std::size_t rank = 0;
  double leader = 0;
  for (const auto v : order) {
    const double c = values[v];
    const bool tied = rank > 0 && (c == leader || std::abs(leader - c) <=
                                                      kRankTieTolerance * std::abs(leader));
    if (!tied) {
      ++rank;
      leader = c;
    }
    rows.push_back({v, c, rank});
  }
  // Members of a tie group are listed by id.
  std::stable_sort(rows.begin(), rows.end(), [](const RankedRow& a, const RankedRow& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.vertex < b.vertex;
  });
  return rows;
}

void write_report(std::ostream& out, OutputFormat format, std::span<const RankedRow> rows,
                  const nlohmann::ordered_json& meta) {
  if (format == OutputFormat::csv) {
    for (const auto& [key, value] : meta.items()) out << "# " << key << ": " << value.dump() << '\n';
    out << "vertex,centrality,rank\n";
    for (const auto& r : rows) {
      out << r.vertex << ',' << format_double(r.centrality) << ',' << r.rank << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta.is_null() ? nlohmann::ordered_json::object() : meta;
  auto& json_rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["vertex"] = r.vertex;
    // nlohmann writes non-finite numbers as null.
    row["centrality"] = r.centrality;
    row["rank"] = r.rank;
    json_rows.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

nlohmann::ordered_json plan_to_json(const SamplePlan& plan) {
  nlohmann::ordered_json j;
  j["k"] = plan.k;
  j["epsilon"] = plan.epsilon;
  j["delta_vertex"] = plan.delta_vertex;
  j["delta_graph"] = plan.delta_graph;
  j["n"] = plan.n;
  return j;
}

}  // namespace closeness
