#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "closeness/centrality.hpp"

namespace closeness {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& text);

struct RankedRow {
  VertexId vertex;
  double centrality;
  std::size_t rank;  // dense, 1 = most central
};

// Rows ordered by descending centrality, ties by vertex id. Values within
// kRankTieTolerance (relative) of the group leader share its rank.
inline constexpr double kRankTieTolerance = 1e-12;
std::vector<RankedRow> rank_rows(std::span<const double> values);

// CSV: optional "# key: <json>" metadata lines, then `vertex,centrality,rank`.
// JSON: {"meta": {...}, "rows": [{"vertex","centrality","rank"}...]}.
// Infinite centralities print as "inf" in CSV and null in JSON.
void write_report(std::ostream& out, OutputFormat format, std::span<const RankedRow> rows,
                  const nlohmann::ordered_json& meta);

nlohmann::ordered_json plan_to_json(const SamplePlan& plan);

}  // namespace closeness
