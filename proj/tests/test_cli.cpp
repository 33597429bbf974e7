#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "closeness/audit.hpp"
#include "closeness/bench.hpp"
#include "closeness/cli.hpp"
#include "closeness/generators.hpp"
#include "closeness/report.hpp"

using namespace closeness;

namespace {

const std::string kData = CLOSENESS_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Rows of a CSV report, skipping metadata lines.
std::vector<std::string> csv_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST_CASE("rank_rows uses dense ranks with ties ordered by id") {
  const std::vector<double> values{0.5, 1.0, 0.5, 0.25, 1.0};
  const auto rows = rank_rows(values);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].vertex == 1);
  CHECK(rows[0].rank == 1);
  CHECK(rows[1].vertex == 4);
  CHECK(rows[1].rank == 1);
  CHECK(rows[2].vertex == 0);
  CHECK(rows[2].rank == 2);
  CHECK(rows[3].vertex == 2);
  CHECK(rows[4].vertex == 3);
  CHECK(rows[4].rank == 3);
  // Values one ulp apart are a tie.
  const std::vector<double> close{0.1 + 0.2, 0.3};
  CHECK(rank_rows(close)[1].rank == 1);
}

TEST_CASE("exact on P3 writes ranked CSV rows") {
  const auto run = cli({"exact", data("p3.txt")});
  REQUIRE(run.code == kExitOk);
  const auto rows = csv_rows(run.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "vertex,centrality,rank");
  CHECK(rows[1] == "1,1,1");
  CHECK(rows[2] == "0,0.6666666666666666,2");
  CHECK(rows[3] == "2,0.6666666666666666,2");
}

TEST_CASE("exact on K4 ranks every vertex first") {
  const auto run = cli({"exact", data("k4.txt"), "--format", "json"});
  REQUIRE(run.code == kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["meta"]["method"] == "exact");
  REQUIRE(doc["rows"].size() == 4);
  for (const auto& row : doc["rows"]) {
    CHECK(row["centrality"].get<double>() == 1.0);
    CHECK(row["rank"] == 1);
  }
}

TEST_CASE("exit codes") {
  const auto disconnected = cli({"exact", data("disconnected.txt")});
  CHECK(disconnected.code == kExitPrecondition);
  CHECK(disconnected.err.find("vertex 2") != std::string::npos);
  const auto malformed = cli({"exact", data("malformed.txt")});
  CHECK(malformed.code == kExitInput);
  CHECK(malformed.err.find("line 2") != std::string::npos);
  CHECK(cli({"exact", data("missing.txt")}).code == kExitInput);
  CHECK(cli({"exact"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"exact", data("p3.txt"), "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("approx with injected sources equals exact") {
  const auto run = cli({"approx", data("p3.txt"), "--sources", "0,1,2", "--format", "json"});
  REQUIRE(run.code == kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["meta"]["k"] == 3);
  CHECK(doc["meta"]["sources"] == nlohmann::json::array({0, 1, 2}));
  const auto& rows = doc["rows"];
  CHECK(rows[0]["vertex"] == 1);
  CHECK(rows[0]["centrality"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1]["centrality"].get<double>() == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("approx argument combinations") {
  CHECK(cli({"approx", data("p3.txt")}).code == kExitUsage);
  CHECK(cli({"approx", data("p3.txt"), "--epsilon", "0.5", "--k", "3"}).code == kExitUsage);
  CHECK(cli({"approx", data("p3.txt"), "--delta", "0.1", "--k", "3"}).code == kExitUsage);
  CHECK(cli({"approx", data("p3.txt"), "--epsilon", "-1"}).code == kExitUsage);
  CHECK(cli({"approx", data("p3.txt"), "--k", "0"}).code == kExitUsage);
  CHECK(cli({"approx", data("p3.txt"), "--sources", "0,7"}).code == kExitUsage);
  CHECK(cli({"approx", data("disconnected.txt"), "--k", "2"}).code == kExitPrecondition);

  const auto run = cli({"approx", data("k4.txt"), "--epsilon", "0.5", "--delta", "0.01", "--seed", "5"});
  REQUIRE(run.code == kExitOk);
  CHECK(run.out.find("# delta_graph: 0.04") != std::string::npos);
  CHECK(run.out.find("# generator: \"mt19937_64/lemire\"") != std::string::npos);
}

TEST_CASE("approx on a 1000-vertex small world plans 727 samples") {
  const auto dir = std::filesystem::temp_directory_path() / "closeness_cli_ws1000";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "ws.txt").string();
  REQUIRE(cli({"gen", "ws:1000:6:0.1", "--seed", "1", "-o", file}).code == kExitOk);
  const auto run = cli({"approx", file, "--epsilon", "0.1", "--delta", "1e-6", "--seed", "2",
                        "--format", "json"});
  REQUIRE(run.code == kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["meta"]["k"] == 727);
  CHECK(doc["meta"]["plan"]["k"] == 727);
  CHECK(doc["meta"]["sources"].size() == 727);
  std::filesystem::remove_all(dir);
}

TEST_CASE("CSV and JSON outputs carry the same values") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"exact", data("k4.txt")},
           {"approx", data("k4.txt"), "--k", "3", "--seed", "1"},
           {"approx", data("p3.txt"), "--k", "5", "--seed", "8"}}) {
    auto csv_args = args;
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = csv_rows(cli(csv_args).out);
    const auto doc = nlohmann::json::parse(cli(json_args).out);
    REQUIRE(csv.size() == doc["rows"].size() + 1);
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
      const auto& row = doc["rows"][i];
      std::istringstream fields(csv[i + 1]);
      std::string vertex, centrality, rank;
      std::getline(fields, vertex, ',');
      std::getline(fields, centrality, ',');
      std::getline(fields, rank, ',');
      CHECK(std::stoul(vertex) == row["vertex"].get<unsigned>());
      CHECK(std::stoul(rank) == row["rank"].get<unsigned>());
      if (row["centrality"].is_null()) {
        CHECK(centrality == "inf");
      } else {
        CHECK(std::stod(centrality) == row["centrality"].get<double>());
      }
    }
  }
}

TEST_CASE("gen writes the P3 fixture byte for byte and is reproducible") {
  const auto dir = std::filesystem::temp_directory_path() / "closeness_cli_gen";
  std::filesystem::create_directories(dir);
  const auto p3 = (dir / "p3.txt").string();
  REQUIRE(cli({"gen", "path:3", "-o", p3}).code == kExitOk);
  CHECK(slurp(p3) == slurp(data("p3.txt")));

  const auto a = (dir / "a.txt").string();
  const auto b = (dir / "b.txt").string();
  REQUIRE(cli({"gen", "ws:100:6:0.1", "--seed", "4", "-o", a}).code == kExitOk);
  REQUIRE(cli({"gen", "ws:100:6:0.1", "--seed", "4", "-o", b}).code == kExitOk);
  CHECK(slurp(a) == slurp(b));
  std::ifstream in(a);
  const auto g = load_edge_list(in).graph;
  CHECK(g.vertex_count() == 100);
  CHECK(g.edge_count() == 300);
  CHECK(check_connected(g).connected);

  CHECK(cli({"gen", "ws:100:6:0.1"}).code == kExitUsage);  // random family without a seed
  CHECK(cli({"gen", "er:100:0.0001", "--seed", "1"}).code == kExitPrecondition);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sample-size subcommand") {
  const auto run = cli({"sample-size", "--n", "1000", "--epsilon", "0.1", "--delta", "1e-6"});
  REQUIRE(run.code == kExitOk);
  CHECK(run.out == "k,epsilon,delta_vertex,delta_graph,n\n727,0.1,1e-06,0.001,1000\n");
  const auto json = cli({"sample-size", "--n", "1000", "--epsilon", "0.1", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["k"] == 727);
  CHECK(cli({"sample-size", "--n", "1", "--epsilon", "0.1"}).code == kExitUsage);
}

TEST_CASE("audit on K4 records no violations") {
  const auto run = cli({"audit", data("k4.txt"), "--epsilon", "0.5", "--trials", "50", "--seed", "3",
                        "--format", "json"});
  CHECK(run.code == kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["meta"]["violations"] == 0);
  CHECK(doc["meta"]["passed"] == true);
  CHECK(doc["trials"].size() == 50);
}

TEST_CASE("audit detects a single-sample failure on P3") {
  // With one sample the inverse estimate is 1.5 * d(s, u); for every s some
  // vertex is off by at least 0.5 against a budget of 0.01 * 2.
  const auto run = cli({"audit", data("p3.txt"), "--epsilon", "0.01", "--trials", "1", "--k", "1",
                        "--format", "json"});
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["trials"][0]["violated"] == true);
  CHECK(doc["trials"][0]["max_inverse_error"].get<double>() >= 0.5);
  CHECK(doc["meta"]["violations"] == 1);
  // delta_graph = 1/3 leaves enough binomial slack for one trial.
  CHECK(doc["meta"]["passed"] == true);
  CHECK(run.code == kExitOk);
}

TEST_CASE("audit exits 4 when violations exceed the slack") {
  const auto run = cli({"audit", "--spec", "path:30", "--epsilon", "0.01", "--trials", "20", "--k", "1"});
  CHECK(run.code == kExitAuditFailed);
}

TEST_CASE("audit usage and precondition errors") {
  CHECK(cli({"audit", data("k4.txt"), "--epsilon", "0.5", "--trials", "0"}).code == kExitUsage);
  CHECK(cli({"audit", "--epsilon", "0.5", "--trials", "3"}).code == kExitUsage);
  CHECK(cli({"audit", data("k4.txt"), "--spec", "path:3", "--epsilon", "0.5", "--trials", "3"}).code ==
        kExitUsage);
  CHECK(cli({"audit", "--spec", "path:50", "--epsilon", "0.5", "--trials", "3", "--cap", "10"}).code ==
        kExitPrecondition);
  CHECK(cli({"audit", data("disconnected.txt"), "--epsilon", "0.5", "--trials", "3"}).code ==
        kExitPrecondition);
}

TEST_CASE("audit output is reproducible") {
  const std::vector<std::string> args{"audit", "--spec", "ws:60:4:0.2", "--epsilon", "0.3",
                                      "--trials", "20", "--seed", "12"};
  const auto first = cli(args);
  CHECK(first.code == kExitOk);
  CHECK(cli(args).out == first.out);
}

TEST_CASE("ErrorAudit invariants") {
  const auto g = generate({family::WattsStrogatz{80, 4, 0.2}, 2, {}}).graph;
  AuditOptions opts;
  opts.epsilon = 0.05;
  opts.trials = 30;
  opts.seed = 5;
  opts.k_override = 10;
  const auto audit = run_audit(g, opts);
  std::size_t violations = 0;
  for (const auto& t : audit.trials) {
    CHECK(t.violated == (t.max_inverse_error > t.budget));
    CHECK(t.budget == doctest::Approx(0.05 * audit.diameter));
    violations += t.violated;
  }
  CHECK(audit.violations == violations);
  CHECK(audit.violation_fraction == static_cast<double>(violations) / 30);
  CHECK(audit.allowed_violations == binomial_allowance(30, audit.delta_graph));
  CHECK(binomial_allowance(200, 1.0 / 500) == doctest::Approx(0.4 + 3 * std::sqrt(0.4 * 0.998)));
}

TEST_CASE("bench reports speedups and flags tiny graphs") {
  const auto tiny = cli({"bench", "path:5", "--epsilon", "0.1", "--repeats", "1"});
  CHECK(tiny.code == kExitOk);
  CHECK(tiny.err.find("warning") != std::string::npos);
  CHECK(cli({"bench"}).code == kExitUsage);

  BenchOptions opts;
  opts.epsilon = 0.5;
  opts.repeats = 1;
  const auto records = run_bench({parse_generator_spec("path:200"), parse_generator_spec("cycle:50")}, opts);
  REQUIRE(records.size() == 2);
  for (const auto& r : records) {
    CHECK(r.exact_seconds > 0);
    CHECK(r.approx_seconds > 0);
    CHECK(r.speedup == doctest::Approx(r.exact_seconds / r.approx_seconds));
    CHECK(r.exact_cheaper == (r.k >= r.n));
  }
  CHECK(records[0].label == "path:200");
}

TEST_CASE("median_seconds runs warmup plus repeats") {
  int calls = 0;
  const double t = median_seconds([&] { ++calls; }, 3);
  CHECK(calls == 4);
  CHECK(t >= 0);
}

TEST_CASE("sampling speedup grows with path length") {
  BenchOptions opts;
  opts.epsilon = 0.2;
  opts.repeats = 1;
  const auto records =
      run_bench({parse_generator_spec("path:100"), parse_generator_spec("path:10000")}, opts);
  CHECK(records[1].speedup > records[0].speedup);
}
