// End-to-end checks of the command-line tool against the checked-in demo
// fixtures. Each case shells out to the built binary, captures stdout into
// a file, and inspects exit codes and artifacts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = MEETUP_CLI_PATH;
const std::string kFixtures = FIXTURES_DIR;

fs::path work_dir() {
  const auto dir = fs::temp_directory_path() / "meetup_cli_tests";
  fs::create_directories(dir);
  return dir;
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_raw(const std::string& cmd_line) {
  const auto out_path = work_dir() / "stdout.txt";
  const std::string cmd =
      cmd_line + " > " + out_path.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  return RunResult{WEXITSTATUS(raw), ss.str()};
}

RunResult run(const std::string& args) { return run_raw(kCli + " " + args); }

std::string graph_args() {
  return "--format csv --nodes " + kFixtures + "/demo_nodes.csv --edges " +
         kFixtures + "/demo_edges.csv";
}

}  // namespace

TEST_CASE("solve emits a solution JSON and dominance holds across methods") {
  const std::string base =
      "solve " + graph_args() + " --query " + kFixtures + "/demo_query.json";

  const RunResult rt = run(base + " --method rt");
  REQUIRE(rt.exit_code == 0);
  const auto rt_doc = nlohmann::json::parse(rt.stdout_text);
  CHECK(rt_doc.at("method") == "rt");

  const RunResult exact = run(base + " --method exact");
  REQUIRE(exact.exit_code == 0);
  const auto exact_doc = nlohmann::json::parse(exact.stdout_text);
  CHECK(exact_doc.at("objective").get<double>() <=
        rt_doc.at("objective").get<double>() + 1e-12);

  //

  // The demo query pins its optimum at the crossing of the two straight
  // shortest paths.
  CHECK(exact_doc.at("node") == 24);
}

TEST_CASE("every method answers the demo query") {
  for (const std::string m : {"exact", "sp", "ch", "dp", "rt", "ed",
                              "greedy"}) {
    const RunResult r = run("solve " + graph_args() + " --query " +
                            kFixtures + "/demo_query.json --method " + m);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.stdout_text);
    CHECK(doc.at("objective").get<double>() > 0.0);
  }
}

TEST_CASE("traffic overlays change the time-metric answer") {
  const std::string base =
      "solve " + graph_args() + " --query " + kFixtures + "/demo_query.json";
  const RunResult free_flow = run(base + " --metric time");
  const RunResult jammed = run(base + " --metric time --traffic " +
                               kFixtures + "/scenario_manual.json");
  REQUIRE(free_flow.exit_code == 0);
  REQUIRE(jammed.exit_code == 0);
  const auto a = nlohmann::json::parse(free_flow.stdout_text);
  const auto b = nlohmann::json::parse(jammed.stdout_text);
  CHECK(b.at("objective").get<double>() >=
        a.at("objective").get<double>() - 1e-12);

  const RunResult hier = run(base + " --traffic hierarchical");
  REQUIRE(hier.exit_code == 0);
  const auto h = nlohmann::json::parse(hier.stdout_text);
  CHECK(h.at("metric") == "time");
}

TEST_CASE("solve exit codes: parse failure and infeasible query") {
  const auto dir = work_dir();
  {
    std::ofstream f(dir / "broken.json");
    f << "{ nope";
  }
  const RunResult bad = run("solve " + graph_args() + " --query " +
                            (dir / "broken.json").string());
  CHECK(bad.exit_code == 1);

  const RunResult missing = run("solve " + graph_args());
  CHECK(missing.exit_code == 1);

  // Disconnected two-node graph: no common meetup node.
  {
    std::ofstream n(dir / "iso_nodes.csv");
    n << "node_id,lon,lat\n1,0,0\n2,1,0\n3,0,0.5\n4,1,0.5\n";
    std::ofstream e(dir / "iso_edges.csv");
    e << "edge_id,u,v,length_m,road_class,max_speed_kmh,oneway\n";
    e << "a,1,2,100,residential,,0\n";
    e << "b,3,4,100,residential,,0\n";
    std::ofstream q(dir / "iso_query.json");
    q << R"({"objects": [
      {"origin": {"node": 1}, "destination": {"node": 2}},
      {"origin": {"node": 3}, "destination": {"node": 4}}]})";
  }
  const RunResult infeasible = run(
      "solve --format csv --nodes " + (dir / "iso_nodes.csv").string() +
      " --edges " + (dir / "iso_edges.csv").string() + " --query " +
      (dir / "iso_query.json").string());
  CHECK(infeasible.exit_code == 2);

  const RunResult empty_surface = run(
      "surface --format csv --nodes " + (dir / "iso_nodes.csv").string() +
      " --edges " + (dir / "iso_edges.csv").string() + " --query " +
      (dir / "iso_query.json").string());
  CHECK(empty_surface.exit_code == 2);
}

TEST_CASE("surface exports one row per reachable node") {
  const RunResult r = run("surface " + graph_args() + " --query " +
                          kFixtures + "/demo_query.json");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.stdout_text);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "node_id,lon,lat,objective");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 49);  // the demo grid is fully connected
}

TEST_CASE("bench writes deterministic artifacts") {
  const auto dir = work_dir();
  const std::string out1 = (dir / "bench1").string();
  const std::string out2 = (dir / "bench2").string();
  const std::string args = "bench " + graph_args() +
                           " --cases 8 --objects 2 --seed 7 --methods "
                           "rt,ed --out-dir ";

  const RunResult a = run(args + out1);
  REQUIRE(a.exit_code == 0);
  const RunResult b = run(args + out2);
  REQUIRE(b.exit_code == 0);

  const auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };

  // Accuracy columns replay exactly; runtimes move, so compare the first
  // four columns of each summary line.
  std::istringstream s1(slurp(out1 + "/summary.csv"));
  std::istringstream s2(slurp(out2 + "/summary.csv"));
  std::string l1, l2;
  while (std::getline(s1, l1) && std::getline(s2, l2)) {
    const auto head = [](const std::string& s) {
      std::size_t pos = 0;
      for (int commas = 0; pos < s.size(); ++pos) {
        if (s[pos] == ',' && ++commas == 4) break;
      }
      return s.substr(0, pos);
    };
    CHECK(head(l1) == head(l2));
  }

  CHECK(fs::exists(out1 + "/results.csv"));
  CHECK(fs::exists(out1 + "/cdf_exact.csv"));
  CHECK(fs::exists(out1 + "/cdf_rt.csv"));
  CHECK(fs::exists(out1 + "/cdf_ed.csv"));

  const RunResult zero = run("bench " + graph_args() + " --cases 0");
  CHECK(zero.exit_code == 1);
}

TEST_CASE("poi ranks fixture venues around the solved node") {
  const RunResult r = run("poi " + graph_args() + " --query " + kFixtures +
                          "/demo_query.json --venues " + kFixtures +
                          "/dc_pois.csv -k 10");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc.at("meetup_node") == 24);
  REQUIRE(doc.at("venues").size() == 10);
  double prev = -1.0;
  for (const auto& v : doc.at("venues")) {
    CHECK(v.at("distance_m").get<double>() >= prev);
    prev = v.at("distance_m").get<double>();
  }

  // k larger than the fixture returns everything.
  const RunResult all = run("poi " + graph_args() + " --query " + kFixtures +
                            "/demo_query.json --venues " + kFixtures +
                            "/dc_pois.csv -k 99");
  REQUIRE(all.exit_code == 0);
  CHECK(nlohmann::json::parse(all.stdout_text).at("venues").size() == 18);

  // Remote source without a credential: exit 3 before any network use.
  const RunResult no_key = run_raw(
      "env -u VENUE_API_KEY " + kCli + " poi " + graph_args() + " --query " +
      kFixtures +
      "/demo_query.json --venue-endpoint http://127.0.0.1:1/venues -k 5");
  CHECK(no_key.exit_code == 3);
}

TEST_CASE("cache-matrix solves match the direct path") {
  const auto dir = work_dir();
  const std::string cache = (dir / "demo.matrix").string();
  fs::remove(cache);
  const std::string base = "solve " + graph_args() + " --query " + kFixtures +
                           "/demo_query.json --method exact";

  const RunResult direct = run(base);
  const RunResult build = run(base + " --cache-matrix " + cache);
  const RunResult reuse = run(base + " --cache-matrix " + cache);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(build.exit_code == 0);
  REQUIRE(reuse.exit_code == 0);
  CHECK(fs::exists(cache));

  const auto d = nlohmann::json::parse(direct.stdout_text);
  const auto b = nlohmann::json::parse(build.stdout_text);
  const auto r = nlohmann::json::parse(reuse.stdout_text);
  CHECK(d.at("node") == b.at("node"));
  CHECK(d.at("objective") == b.at("objective"));
  CHECK(d.at("objective") == r.at("objective"));
}
