// Command-line front end: solve / bench / surface / poi subcommands over
// DIMACS or CSV road networks. Artifacts go to stdout (or --output),
// diagnostics to stderr. Exit codes: 0 ok, 1 usage or parse error,
// 2 infeasible query, 3 venue credential/network error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meetup/bench.hpp"
#include "meetup/errors.hpp"
#include "meetup/matrix_cache.hpp"
#include "meetup/meetup.hpp"
#include "meetup/poi.hpp"
#include "meetup/serialize.hpp"
#include "meetup/traffic.hpp"

namespace {

using namespace meetup;

struct GraphOptions {
  std::string format = "dimacs";
  std::string gr_path;        // dimacs .gr
  std::string co_path;        // dimacs .co
  std::string nodes_path;     // csv nodes
  std::string edges_path;     // csv edges
  std::string dimacs_weight = "length";
};

struct WeightOptions {
  std::string metric = "distance";
  std::string traffic;  // "", "hierarchical", "random", or a scenario path
  std::uint64_t traffic_seed = 1;
  double default_speed_kmh = kDefaultUnknownSpeedKmh;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
  cmd->add_option("--format", g.format, "graph format: dimacs or csv")
      ->check(CLI::IsMember({"dimacs", "csv"}))
      ->capture_default_str();
  cmd->add_option("--graph", g.gr_path, "DIMACS .gr arc file");
  cmd->add_option("--coords", g.co_path, "DIMACS .co coordinate file");
  cmd->add_option("--nodes", g.nodes_path, "CSV node table");
  cmd->add_option("--edges", g.edges_path, "CSV edge table");
  cmd->add_option("--dimacs-weight", g.dimacs_weight,
                  "interpret DIMACS arc weights as length or time")
      ->check(CLI::IsMember({"length", "time"}))
      ->capture_default_str();
}

void add_weight_options(CLI::App* cmd, WeightOptions& w) {
  cmd->add_option("--metric", w.metric, "objective metric")
      ->check(CLI::IsMember({"distance", "time"}))
      ->capture_default_str();
  cmd->add_option("--traffic", w.traffic,
                  "traffic context: hierarchical, random, or a scenario "
                  "JSON path (implies --metric time)");
  cmd->add_option("--traffic-seed", w.traffic_seed,
                  "seed for --traffic random")
      ->capture_default_str();
  cmd->add_option("--default-speed", w.default_speed_kmh,
                  "max speed (km/h) for unclassified roads")
      ->capture_default_str();
}

RoadGraph load_graph(const GraphOptions& g) {
  if (g.format == "dimacs") {
    if (g.gr_path.empty() || g.co_path.empty())
      throw ConfigError("dimacs format needs --graph and --coords");
    const auto kind = g.dimacs_weight == "time" ? DimacsWeight::time
                                                : DimacsWeight::length;
    return load_dimacs(g.gr_path, g.co_path, kind);
  }
  if (g.nodes_path.empty() || g.edges_path.empty())
    throw ConfigError("csv format needs --nodes and --edges");
  return load_csv(g.nodes_path, g.edges_path);
}

WeightView build_weights(const RoadGraph& graph, const WeightOptions& w) {
  const bool want_time = w.metric == "time" || !w.traffic.empty();
  if (!want_time) return WeightView::distance_weights(graph);

  if (w.traffic.empty())
    return base_time_weights(graph, w.default_speed_kmh);
  TrafficScenario scenario;
  if (w.traffic == "hierarchical")
    scenario = hierarchical_scenario(graph);
  else if (w.traffic == "random")
    scenario = random_scenario(graph, w.traffic_seed);
  else
    scenario = load_scenario(w.traffic);
  return time_weights(graph, scenario, w.default_speed_kmh);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open output file " + path);
  return f;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    auto f = open_output(output_path);
    f << text;
  }
}

int run_solve(const GraphOptions& gopt, const WeightOptions& wopt,
              const std::string& query_path, const std::string& method_name,
              const std::string& output_path,
              std::optional<std::size_t> ed_k, std::size_t greedy_k,
              const std::string& cache_path) {
  const RoadGraph graph = load_graph(gopt);
  const WeightView weights = build_weights(graph, wopt);
  MeetupQuery query = load_query(query_path, graph);
  query.metric = weights.metric();

  const auto method = strategy_from_string(method_name);
  if (!method) throw ConfigError("unknown method '" + method_name + "'");

  SolveOptions opts;
  opts.ed_k = ed_k;
  opts.greedy_k = greedy_k;
  std::optional<DistanceMatrix> cache;
  if (!cache_path.empty()) {
    if (std::filesystem::exists(cache_path)) {
      cache = DistanceMatrix::load(cache_path);
      if (!cache->matches(graph, weights))
        throw ConfigError("cache " + cache_path +
                          " does not match this graph/weights");
      std::cerr << "using all-pairs cache " << cache_path << "\n";
    } else {
      std::cerr << "building all-pairs cache " << cache_path << "\n";
      cache = DistanceMatrix::build(graph, weights);
      cache->save(cache_path);
    }
    opts.cache = &*cache;
  }

  const MeetupSolution sol = solve_with(*method, graph, weights, query, opts);
  emit(solution_to_json(sol, graph, query), output_path);
  return 0;
}

int run_bench(const GraphOptions& gopt, const WeightOptions& wopt,
              int n_cases, int objects, std::uint64_t seed,
              const std::string& methods_arg, const std::string& out_dir,
              int jobs, std::optional<std::size_t> ed_k,
              std::size_t greedy_k) {
  if (n_cases <= 0) throw ConfigError("--cases must be positive");
  const RoadGraph graph = load_graph(gopt);
  const WeightView weights = build_weights(graph, wopt);

  std::vector<Strategy> methods;
  std::stringstream ss(methods_arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto m = strategy_from_string(token);
    if (!m) throw ConfigError("unknown method '" + token + "'");
    methods.push_back(*m);
  }

  const auto cases = gen_cases(graph, n_cases, objects, seed,
                               weights.metric());
  RunOptions ropt;
  ropt.jobs = jobs;
  ropt.solve.ed_k = ed_k;
  ropt.solve.greedy_k = greedy_k;
  const auto results = run_experiment(graph, weights, cases, methods, ropt);
  const Summary summary = summarize(results);

  std::filesystem::create_directories(out_dir);
  {
    auto f = open_output(out_dir + "/results.csv");
    write_results_csv(results, f);
  }
  {
    auto f = open_output(out_dir + "/summary.csv");
    write_summary_csv(summary, f);
  }
  for (const MethodSummary& m : summary.methods) {
    auto f = open_output(out_dir + "/cdf_" +
                         std::string(to_string(m.method)) + ".csv");
    export_cdf(results, m.method, f);
  }
  print_summary_table(summary, std::cout);
  std::cerr << "wrote " << out_dir << "/{results,summary,cdf_*}.csv\n";
  return 0;
}

int run_surface(const GraphOptions& gopt, const WeightOptions& wopt,
                const std::string& query_path,
                const std::string& output_path) {
  const RoadGraph graph = load_graph(gopt);
  const WeightView weights = build_weights(graph, wopt);
  MeetupQuery query = load_query(query_path, graph);
  query.metric = weights.metric();

  const auto rows = cost_surface(graph, weights, query);
  if (rows.empty())
    throw InfeasibleError("no node is reachable by every moving object");
  std::stringstream out;
  write_surface_csv(rows, out);
  emit(out.str(), output_path);
  return 0;
}

int run_poi(const GraphOptions& gopt, const WeightOptions& wopt,
            const std::string& query_path, const std::string& method_name,
            const std::string& venues_path, const std::string& endpoint,
            std::size_t k, double weight_popularity,
            const std::string& output_path) {
  const RoadGraph graph = load_graph(gopt);
  const WeightView weights = build_weights(graph, wopt);
  MeetupQuery query = load_query(query_path, graph);
  query.metric = weights.metric();

  const auto method = strategy_from_string(method_name);
  if (!method) throw ConfigError("unknown method '" + method_name + "'");
  const MeetupSolution sol = solve_with(*method, graph, weights, query);
  const LonLat meetup_pos = graph.node_pos(sol.node);

  std::vector<Venue> venues;
  if (!venues_path.empty()) {
    venues = load_venues(venues_path);
  } else if (!endpoint.empty()) {
    venues = fetch_remote(
        VenueSource{VenueSourceKind::remote_service, endpoint}, meetup_pos,
        k);
  } else {
    throw ConfigError("poi needs --venues or --venue-endpoint");
  }

  const auto ranked = rank_nearby(venues, meetup_pos, k, weight_popularity);

  nlohmann::json doc{{"meetup_node", sol.node},
                     {"lon", meetup_pos.lon},
                     {"lat", meetup_pos.lat},
                     {"objective", sol.objective},
                     {"method", std::string(to_string(sol.method))}};
  nlohmann::json arr = nlohmann::json::array();
  for (const RankedVenue& rv : ranked) {
    arr.push_back(nlohmann::json{{"id", rv.venue.id},
                                 {"name", rv.venue.name},
                                 {"lon", rv.venue.lon},
                                 {"lat", rv.venue.lat},
                                 {"category", rv.venue.category},
                                 {"popularity", rv.venue.popularity},
                                 {"distance_m", rv.distance_m},
                                 {"score", rv.score}});
  }
  doc["venues"] = std::move(arr);
  emit(doc.dump(2) + "\n", output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Road-network meetup location optimizer"};
  app.require_subcommand(1);

  GraphOptions gopt;
  WeightOptions wopt;
  std::string query_path;
  std::string method = "exact";
  std::string output_path;
  std::string cache_path;
  std::optional<std::size_t> ed_k;
  std::size_t greedy_k = 8;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "solve one meetup query");
  add_graph_options(solve, gopt);
  add_weight_options(solve, wopt);
  solve->add_option("--query", query_path, "query JSON file")->required();
  solve->add_option("--method", method,
                    "exact, sp, ch, dp, rt, ed, or greedy")
      ->capture_default_str();
  solve->add_option("--output", output_path, "write JSON here (default stdout)");
  solve->add_option("--ed-k", ed_k, "candidate count for the ed method");
  solve->add_option("--greedy-k", greedy_k, "greedy neighborhood size")
      ->capture_default_str();
  solve->add_option("--cache-matrix", cache_path,
                    "all-pairs cache file (built on first use; graphs up to "
                    "20000 nodes)");

  int n_cases = 0;
  int objects = 2;
  std::uint64_t seed = 42;
  std::string methods_arg = "sp,ch,dp,rt,ed,greedy";
  std::string out_dir = "bench_out";

  auto* bench = app.add_subcommand("bench", "run the benchmark harness");
  add_graph_options(bench, gopt);
  add_weight_options(bench, wopt);
  bench->add_option("--cases", n_cases, "number of random cases")->required();
  bench->add_option("--objects", objects, "moving objects per case")
      ->capture_default_str();
  bench->add_option("--seed", seed, "case-generation seed")
      ->capture_default_str();
  bench->add_option("--methods", methods_arg,
                    "comma-separated heuristics (exact always runs)")
      ->capture_default_str();
  bench->add_option("--out-dir", out_dir, "directory for CSV artifacts")
      ->capture_default_str();
  bench->add_option("--jobs", jobs,
                    "worker threads; 1 = sequential timing mode")
      ->capture_default_str();
  bench->add_option("--ed-k", ed_k, "candidate count for the ed method");
  bench->add_option("--greedy-k", greedy_k, "greedy neighborhood size");

  auto* surface = app.add_subcommand(
      "surface", "export the meetup cost surface as CSV");
  add_graph_options(surface, gopt);
  add_weight_options(surface, wopt);
  surface->add_option("--query", query_path, "query JSON file")->required();
  surface->add_option("--output", output_path,
                      "write CSV here (default stdout)");

  std::string venues_path;
  std::string endpoint;
  std::size_t poi_k = 10;
  double poi_popularity_weight = 0.0;

  auto* poi = app.add_subcommand(
      "poi", "solve a query, then rank venues around the meetup node");
  add_graph_options(poi, gopt);
  add_weight_options(poi, wopt);
  poi->add_option("--query", query_path, "query JSON file")->required();
  poi->add_option("--method", method, "solver to use")->capture_default_str();
  poi->add_option("--venues", venues_path, "venue CSV file");
  poi->add_option("--venue-endpoint", endpoint,
                  "remote venue service URL (needs VENUE_API_KEY)");
  poi->add_option("-k,--poi-k", poi_k, "venues to rank")
      ->capture_default_str();
  poi->add_option("--popularity-weight", poi_popularity_weight,
                  "popularity blend in [0,1]; 0 = pure distance")
      ->capture_default_str();
  poi->add_option("--output", output_path, "write JSON here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed())
      return run_solve(gopt, wopt, query_path, method, output_path, ed_k,
                       greedy_k, cache_path);
    if (bench->parsed())
      return run_bench(gopt, wopt, n_cases, objects, seed, methods_arg,
                       out_dir, jobs, ed_k, greedy_k);
    if (surface->parsed())
      return run_surface(gopt, wopt, query_path, output_path);
    if (poi->parsed())
      return run_poi(gopt, wopt, query_path, method, venues_path, endpoint,
                     poi_k, poi_popularity_weight, output_path);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // credential problems surface as exit 3, other config issues as 1
    return std::string(e.what()).find("VENUE_API_KEY") != std::string::npos
               ? 3
               : 1;
  } catch (const RemoteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
