#include "meetup/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "meetup/errors.hpp"

namespace meetup {

using nlohmann::json;

namespace {

NodeId parse_endpoint(const json& item, const RoadGraph& g,
                      const std::string& what) {
  if (item.contains("node")) {
    const auto id = item.at("node").get<std::int64_t>();
    if (id < 1 || !g.has_node(static_cast<NodeId>(id)))
      throw ValidationError(what + ": node " + std::to_string(id) +
                            " not in graph");
    return static_cast<NodeId>(id);
  }
  if (item.contains("lonlat")) {
    const auto arr = item.at("lonlat");
    if (!arr.is_array() || arr.size() != 2)
      throw ParseError(what + ": lonlat must be [lon, lat]");
    return g.snap_to_node(
        LonLat{arr[0].get<double>(), arr[1].get<double>()});
  }
  throw ParseError(what + ": expected {\"node\": id} or {\"lonlat\": [..]}");
}

}  // namespace

MeetupQuery parse_query(const std::string& json_text, const RoadGraph& g) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("query JSON: ") + e.what());
  }

  MeetupQuery q;
  try {
    const auto mode = doc.value("mode", std::string("intermediate"));
    if (mode == "intermediate")
      q.mode = MeetupMode::intermediate;
    else if (mode == "final_destination")
      q.mode = MeetupMode::final_destination;
    else
      throw ParseError("query: unknown mode '" + mode + "'");

    const auto metric = doc.value("metric", std::string("distance"));
    if (metric == "distance")
      q.metric = Metric::distance;
    else if (metric == "time")
      q.metric = Metric::time;
    else
      throw ParseError("query: unknown metric '" + metric + "'");

    std::size_t index = 0;
    for (const auto& item : doc.at("objects")) {
      MovingObject obj;
      obj.id = item.value("id", "obj" + std::to_string(index + 1));
      obj.origin = parse_endpoint(item.at("origin"), g,
                                  "object '" + obj.id + "' origin");
      if (item.contains("destination"))
        obj.destination = parse_endpoint(
            item.at("destination"), g, "object '" + obj.id + "' destination");
      obj.w_out = item.value("w_out", 1.0);
      obj.w_back = item.value("w_back", 1.0);
      q.objects.push_back(std::move(obj));
      ++index;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("query JSON: ") + e.what());
  }
  validate_query(g, q);
  return q;
}

MeetupQuery load_query(const std::string& path, const RoadGraph& g) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_query(ss.str(), g);
}

std::string solution_to_json(const MeetupSolution& sol, const RoadGraph& g,
                             const MeetupQuery& q) {
  const LonLat pos = g.node_pos(sol.node);
  json doc{
      {"method", std::string(to_string(sol.method))},
      {"mode", std::string(to_string(q.mode))},
      {"metric", std::string(to_string(q.metric))},
      {"node", sol.node},
      {"lon", pos.lon},
      {"lat", pos.lat},
      {"objective", sol.objective},
      {"candidate_count", sol.candidate_count},
      {"fell_back", sol.fell_back},
      {"elapsed_s", sol.elapsed_s},
  };
  json objs = json::array();
  for (std::size_t i = 0; i < sol.per_object.size(); ++i) {
    objs.push_back(json{{"id", q.objects[i].id},
                        {"to_cost", sol.per_object[i].to_cost},
                        {"from_cost", sol.per_object[i].from_cost}});
  }
  doc["per_object"] = std::move(objs);
  return doc.dump(2) + "\n";
}

TrafficScenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }

  TrafficScenario s;
  try {
    const auto kind = doc.value("kind", std::string("manual"));
    if (kind == "none")
      s.kind = ScenarioKind::none;
    else if (kind == "hierarchical")
      s.kind = ScenarioKind::hierarchical;
    else if (kind == "random")
      s.kind = ScenarioKind::random;
    else if (kind == "manual")
      s.kind = ScenarioKind::manual;
    else
      throw ParseError(path + ": unknown scenario kind '" + kind + "'");

    if (doc.contains("seed")) s.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("levels")) {
      for (const auto& pair : doc.at("levels")) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError(path + ": levels entries must be [edge_id, level]");
        s.levels[pair[0].get<EdgeId>()] =
            traffic_level_from_int(pair[1].get<int>());
      }
    }
    if (doc.contains("delays")) {
      for (const auto& pair : doc.at("delays")) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError(path +
                           ": delays entries must be [edge_id, seconds]");
        const double d = pair[1].get<double>();
        if (d < 0.0) throw ValidationError(path + ": negative delay");
        s.extra_delay_s[pair[0].get<EdgeId>()] += d;
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return s;
}

void save_scenario(const TrafficScenario& scenario, std::ostream& out) {
  json doc{{"kind", std::string(to_string(scenario.kind))}};
  if (scenario.seed) doc["seed"] = *scenario.seed;
  json levels = json::array();
  std::vector<std::pair<EdgeId, int>> sorted_levels;
  for (const auto& [e, lvl] : scenario.levels)
    sorted_levels.emplace_back(e, static_cast<int>(lvl));
  std::sort(sorted_levels.begin(), sorted_levels.end());
  for (const auto& [e, lvl] : sorted_levels)
    levels.push_back(json::array({e, lvl}));
  doc["levels"] = std::move(levels);

  json delays = json::array();
  std::vector<std::pair<EdgeId, double>> sorted_delays(
      scenario.extra_delay_s.begin(), scenario.extra_delay_s.end());
  std::sort(sorted_delays.begin(), sorted_delays.end());
  for (const auto& [e, d] : sorted_delays)
    delays.push_back(json::array({e, d}));
  doc["delays"] = std::move(delays);

  out << doc.dump(2) << "\n";
}

void write_surface_csv(std::span<const SurfaceRow> rows, std::ostream& out) {
  out << "node_id,lon,lat,objective\n";
  char buf[128];
  for (const SurfaceRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%u,%.9f,%.9f,%.12g\n", r.node, r.lon,
                  r.lat, r.objective);
    out << buf;
  }
}

}  // namespace meetup
