#include "meetup/traffic.hpp"

#include <cstdio>
#include <random>

#include "meetup/errors.hpp"

namespace meetup {

TrafficLevel traffic_level_from_int(int level) {
  if (level < 1 || level > 4)
    throw ValidationError("traffic level must be 1..4, got " +
                          std::to_string(level));
  return static_cast<TrafficLevel>(level);
}

std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::none: return "none";
    case ScenarioKind::hierarchical: return "hierarchical";
    case ScenarioKind::random: return "random";
    case ScenarioKind::manual: return "manual";
  }
  return "none";
}

double max_speed_for_class(RoadClass c, double unknown_kmh) {
  switch (c) {
    case RoadClass::motorway: return 80.0;
    case RoadClass::motorway_link: return 45.0;
    case RoadClass::trunk: return 80.0;
    case RoadClass::trunk_link: return 40.0;
    case RoadClass::primary: return 65.0;
    case RoadClass::primary_link: return 30.0;
    case RoadClass::secondary: return 55.0;
    case RoadClass::secondary_link: return 25.0;
    case RoadClass::tertiary: return 40.0;
    case RoadClass::tertiary_link: return 20.0;
    case RoadClass::residential: return 25.0;
    case RoadClass::living_street: return 10.0;
    case RoadClass::service: return 15.0;
    case RoadClass::unknown: return unknown_kmh;
  }
  return unknown_kmh;
}

double multiplier_for_level(TrafficLevel level) {
  switch (level) {
    case TrafficLevel::jam: return 0.25;
    case TrafficLevel::slow: return 0.50;
    case TrafficLevel::moderate: return 0.75;
    case TrafficLevel::free_flow: return 1.00;
  }
  return 1.00;
}

SpeedIndexBand band_for_level(TrafficLevel level) {
  switch (level) {
    case TrafficLevel::jam: return SpeedIndexBand{0.00, 0.25, true};
    case TrafficLevel::slow: return SpeedIndexBand{0.25, 0.50, false};
    case TrafficLevel::moderate: return SpeedIndexBand{0.50, 0.75, false};
    case TrafficLevel::free_flow: return SpeedIndexBand{0.75, 1.00, false};
  }
  return SpeedIndexBand{};
}

namespace {

double free_flow_time_s(const Edge& e, double unknown_kmh) {
  if (e.base_time_s > 0.0) return e.base_time_s;
  const double speed_kmh = e.max_speed_kmh > 0.0
                               ? e.max_speed_kmh
                               : max_speed_for_class(e.road_class, unknown_kmh);
  return e.length_m / (speed_kmh / 3.6);
}

bool is_highway_family(RoadClass c) {
  switch (c) {
    case RoadClass::motorway:
    case RoadClass::motorway_link:
    case RoadClass::trunk:
    case RoadClass::trunk_link:
    case RoadClass::primary:
    case RoadClass::primary_link:
    case RoadClass::secondary:
    case RoadClass::secondary_link:
      return true;
    default:
      return false;
  }
}

void check_edges_exist(const RoadGraph& g, const TrafficScenario& s) {
  for (const auto& [e, lvl] : s.levels)
    if (e >= g.edge_count())
      throw ValidationError("scenario level references unknown edge " +
                            std::to_string(e));
  for (const auto& [e, d] : s.extra_delay_s) {
    if (e >= g.edge_count())
      throw ValidationError("scenario delay references unknown edge " +
                            std::to_string(e));
    if (!(d >= 0.0))
      throw ValidationError("scenario delay on edge " + std::to_string(e) +
                            " is negative");
  }
}

}  // namespace

WeightView base_time_weights(const RoadGraph& g, double unknown_kmh) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const Edge& e : g.edges()) w.push_back(free_flow_time_s(e, unknown_kmh));
  return WeightView(Metric::time, std::move(w));
}

WeightView time_weights(const RoadGraph& g, const TrafficScenario& scenario,
                        double unknown_kmh) {
  check_edges_exist(g, scenario);
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const auto it = scenario.levels.find(e.id);
    const TrafficLevel level =
        it == scenario.levels.end() ? TrafficLevel::free_flow : it->second;
    double t = free_flow_time_s(e, unknown_kmh) / multiplier_for_level(level);
    const auto dit = scenario.extra_delay_s.find(e.id);
    if (dit != scenario.extra_delay_s.end()) t += dit->second;
    w.push_back(t);
  }
  return WeightView(Metric::time, std::move(w));
}

TrafficScenario hierarchical_scenario(const RoadGraph& g) {
  TrafficScenario s;
  s.kind = ScenarioKind::hierarchical;
  for (const Edge& e : g.edges()) {
    TrafficLevel level = TrafficLevel::free_flow;
    switch (e.road_class) {
      case RoadClass::motorway:
      case RoadClass::motorway_link:
        level = TrafficLevel::jam;
        break;
      case RoadClass::trunk:
      case RoadClass::trunk_link:
      case RoadClass::primary:
      case RoadClass::primary_link:
        level = TrafficLevel::slow;
        break;
      case RoadClass::secondary:
      case RoadClass::secondary_link:
        level = TrafficLevel::moderate;
        break;
      default:
        break;
    }
    if (level != TrafficLevel::free_flow) s.levels.emplace(e.id, level);
  }
  if (s.levels.empty() && g.edge_count() > 0)
    std::fprintf(stderr,
                 "warning: no classed highway edges; hierarchical scenario "
                 "is all free-flow\n");
  return s;
}

TrafficScenario random_scenario(const RoadGraph& g, std::uint64_t seed) {
  TrafficScenario s;
  s.kind = ScenarioKind::random;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  // rng() & 3 is exactly uniform over {0..3} (the generator's period covers
  // all residues equally), and unlike the distribution adaptors it draws
  // the same levels on every platform.
  for (const Edge& e : g.edges()) {
    if (!is_highway_family(e.road_class)) continue;
    const auto level = static_cast<TrafficLevel>(1 + (rng() & 3));
    s.levels.emplace(e.id, level);
  }
  return s;
}

TrafficScenario inject_delay(const RoadGraph& g, TrafficScenario scenario,
                             std::span<const EdgeId> edges, double delay_s) {
  if (!(delay_s >= 0.0))
    throw ValidationError("injected delay must be nonnegative");
  for (EdgeId e : edges) {
    if (e >= g.edge_count())
      throw ValidationError("inject_delay: unknown edge " + std::to_string(e));
    scenario.extra_delay_s[e] += delay_s;
  }
  if (scenario.kind == ScenarioKind::none && delay_s > 0.0 && !edges.empty())
    scenario.kind = ScenarioKind::manual;
  return scenario;
}

}  // namespace meetup
