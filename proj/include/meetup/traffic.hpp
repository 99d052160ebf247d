#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>

#include "meetup/shortest_path.hpp"

namespace meetup {

/// Discrete congestion class: 1 = jam ... 4 = free flow.
enum class TrafficLevel : int { jam = 1, slow = 2, moderate = 3, free_flow = 4 };

TrafficLevel traffic_level_from_int(int level);  // throws ValidationError

inline constexpr double kDefaultUnknownSpeedKmh = 40.0;

enum class ScenarioKind { none, hierarchical, random, manual };

std::string_view to_string(ScenarioKind k);

/// Per-edge jam levels plus additive delays; edges absent from `levels`
/// run at free flow. Immutable value type.
struct TrafficScenario {
  ScenarioKind kind = ScenarioKind::none;
  std::optional<std::uint64_t> seed;
  std::unordered_map<EdgeId, TrafficLevel> levels;
  std::unordered_map<EdgeId, double> extra_delay_s;
};

/// Default maximum speed per road class; unknown maps to `unknown_kmh`.
double max_speed_for_class(RoadClass c,
                           double unknown_kmh = kDefaultUnknownSpeedKmh);

/// Fraction of the maximum speed still attainable at a jam level:
/// 1 -> 0.25, 2 -> 0.50, 3 -> 0.75, 4 -> 1.00.
double multiplier_for_level(TrafficLevel level);

/// Speed-performance-index band a level's multiplier must lie in.
struct SpeedIndexBand {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_closed = false;  // only level 1's band includes its lower bound

  bool contains(double v) const {
    return (lo_closed ? v >= lo : v > lo) && v <= hi;
  }
};

SpeedIndexBand band_for_level(TrafficLevel level);

/// Free-flow travel times: shipped base_time_s where present, otherwise
/// length / max_speed. No multiplier arithmetic involved.
WeightView base_time_weights(const RoadGraph& g,
                             double unknown_kmh = kDefaultUnknownSpeedKmh);

/// Traffic-adjusted travel times:
///   weight(e) = free_flow_time(e) / multiplier(level(e)) + extra_delay(e).
/// Scenario entries must reference existing edges.
WeightView time_weights(const RoadGraph& g, const TrafficScenario& scenario,
                        double unknown_kmh = kDefaultUnknownSpeedKmh);

/// Deterministic class -> level mapping: motorway 1, trunk/primary 2,
/// secondary 3, everything else 4; link classes follow their parent.
TrafficScenario hierarchical_scenario(const RoadGraph& g);

/// Seeded uniform level draw over the highway families (motorway, trunk,
/// primary, secondary and their links); local roads stay at free flow.
/// Same seed, same scenario.
TrafficScenario random_scenario(const RoadGraph& g, std::uint64_t seed);

/// Returns a copy with `delay_s` added to each listed edge.
TrafficScenario inject_delay(const RoadGraph& g, TrafficScenario scenario,
                             std::span<const EdgeId> edges, double delay_s);

}  // namespace meetup
