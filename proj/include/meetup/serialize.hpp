#pragma once

#include <iosfwd>
#include <string>

#include "meetup/meetup.hpp"
#include "meetup/traffic.hpp"

namespace meetup {

/// Query JSON:
///   {"mode": "intermediate"|"final_destination",
///    "metric": "distance"|"time",
///    "objects": [{"id": "...",
///                 "origin": {"node": 7} | {"lonlat": [lon, lat]},
///                 "destination": {...},          // optional
///                 "w_out": 1.0, "w_back": 1.0}]} // optional
/// lon/lat endpoints snap to the nearest node.
MeetupQuery parse_query(const std::string& json_text, const RoadGraph& g);
MeetupQuery load_query(const std::string& path, const RoadGraph& g);

/// Solution JSON written by the solve command.
std::string solution_to_json(const MeetupSolution& sol, const RoadGraph& g,
                             const MeetupQuery& q);

/// Scenario JSON: {"kind": ..., "seed"?: ...,
///                 "levels": [[edge_id, level], ...],
///                 "delays": [[edge_id, seconds], ...]}
TrafficScenario load_scenario(const std::string& path);
void save_scenario(const TrafficScenario& scenario, std::ostream& out);

void write_surface_csv(std::span<const SurfaceRow> rows, std::ostream& out);

}  // namespace meetup
