#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meetup/geo.hpp"
#include "meetup/kdtree.hpp"

namespace meetup {

/// OpenStreetMap highway vocabulary used for speed defaults and jam levels.
enum class RoadClass : std::uint8_t {
  motorway,
  motorway_link,
  trunk,
  trunk_link,
  primary,
  primary_link,
  secondary,
  secondary_link,
  tertiary,
  tertiary_link,
  residential,
  living_street,
  service,
  unknown,
};

inline constexpr int kRoadClassCount = 14;

/// Unrecognized names map to RoadClass::unknown.
RoadClass road_class_from_string(std::string_view s);
std::string_view to_string(RoadClass c);

struct Edge {
  EdgeId id = kNoEdge;  // dense, assigned in load order
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  double length_m = 0.0;
  RoadClass road_class = RoadClass::unknown;
  double max_speed_kmh = 0.0;  // 0 = no override, use the class default
  double base_time_s = 0.0;    // 0 = no shipped travel time
};

/// Directed road network with planar coordinates and a spatial index.
/// Immutable after construction; safe to share across concurrent readers.
class RoadGraph {
 public:
  /// Builds adjacency and the spatial index from raw parts. `positions` is
  /// 1-based (slot 0 is ignored); edge ids are reassigned densely in input
  /// order. Throws ValidationError on dangling endpoints or bad lengths.
  static RoadGraph from_parts(std::vector<LonLat> positions,
                              std::vector<Edge> edges);

  std::size_t node_count() const { return positions_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_node(NodeId v) const { return v >= 1 && v < positions_.size(); }
  const LonLat& node_pos(NodeId v) const { return positions_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Edge> out_edges(NodeId v) const;
  std::span<const Edge> in_edges(NodeId v) const;

  Rect extent() const { return extent_; }

  /// Node minimizing great-circle distance to `p`; ties -> lowest id.
  NodeId snap_to_node(const LonLat& p) const;

  /// k nodes in nondecreasing (distance, id) order; requires 1 <= k <= |V|.
  std::vector<NodeId> knn_nodes(const LonLat& p, std::size_t k) const;

  /// Nodes inside the closed box, ascending ids.
  std::vector<NodeId> nodes_in_rect(const Rect& rect) const;

 private:
  RoadGraph() = default;

  std::vector<LonLat> positions_;  // [0] unused
  std::vector<Edge> edges_;        // by id

  // CSR adjacency; in_ is the exact transpose of out_.
  std::vector<std::uint32_t> out_offsets_;
  std::vector<Edge> out_sorted_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<Edge> in_sorted_;

  Rect extent_{};
  KdTree index_;
};

/// Whether the integer arc weight of a DIMACS graph is a distance or a time.
enum class DimacsWeight { length, time };

/// DIMACS challenge shortest-path format: `.gr` arcs plus `.co` coordinates
/// (x = lon * 1e6, y = lat * 1e6). One directed edge per `a` line.
RoadGraph load_dimacs(const std::string& gr_path, const std::string& co_path,
                      DimacsWeight kind = DimacsWeight::length);

/// CSV pair: nodes `node_id,lon,lat` and edges
/// `edge_id,u,v,length_m,road_class,max_speed_kmh,oneway`.
/// oneway=0 rows load as two directed edges.
RoadGraph load_csv(const std::string& nodes_path,
                   const std::string& edges_path);

}  // namespace meetup
