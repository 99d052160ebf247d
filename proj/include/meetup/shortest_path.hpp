#pragma once

#include <limits>
#include <span>
#include <vector>

#include "meetup/road_graph.hpp"

namespace meetup {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Metric { distance, time };

std::string_view to_string(Metric m);

/// Per-edge cost table (meters or seconds). Strictly positive and finite;
/// a pure function of the edge, so runs over the same view are repeatable.
class WeightView {
 public:
  WeightView(Metric metric, std::vector<double> per_edge);

  Metric metric() const { return metric_; }
  std::size_t size() const { return weights_.size(); }
  double operator()(const Edge& e) const { return weights_[e.id]; }
  double at(EdgeId e) const { return weights_[e]; }
  std::span<const double> raw() const { return weights_; }

  /// weight = length_m for every edge.
  static WeightView distance_weights(const RoadGraph& g);

 private:
  Metric metric_;
  std::vector<double> weights_;
};

enum class Direction { forward, reverse };

/// Dijkstra output. `settled` is the search space: node ids in settlement
/// order. Reverse runs hold distances *to* the source, and `parent[v]` is
/// the first edge on v's path toward the source.
struct SearchResult {
  NodeId source = kNoNode;
  Direction direction = Direction::forward;
  std::vector<double> dist;    // by node id; kInf = unreached
  std::vector<EdgeId> parent;  // by node id; kNoEdge = none
  std::vector<NodeId> settled;

  bool reached(NodeId v) const { return dist[v] < kInf; }
  double dist_at(NodeId v) const { return dist[v]; }
};

/// Binary-heap Dijkstra. Equal keys pop in insertion order. If `stop_set`
/// is nonempty, the run terminates once every reachable member is settled;
/// distances of settled nodes are exact either way.
SearchResult dijkstra(const RoadGraph& g, const WeightView& w, NodeId source,
                      Direction direction = Direction::forward,
                      std::span<const NodeId> stop_set = {});

struct PathResult {
  bool reachable = false;
  double cost = kInf;
  std::vector<Edge> path;
  std::vector<NodeId> settled;
};

/// A* with a great-circle heuristic scaled to stay admissible under the
/// given weight view. Cost matches dijkstra's distance to `target`;
/// unreachable targets come back as `reachable = false`, not an error.
PathResult astar(const RoadGraph& g, const WeightView& w, NodeId source,
                 NodeId target);

/// Edge chain source -> target (or target -> source for reverse results).
/// Throws ValidationError when `target` was not settled.
std::vector<Edge> reconstruct_path(const RoadGraph& g, const SearchResult& r,
                                   NodeId target);

}  // namespace meetup
