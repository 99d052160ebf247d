#include "meetup/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "meetup/errors.hpp"

namespace meetup {

std::string_view to_string(Metric m) {
  return m == Metric::distance ? "distance" : "time";
}

WeightView::WeightView(Metric metric, std::vector<double> per_edge)
    : metric_(metric), weights_(std::move(per_edge)) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      throw ValidationError("edge " + std::to_string(i) +
                            " has a non-positive or non-finite weight");
}

WeightView WeightView::distance_weights(const RoadGraph& g) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const Edge& e : g.edges()) w.push_back(e.length_m);
  return WeightView(Metric::distance, std::move(w));
}

namespace {

// (key, insertion order, node): equal keys pop in insertion order.
using HeapEntry = std::tuple<double, std::uint64_t, NodeId>;
using MinHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

}  // namespace

SearchResult dijkstra(const RoadGraph& g, const WeightView& w, NodeId source,
                      Direction direction, std::span<const NodeId> stop_set) {
  if (!g.has_node(source))
    throw ValidationError("dijkstra source " + std::to_string(source) +
                          " not in graph");

  const std::size_t n = g.node_count();
  SearchResult r;
  r.source = source;
  r.direction = direction;
  r.dist.assign(n + 1, kInf);
  r.parent.assign(n + 1, kNoEdge);

  std::vector<bool> settled_mark(n + 1, false);
  std::vector<bool> is_stop(stop_set.empty() ? 0 : n + 1, false);
  std::size_t stops_left = 0;
  for (NodeId v : stop_set) {
    if (!g.has_node(v))
      throw ValidationError("stop-set node " + std::to_string(v) +
                            " not in graph");
    if (!is_stop[v]) {
      is_stop[v] = true;
      ++stops_left;
    }
  }

  MinHeap heap;
  std::uint64_t order = 0;
  r.dist[source] = 0.0;
  heap.emplace(0.0, order++, source);

  while (!heap.empty()) {
    const auto [d, ord, u] = heap.top();
    heap.pop();
    if (settled_mark[u] || d > r.dist[u]) continue;
    settled_mark[u] = true;
    r.settled.push_back(u);
    if (!is_stop.empty() && is_stop[u] && --stops_left == 0) break;

    const auto edges =
        direction == Direction::forward ? g.out_edges(u) : g.in_edges(u);
    for (const Edge& e : edges) {
      const NodeId v = direction == Direction::forward ? e.to : e.from;
      const double nd = d + w(e);
      if (nd < r.dist[v]) {
        r.dist[v] = nd;
        r.parent[v] = e.id;
        heap.emplace(nd, order++, v);
      }
    }
  }
  return r;
}

std::vector<Edge> reconstruct_path(const RoadGraph& g, const SearchResult& r,
                                   NodeId target) {
  if (!g.has_node(target) || !r.reached(target))
    throw ValidationError("no path to node " + std::to_string(target));

  std::vector<Edge> path;
  NodeId at = target;
  while (at != r.source) {
    const Edge& e = g.edge(r.parent[at]);
    path.push_back(e);
    at = r.direction == Direction::forward ? e.from : e.to;
  }
  if (r.direction == Direction::forward)
    std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Largest c such that c * great_circle(u, v) underestimates every edge
// weight (and, by the triangle inequality, every path cost). Keeps the
// A* heuristic admissible and consistent for both metrics, including
// traffic-degraded time views.
double heuristic_scale(const RoadGraph& g, const WeightView& w) {
  double scale = kInf;
  for (const Edge& e : g.edges()) {
    const double gc = haversine_m(g.node_pos(e.from), g.node_pos(e.to));
    if (gc > 0.0) scale = std::min(scale, w(e) / gc);
  }
  return std::isfinite(scale) ? scale : 0.0;
}

}  // namespace

PathResult astar(const RoadGraph& g, const WeightView& w, NodeId source,
                 NodeId target) {
  if (!g.has_node(source) || !g.has_node(target))
    throw ValidationError("astar endpoints must be graph nodes");

  const std::size_t n = g.node_count();
  const double scale = heuristic_scale(g, w);
  const LonLat target_pos = g.node_pos(target);
  const auto h = [&](NodeId v) {
    return scale * haversine_m(g.node_pos(v), target_pos);
  };

  std::vector<double> dist(n + 1, kInf);
  std::vector<EdgeId> parent(n + 1, kNoEdge);
  std::vector<bool> settled_mark(n + 1, false);

  PathResult out;
  MinHeap heap;
  std::uint64_t order = 0;
  dist[source] = 0.0;
  heap.emplace(h(source), order++, source);

  while (!heap.empty()) {
    const auto [f, ord, u] = heap.top();
    heap.pop();
    if (settled_mark[u]) continue;
    settled_mark[u] = true;
    out.settled.push_back(u);
    if (u == target) break;

    for (const Edge& e : g.out_edges(u)) {
      const double nd = dist[u] + w(e);
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        parent[e.to] = e.id;
        heap.emplace(nd + h(e.to), order++, e.to);
      }
    }
  }

  if (!settled_mark[target]) return out;  // unreachable, not an error
  out.reachable = true;
  out.cost = dist[target];
  NodeId at = target;
  while (at != source) {
    const Edge& e = g.edge(parent[at]);
    out.path.push_back(e);
    at = e.from;
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

}  // namespace meetup
