#include "meetup/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace meetup {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

// Lower bound on the great-circle distance from q to anything at or beyond
// the given latitude: the central angle between two points is at least the
// latitude difference.
double lat_plane_bound(double q_lat, double split_lat) {
  return kEarthRadiusM * std::abs(q_lat - split_lat) * kDegToRad;
}

// Lower bound on the great-circle distance from q to the meridian at
// split_lon (cross-track distance); capped at a quarter turn.
double lon_plane_bound(const LonLat& q, double split_lon) {
  const double dlam =
      std::min(std::abs(q.lon - split_lon) * kDegToRad, 3.14159265358979323846 / 2.0);
  const double s = std::cos(q.lat * kDegToRad) * std::sin(dlam);
  return kEarthRadiusM * std::asin(std::clamp(s, 0.0, 1.0));
}

}  // namespace

struct KdTree::KnnState {
  const LonLat* query;
  std::size_t k;
  // Worst kept candidate on top; (distance, id) lexicographic.
  std::priority_queue<std::pair<double, NodeId>> heap;

  void offer(double dist, NodeId id) {
    if (heap.size() < k) {
      heap.emplace(dist, id);
    } else if (std::pair<double, NodeId>{dist, id} < heap.top()) {
      heap.pop();
      heap.emplace(dist, id);
    }
  }

  double worst() const {
    return heap.size() < k ? std::numeric_limits<double>::infinity()
                           : heap.top().first;
  }
};

KdTree::KdTree(std::vector<std::pair<NodeId, LonLat>> items) {
  items_.reserve(items.size());
  for (const auto& [id, pos] : items) items_.push_back(Item{id, pos});
  if (!items_.empty()) build(0, items_.size(), 0);
}

void KdTree::build(std::size_t lo, std::size_t hi, int axis) {
  if (hi - lo <= 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  auto key = [axis](const Item& it) {
    return axis == 0 ? it.pos.lon : it.pos.lat;
  };
  std::nth_element(items_.begin() + lo, items_.begin() + mid,
                   items_.begin() + hi, [&](const Item& a, const Item& b) {
                     return key(a) < key(b) || (key(a) == key(b) && a.id < b.id);
                   });
  build(lo, mid, 1 - axis);
  build(mid + 1, hi, 1 - axis);
}

std::vector<NodeId> KdTree::nearest(const LonLat& q, std::size_t k) const {
  KnnState state{&q, k, {}};
  if (!items_.empty()) search(0, items_.size(), 0, state);

  std::vector<std::pair<double, NodeId>> kept;
  kept.reserve(state.heap.size());
  while (!state.heap.empty()) {
    kept.push_back(state.heap.top());
    state.heap.pop();
  }
  std::sort(kept.begin(), kept.end());
  std::vector<NodeId> out;
  out.reserve(kept.size());
  for (const auto& [dist, id] : kept) out.push_back(id);
  return out;
}

void KdTree::search(std::size_t lo, std::size_t hi, int axis,
                    KnnState& state) const {
  if (lo >= hi) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  const Item& node = items_[mid];
  state.offer(haversine_m(*state.query, node.pos), node.id);

  const double split = axis == 0 ? node.pos.lon : node.pos.lat;
  const double qval = axis == 0 ? state.query->lon : state.query->lat;
  const bool left_first = qval < split;

  const auto visit_near = [&] {
    left_first ? search(lo, mid, 1 - axis, state)
               : search(mid + 1, hi, 1 - axis, state);
  };
  const auto visit_far = [&] {
    left_first ? search(mid + 1, hi, 1 - axis, state)
               : search(lo, mid, 1 - axis, state);
  };

  visit_near();
  const double bound = axis == 0 ? lon_plane_bound(*state.query, split)
                                 : lat_plane_bound(state.query->lat, split);
  if (bound <= state.worst()) visit_far();
}

std::vector<NodeId> KdTree::in_rect(const Rect& rect) const {
  std::vector<NodeId> out;
  if (!items_.empty()) collect(0, items_.size(), 0, rect, out);
  std::sort(out.begin(), out.end());
  return out;
}

void KdTree::collect(std::size_t lo, std::size_t hi, int axis,
                     const Rect& rect, std::vector<NodeId>& out) const {
  if (lo >= hi) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  const Item& node = items_[mid];
  if (rect.contains(node.pos)) out.push_back(node.id);

  const double split = axis == 0 ? node.pos.lon : node.pos.lat;
  const double lo_bound = axis == 0 ? rect.min_lon : rect.min_lat;
  const double hi_bound = axis == 0 ? rect.max_lon : rect.max_lat;
  if (lo_bound <= split) collect(lo, mid, 1 - axis, rect, out);
  if (hi_bound >= split) collect(mid + 1, hi, 1 - axis, rect, out);
}

}  // namespace meetup
