#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "meetup/geo.hpp"

namespace meetup {

/// Static 2-d tree over lon/lat points, metric = great-circle meters.
///
/// Ordering contract shared with the brute-force scans it replaces:
/// neighbors come back in nondecreasing (distance, id) order, so equal
/// distances resolve to the lowest id.
class KdTree {
 public:
  KdTree() = default;
  explicit KdTree(std::vector<std::pair<NodeId, LonLat>> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// k nearest points to q; requires 1 <= k <= size().
  std::vector<NodeId> nearest(const LonLat& q, std::size_t k) const;

  /// Ids inside the closed box, ascending.
  std::vector<NodeId> in_rect(const Rect& rect) const;

 private:
  struct Item {
    NodeId id;
    LonLat pos;
  };

  struct KnnState;

  void build(std::size_t lo, std::size_t hi, int axis);
  void search(std::size_t lo, std::size_t hi, int axis, KnnState& state) const;
  void collect(std::size_t lo, std::size_t hi, int axis, const Rect& rect,
               std::vector<NodeId>& out) const;

  // Implicit balanced tree: the median of items_[lo, hi) is the subtree root.
  std::vector<Item> items_;
};

}  // namespace meetup
