#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "meetup/shortest_path.hpp"

namespace meetup {

/// Precomputed all-pairs cost matrix. An optional accelerator for candidate
/// evaluation: lookups replace on-the-fly Dijkstra runs with identical
/// values. Refuses graphs above 20,000 nodes.
class DistanceMatrix {
 public:
  static constexpr std::size_t kMaxNodes = 20000;

  static DistanceMatrix build(const RoadGraph& g, const WeightView& w);
  static DistanceMatrix load(const std::string& path);
  void save(const std::string& path) const;

  std::size_t node_count() const { return n_; }
  Metric metric() const { return metric_; }

  double at(NodeId from, NodeId to) const {
    return data_[static_cast<std::size_t>(from - 1) * n_ + (to - 1)];
  }

  /// True when the matrix plausibly belongs to (g, w): node count matches
  /// and the weight checksum agrees.
  bool matches(const RoadGraph& g, const WeightView& w) const;

 private:
  DistanceMatrix() = default;

  std::size_t n_ = 0;
  Metric metric_ = Metric::distance;
  double weight_checksum_ = 0.0;
  std::vector<double> data_;  // row-major, kInf = unreachable
};

}  // namespace meetup
