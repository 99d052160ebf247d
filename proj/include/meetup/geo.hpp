#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace meetup {

/// Node identifiers are 1-based and dense after loading; 0 means "no node".
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0;

using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

inline constexpr double kEarthRadiusM = 6371008.8;

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
};

/// Great-circle distance in meters.
double haversine_m(const LonLat& a, const LonLat& b);

/// Closed axis-aligned box in lon/lat degrees.
struct Rect {
  double min_lon = 0.0;
  double min_lat = 0.0;
  double max_lon = 0.0;
  double max_lat = 0.0;

  bool valid() const { return min_lon <= max_lon && min_lat <= max_lat; }
  bool contains(const LonLat& p) const {
    return p.lon >= min_lon && p.lon <= max_lon && p.lat >= min_lat &&
           p.lat <= max_lat;
  }

  static Rect bounding(std::span<const LonLat> points);
};

}  // namespace meetup
