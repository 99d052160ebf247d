#include "meetup/geo.hpp"

#include <algorithm>
#include <cmath>

namespace meetup {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

double haversine_m(const LonLat& a, const LonLat& b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;
  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlam / 2.0);
  const double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

Rect Rect::bounding(std::span<const LonLat> points) {
  Rect r{points.front().lon, points.front().lat, points.front().lon,
         points.front().lat};
  for (const LonLat& p : points) {
    r.min_lon = std::min(r.min_lon, p.lon);
    r.max_lon = std::max(r.max_lon, p.lon);
    r.min_lat = std::min(r.min_lat, p.lat);
    r.max_lat = std::max(r.max_lat, p.lat);
  }
  return r;
}

}  // namespace meetup
