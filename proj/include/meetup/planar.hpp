#pragma once

#include <span>
#include <vector>

namespace meetup {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct WeightedPoint {
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;
};

/// The full optimum set of the weighted rectilinear 1-median problem is a
/// rectangle (the product of the weighted-median intervals per axis); every
/// corner and the midpoint share the same objective.
struct OptimalRect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  Point2 representative;  // rect midpoint
  double objective = 0.0;
};

double manhattan_objective(std::span<const WeightedPoint> pts, Point2 at);
double euclidean_objective(std::span<const WeightedPoint> pts, Point2 at);

/// Weighted rectilinear 1-median, solved per axis by the weighted median.
/// Throws ValidationError on empty input or zero total weight.
OptimalRect manhattan_median(std::span<const WeightedPoint> pts);

/// Weighted geometric median by fixed-point iteration. Stops when the step
/// drops below tol or after max_iter rounds. n=1 returns the point; n=2
/// returns the heavier endpoint (midpoint on equal weights); an iterate
/// landing within tol of an input point returns that point. `trace`, when
/// given, records every iterate.
Point2 weiszfeld(std::span<const WeightedPoint> pts, double tol = 1e-9,
                 int max_iter = 1000, std::vector<Point2>* trace = nullptr);

/// Monotone-chain hull. `degenerate` is set when fewer than 3 distinct
/// non-collinear points remain; `vertices` then holds the distinct extreme
/// chain (possibly fewer than 3 points).
struct ConvexHull {
  std::vector<Point2> vertices;  // counterclockwise, no collinear vertices
  bool degenerate = false;
};

ConvexHull convex_hull(std::span<const Point2> pts);

struct DiameterResult {
  Point2 p;
  Point2 q;
  double dist = 0.0;
};

/// Farthest pair over a vertex list (O(n^2) scan); ties resolve to the
/// lexicographically smallest pair. Requires >= 2 vertices.
DiameterResult hull_diameter(std::span<const Point2> vertices);

/// Point-in-convex-polygon with the boundary counting as inside.
bool point_in_convex_polygon(std::span<const Point2> ccw_vertices, Point2 p);

}  // namespace meetup
