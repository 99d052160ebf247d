#include "meetup/planar.hpp"

#include <algorithm>
#include <cmath>

#include "meetup/errors.hpp"

namespace meetup {

double manhattan_objective(std::span<const WeightedPoint> pts, Point2 at) {
  double total = 0.0;
  for (const WeightedPoint& p : pts)
    total += p.w * (std::abs(at.x - p.x) + std::abs(at.y - p.y));
  return total;
}

double euclidean_objective(std::span<const WeightedPoint> pts, Point2 at) {
  double total = 0.0;
  for (const WeightedPoint& p : pts)
    total += p.w * std::hypot(at.x - p.x, at.y - p.y);
  return total;
}

namespace {

// Minimizers of sum w_i |x - x_i| form the closed interval between the
// lower and upper weighted medians.
std::pair<double, double> weighted_median_interval(
    std::vector<std::pair<double, double>>& vw, double total) {
  std::sort(vw.begin(), vw.end());
  const double half = total / 2.0;

  double lo = vw.back().first;
  double acc = 0.0;
  for (const auto& [v, w] : vw) {
    acc += w;
    if (acc >= half) {
      lo = v;
      break;
    }
  }
  double hi = vw.front().first;
  acc = 0.0;
  for (auto it = vw.rbegin(); it != vw.rend(); ++it) {
    acc += it->second;
    if (acc >= half) {
      hi = it->first;
      break;
    }
  }
  return {lo, hi};
}

}  // namespace

OptimalRect manhattan_median(std::span<const WeightedPoint> pts) {
  if (pts.empty()) throw ValidationError("manhattan_median: no points");
  double total = 0.0;
  for (const WeightedPoint& p : pts) {
    if (p.w < 0.0) throw ValidationError("manhattan_median: negative weight");
    total += p.w;
  }
  if (!(total > 0.0))
    throw ValidationError("manhattan_median: zero total weight");

  std::vector<std::pair<double, double>> xs, ys;
  xs.reserve(pts.size());
  ys.reserve(pts.size());
  for (const WeightedPoint& p : pts) {
    xs.emplace_back(p.x, p.w);
    ys.emplace_back(p.y, p.w);
  }

  OptimalRect r;
  std::tie(r.x_lo, r.x_hi) = weighted_median_interval(xs, total);
  std::tie(r.y_lo, r.y_hi) = weighted_median_interval(ys, total);
  r.representative = Point2{(r.x_lo + r.x_hi) / 2.0, (r.y_lo + r.y_hi) / 2.0};
  r.objective = manhattan_objective(pts, r.representative);
  return r;
}

Point2 weiszfeld(std::span<const WeightedPoint> pts, double tol, int max_iter,
                 std::vector<Point2>* trace) {
  if (pts.empty()) throw ValidationError("weiszfeld: no points");
  if (!(tol > 0.0)) throw ValidationError("weiszfeld: tol must be positive");

  if (pts.size() == 1) return Point2{pts[0].x, pts[0].y};
  if (pts.size() == 2) {
    const auto& a = pts[0];
    const auto& b = pts[1];
    if (a.w > b.w) return Point2{a.x, a.y};
    if (b.w > a.w) return Point2{b.x, b.y};
    return Point2{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  }

  double total = 0.0;
  Point2 cur{0.0, 0.0};
  for (const WeightedPoint& p : pts) {
    total += p.w;
    cur.x += p.w * p.x;
    cur.y += p.w * p.y;
  }
  if (!(total > 0.0)) throw ValidationError("weiszfeld: zero total weight");
  cur.x /= total;
  cur.y /= total;
  if (trace) trace->push_back(cur);

  for (int iter = 0; iter < max_iter; ++iter) {
    double sx = 0.0, sy = 0.0, sw = 0.0;
    bool anchored = false;
    Point2 anchor;
    for (const WeightedPoint& p : pts) {
      const double d = std::hypot(cur.x - p.x, cur.y - p.y);
      if (d < tol) {  // anchored on an input point
        anchored = true;
        anchor = Point2{p.x, p.y};
        break;
      }
      const double c = p.w / d;
      sx += c * p.x;
      sy += c * p.y;
      sw += c;
    }
    if (anchored) {
      if (trace) trace->push_back(anchor);
      return anchor;
    }
    const Point2 next{sx / sw, sy / sw};
    const double step = std::hypot(next.x - cur.x, next.y - cur.y);
    cur = next;
    if (trace) trace->push_back(cur);
    if (step < tol) break;
  }

  // Certify against the input points themselves.
  double best = euclidean_objective(pts, cur);
  for (const WeightedPoint& p : pts) {
    const double at_p = euclidean_objective(pts, Point2{p.x, p.y});
    if (at_p < best) {
      best = at_p;
      cur = Point2{p.x, p.y};
    }
  }
  return cur;
}

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

}  // namespace

ConvexHull convex_hull(std::span<const Point2> pts) {
  if (pts.empty()) throw ValidationError("convex_hull: no points");

  std::vector<Point2> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Point2& a, const Point2& b) {
                             return a.x == b.x && a.y == b.y;
                           }),
               sorted.end());

  ConvexHull result;
  if (sorted.size() < 3) {
    result.vertices = std::move(sorted);
    result.degenerate = true;
    return result;
  }

  // Monotone chain with strict turns: collinear boundary points drop out.
  std::vector<Point2>& hull = result.vertices;
  for (const Point2& p : sorted) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= 0.0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // last point equals the first

  result.degenerate = hull.size() < 3;
  return result;
}

DiameterResult hull_diameter(std::span<const Point2> vertices) {
  if (vertices.size() < 2)
    throw ValidationError("hull_diameter: need at least 2 vertices");

  DiameterResult best;
  best.dist = -1.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Point2 p = vertices[i];
      Point2 q = vertices[j];
      if (lex_less(q, p)) std::swap(p, q);
      const double d = std::hypot(p.x - q.x, p.y - q.y);
      const bool tie_better =
          d == best.dist && (lex_less(p, best.p) ||
                             (p.x == best.p.x && p.y == best.p.y &&
                              lex_less(q, best.q)));
      if (d > best.dist || tie_better) {
        best.p = p;
        best.q = q;
        best.dist = d;
      }
    }
  }
  return best;
}

bool point_in_convex_polygon(std::span<const Point2> ccw_vertices, Point2 p) {
  const std::size_t n = ccw_vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = ccw_vertices[i];
    const Point2& b = ccw_vertices[(i + 1) % n];
    if (cross(a, b, p) < 0.0) return false;  // boundary counts as inside
  }
  return true;
}

}  // namespace meetup
