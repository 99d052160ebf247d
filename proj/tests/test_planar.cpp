#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "meetup/errors.hpp"
#include "meetup/planar.hpp"
#include "support/oracles.hpp"

using namespace meetup;
using namespace meetup::testing;

namespace {

std::vector<WeightedPoint> corner_instance() {
  return {{10, 42, 1}, {0, 0, 1}, {45, 33, 1}, {5, 20, 1}};
}

bool contains_point(const OptimalRect& r, double x, double y) {
  return x >= r.x_lo && x <= r.x_hi && y >= r.y_lo && y <= r.y_hi;
}

}  // namespace

TEST_CASE("rectilinear median: four-point instance") {
  const auto pts = corner_instance();
  const OptimalRect r = manhattan_median(pts);

  CHECK(r.x_lo == 5.0);
  CHECK(r.x_hi == 10.0);
  CHECK(r.y_lo == 20.0);
  CHECK(r.y_hi == 33.0);
  CHECK(contains_point(r, 8, 20));
  CHECK(r.objective == doctest::Approx(105.0).epsilon(1e-12));
  CHECK(r.objective == doctest::Approx(grid_min_manhattan(pts)).epsilon(1e-9));

  // Flat across the optimum set, strictly worse outside.
  for (const auto& [cx, cy] : {std::pair{r.x_lo, r.y_lo},
                               std::pair{r.x_lo, r.y_hi},
                               std::pair{r.x_hi, r.y_lo},
                               std::pair{r.x_hi, r.y_hi}})
    CHECK(manhattan_objective(pts, Point2{cx, cy}) ==
          doctest::Approx(r.objective).epsilon(1e-9));
  CHECK(manhattan_objective(pts, Point2{r.x_hi + 1.0, r.representative.y}) >
        r.objective);
  CHECK(manhattan_objective(pts, Point2{r.representative.x, r.y_lo - 1.0}) >
        r.objective);
}

TEST_CASE("rectilinear median: degenerate inputs") {
  CHECK_THROWS_AS(manhattan_median({}), ValidationError);
  CHECK_THROWS_AS(manhattan_median(std::vector<WeightedPoint>{{1, 2, 0}}),
                  ValidationError);

  const OptimalRect single =
      manhattan_median(std::vector<WeightedPoint>{{3, 4, 1}});
  CHECK(single.x_lo == 3.0);
  CHECK(single.x_hi == 3.0);
  CHECK(single.y_lo == 4.0);
  CHECK(single.y_hi == 4.0);
  CHECK(single.objective == 0.0);

  const OptimalRect pair = manhattan_median(
      std::vector<WeightedPoint>{{0, 0, 1}, {2, 2, 1}});
  CHECK(pair.x_lo == 0.0);
  CHECK(pair.x_hi == 2.0);
  CHECK(pair.y_lo == 0.0);
  CHECK(pair.y_hi == 2.0);
  CHECK(pair.objective == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("rectilinear median vs grid oracle on random weighted instances") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<WeightedPoint> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(WeightedPoint{static_cast<double>(rng() % 60),
                                  static_cast<double>(rng() % 60),
                                  static_cast<double>(1 + rng() % 5)});
    const OptimalRect r = manhattan_median(pts);
    const double oracle = grid_min_manhattan(pts);
    REQUIRE(r.objective ==
            doctest::Approx(oracle).epsilon(1e-9).scale(std::max(1.0, oracle)));
  }
}

TEST_CASE("rectilinear median scaling covariance") {
  const auto pts = corner_instance();
  const OptimalRect base = manhattan_median(pts);
  const double c = 3.5;
  std::vector<WeightedPoint> scaled;
  for (const auto& p : pts) scaled.push_back({p.x * c, p.y * c, p.w});
  const OptimalRect s = manhattan_median(scaled);
  CHECK(s.objective == doctest::Approx(base.objective * c).epsilon(1e-12));
  CHECK(s.x_lo == doctest::Approx(base.x_lo * c).epsilon(1e-12));
  CHECK(s.x_hi == doctest::Approx(base.x_hi * c).epsilon(1e-12));
  CHECK(s.y_lo == doctest::Approx(base.y_lo * c).epsilon(1e-12));
  CHECK(s.y_hi == doctest::Approx(base.y_hi * c).epsilon(1e-12));
}

TEST_CASE("geometric median: symmetric cases") {
  const std::vector<WeightedPoint> corners = {
      {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  const Point2 center = weiszfeld(corners);
  CHECK(center.x == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(center.y == doctest::Approx(0.5).epsilon(1e-6));

  const std::vector<WeightedPoint> tri = {
      {0, 0, 1}, {1, 0, 1}, {0.5, std::sqrt(3.0) / 2.0, 1}};
  const Point2 fermat = weiszfeld(tri);
  CHECK(fermat.x == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fermat.y == doctest::Approx(std::sqrt(3.0) / 6.0).epsilon(1e-6));
}

TEST_CASE("geometric median: degenerate rules") {
  CHECK_THROWS_AS(weiszfeld({}), ValidationError);

  const Point2 one = weiszfeld(std::vector<WeightedPoint>{{3, -2, 5}});
  CHECK(one.x == 3.0);
  CHECK(one.y == -2.0);

  const Point2 mid =
      weiszfeld(std::vector<WeightedPoint>{{0, 0, 1}, {4, 0, 1}});
  CHECK(mid.x == 2.0);
  CHECK(mid.y == 0.0);

  const Point2 heavy =
      weiszfeld(std::vector<WeightedPoint>{{0, 0, 3}, {4, 0, 1}});
  CHECK(heavy.x == 0.0);
  CHECK(heavy.y == 0.0);
}

TEST_CASE("geometric median: weighted majority anchors the iteration") {
  const std::vector<WeightedPoint> pts = {
      {0, 0, 10}, {1, 0, 1}, {0.2, 0.9, 1}};
  const Point2 m = weiszfeld(pts);

  // Scan certificate: nothing along the segment toward the light point
  // beats the returned location.
  const double at_m = euclidean_objective(pts, m);
  for (double t = 0.0; t <= 1.0; t += 1e-3) {
    const Point2 probe{t, 0.0};
    CHECK(at_m <= euclidean_objective(pts, probe) + 1e-6);
  }
  CHECK(std::hypot(m.x, m.y) < 1e-6);  // pulled onto the heavy anchor
}

TEST_CASE("geometric median: objective is monotone along the trace") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<WeightedPoint> pts;
    const int n = 3 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i)
      pts.push_back(WeightedPoint{static_cast<double>(rng() % 100) / 10.0,
                                  static_cast<double>(rng() % 100) / 10.0,
                                  static_cast<double>(1 + rng() % 3)});
    std::vector<Point2> trace;
    (void)weiszfeld(pts, 1e-9, 1000, &trace);
    double total_w = 0.0;
    for (const auto& p : pts) total_w += p.w;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      CHECK(euclidean_objective(pts, trace[i]) <=
            euclidean_objective(pts, trace[i - 1]) + 1e-9 * total_w);
    }
  }
}

TEST_CASE("geometric median certificate: never worse than any input point") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<WeightedPoint> pts;
    const int n = 1 + static_cast<int>(rng() % 8);
    double total_w = 0.0;
    for (int i = 0; i < n; ++i) {
      pts.push_back(WeightedPoint{static_cast<double>(rng() % 1000) / 100.0,
                                  static_cast<double>(rng() % 1000) / 100.0,
                                  static_cast<double>(1 + rng() % 4)});
      total_w += pts.back().w;
    }
    const double tol = 1e-9;
    const Point2 m = weiszfeld(pts, tol);
    const double at_m = euclidean_objective(pts, m);
    for (const auto& p : pts)
      CHECK(at_m <=
            euclidean_objective(pts, Point2{p.x, p.y}) + tol * total_w);
  }
}

TEST_CASE("convex hull: square plus center") {
  const std::vector<Point2> pts = {
      {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const ConvexHull h = convex_hull(pts);
  REQUIRE_FALSE(h.degenerate);
  REQUIRE(h.vertices.size() == 4);
  for (const Point2& v : h.vertices)
    CHECK((v.x == 0.0 || v.x == 1.0));

  // Counterclockwise: every consecutive triple turns left.
  const auto& hv = h.vertices;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const Point2& a = hv[i];
    const Point2& b = hv[(i + 1) % hv.size()];
    const Point2& c = hv[(i + 2) % hv.size()];
    CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0.0);
  }
}

TEST_CASE("convex hull: collinear and tiny inputs degenerate") {
  const ConvexHull line =
      convex_hull(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(line.degenerate);
  CHECK(line.vertices.size() == 2);

  const ConvexHull dup =
      convex_hull(std::vector<Point2>{{3, 3}, {3, 3}, {3, 3}});
  CHECK(dup.degenerate);
  CHECK(dup.vertices.size() == 1);
}

TEST_CASE("convex hull matches the extreme-point oracle on random sets") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point2> pts;
    for (int i = 0; i < 20; ++i)
      pts.push_back(Point2{static_cast<double>(rng() % 100) / 7.0,
                           static_cast<double>(rng() % 100) / 7.0});
    const ConvexHull h = convex_hull(pts);
    if (h.degenerate) continue;

    auto oracle = extreme_points_oracle(pts);
    auto mine = h.vertices;
    const auto lex = [](const Point2& a, const Point2& b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    };
    std::sort(oracle.begin(), oracle.end(), lex);
    std::sort(mine.begin(), mine.end(), lex);
    REQUIRE(mine.size() == oracle.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      CHECK(mine[i].x == oracle[i].x);
      CHECK(mine[i].y == oracle[i].y);
    }

    // Idempotence: hulling the hull changes nothing.
    const ConvexHull again = convex_hull(h.vertices);
    CHECK(again.vertices.size() == h.vertices.size());
  }
}

TEST_CASE("hull diameter: squares, pairs, oracle") {
  const std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const DiameterResult d = hull_diameter(square);
  CHECK(d.dist == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // Two diagonals tie; the lexicographically smallest pair starts at (0,0).
  CHECK(d.p.x == 0.0);
  CHECK(d.p.y == 0.0);
  CHECK(d.q.x == 1.0);
  CHECK(d.q.y == 1.0);

  const DiameterResult two =
      hull_diameter(std::vector<Point2>{{5, 5}, {1, 2}});
  CHECK(two.p.x == 1.0);
  CHECK(two.q.x == 5.0);

  CHECK_THROWS_AS(hull_diameter(std::vector<Point2>{{0, 0}}),
                  ValidationError);

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point2> pts;
    for (int i = 0; i < 20; ++i)
      pts.push_back(Point2{static_cast<double>(rng() % 1000) / 13.0,
                           static_cast<double>(rng() % 1000) / 13.0});
    const ConvexHull h = convex_hull(pts);
    const auto verts = h.degenerate ? pts : h.vertices;
    const DiameterResult dd = hull_diameter(verts);
    CHECK(dd.dist == doctest::Approx(max_pairwise_distance(pts)).epsilon(1e-12));

    if (!h.degenerate) {
      // Diameter endpoints are hull vertices.
      const auto on_hull = [&](const Point2& p) {
        return std::any_of(h.vertices.begin(), h.vertices.end(),
                           [&](const Point2& v) {
                             return v.x == p.x && v.y == p.y;
                           });
      };
      CHECK(on_hull(dd.p));
      CHECK(on_hull(dd.q));
    }
  }
}

TEST_CASE("point-in-polygon counts the boundary as inside") {
  const std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(point_in_convex_polygon(square, Point2{0.5, 0.5}));
  CHECK(point_in_convex_polygon(square, Point2{0.0, 0.5}));
  CHECK(point_in_convex_polygon(square, Point2{1.0, 1.0}));
  CHECK_FALSE(point_in_convex_polygon(square, Point2{1.0001, 0.5}));
  CHECK_FALSE(point_in_convex_polygon(square, Point2{-0.0001, 0.5}));
}
