#include "meetup/meetup.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

#include "meetup/errors.hpp"
#include "meetup/planar.hpp"

namespace meetup {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<NodeId> canonical(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

CandidateSet make_candidates(std::vector<NodeId> nodes, Strategy strategy,
                             bool fell_back = false) {
  return CandidateSet{canonical(std::move(nodes)), strategy, fell_back};
}

std::vector<NodeId> all_nodes(const RoadGraph& g) {
  std::vector<NodeId> nodes(g.node_count());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    nodes[i] = static_cast<NodeId>(i + 1);
  return nodes;
}

// Origin/destination coordinates of every object, in object order.
std::vector<Point2> endpoint_points(const RoadGraph& g, const MeetupQuery& q) {
  std::vector<Point2> pts;
  for (const MovingObject& obj : q.objects) {
    const LonLat o = g.node_pos(obj.origin);
    pts.push_back(Point2{o.lon, o.lat});
    if (obj.destination) {
      const LonLat d = g.node_pos(*obj.destination);
      pts.push_back(Point2{d.lon, d.lat});
    }
  }
  return pts;
}

std::vector<LonLat> endpoint_lonlats(const RoadGraph& g,
                                     const MeetupQuery& q) {
  std::vector<LonLat> pts;
  for (const MovingObject& obj : q.objects) {
    pts.push_back(g.node_pos(obj.origin));
    if (obj.destination) pts.push_back(g.node_pos(*obj.destination));
  }
  return pts;
}

LonLat euclidean_seed(const RoadGraph& g, const MeetupQuery& q) {
  std::vector<WeightedPoint> pts;
  for (const Point2& p : endpoint_points(g, q))
    pts.push_back(WeightedPoint{p.x, p.y, 1.0});
  const Point2 m = weiszfeld(pts);
  return LonLat{m.x, m.y};
}

CandidateSet rect_candidates(const RoadGraph& g, const MeetupQuery& q,
                             Strategy tag, bool fell_back) {
  const auto pts = endpoint_lonlats(g, q);
  const Rect box = Rect::bounding(pts);
  return make_candidates(g.nodes_in_rect(box), tag, fell_back);
}

}  // namespace

std::string_view to_string(MeetupMode m) {
  return m == MeetupMode::intermediate ? "intermediate" : "final_destination";
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::all: return "exact";
    case Strategy::sp: return "sp";
    case Strategy::ch: return "ch";
    case Strategy::dp: return "dp";
    case Strategy::rt: return "rt";
    case Strategy::ed: return "ed";
    case Strategy::greedy: return "greedy";
  }
  return "exact";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "exact" || s == "all") return Strategy::all;
  if (s == "sp") return Strategy::sp;
  if (s == "ch") return Strategy::ch;
  if (s == "dp") return Strategy::dp;
  if (s == "rt") return Strategy::rt;
  if (s == "ed") return Strategy::ed;
  if (s == "greedy") return Strategy::greedy;
  return std::nullopt;
}

void validate_query(const RoadGraph& g, const MeetupQuery& q,
                    std::size_t min_objects) {
  if (q.objects.size() < min_objects)
    throw ValidationError("query needs at least " +
                          std::to_string(min_objects) + " moving objects");
  for (const MovingObject& obj : q.objects) {
    if (!g.has_node(obj.origin))
      throw ValidationError("object '" + obj.id + "': origin not in graph");
    if (obj.destination && !g.has_node(*obj.destination))
      throw ValidationError("object '" + obj.id +
                            "': destination not in graph");
    if (q.mode == MeetupMode::intermediate && !obj.destination)
      throw ValidationError("object '" + obj.id +
                            "': intermediate mode requires a destination");
    if (obj.w_out < 0.0 || obj.w_back < 0.0)
      throw ValidationError("object '" + obj.id + "': negative weight");
  }
}

MeetupSolution evaluate_candidates(const RoadGraph& g, const WeightView& w,
                                   const MeetupQuery& q,
                                   const CandidateSet& candidates,
                                   const DistanceMatrix* cache) {
  const auto start = Clock::now();
  validate_query(g, q);
  if (candidates.nodes.empty())
    throw ValidationError("empty candidate set");

  const std::vector<NodeId> nodes = canonical(candidates.nodes);
  const bool round_trip = q.mode == MeetupMode::intermediate;
  const std::size_t m = q.objects.size();

  // to_cost[i][c] / from_cost[i][c] for candidate index c.
  std::vector<std::vector<double>> to_cost(m), from_cost(m);
  for (std::size_t i = 0; i < m; ++i) {
    const MovingObject& obj = q.objects[i];
    to_cost[i].resize(nodes.size());
    from_cost[i].assign(nodes.size(), 0.0);
    if (cache) {
      for (std::size_t c = 0; c < nodes.size(); ++c) {
        to_cost[i][c] = cache->at(obj.origin, nodes[c]);
        if (round_trip)
          from_cost[i][c] = cache->at(nodes[c], *obj.destination);
      }
    } else {
      const SearchResult fwd =
          dijkstra(g, w, obj.origin, Direction::forward, nodes);
      for (std::size_t c = 0; c < nodes.size(); ++c)
        to_cost[i][c] = fwd.dist_at(nodes[c]);
      if (round_trip) {
        const SearchResult rev =
            dijkstra(g, w, *obj.destination, Direction::reverse, nodes);
        for (std::size_t c = 0; c < nodes.size(); ++c)
          from_cost[i][c] = rev.dist_at(nodes[c]);
      }
    }
  }

  MeetupSolution best;
  best.method = candidates.strategy;
  best.fell_back = candidates.fell_back;
  best.candidate_count = nodes.size();
  best.node = kNoNode;
  best.objective = kInf;

  // Ascending candidate ids + strict improvement = lowest-id tie-break.
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    double objective = 0.0;
    bool reachable = true;
    for (std::size_t i = 0; i < m && reachable; ++i) {
      const double to = to_cost[i][c];
      const double from = from_cost[i][c];
      if (to == kInf || from == kInf) {
        reachable = false;
        break;
      }
      objective += q.objects[i].w_out * to + q.objects[i].w_back * from;
    }
    if (reachable && objective < best.objective) {
      best.objective = objective;
      best.node = nodes[c];
      best.per_object.clear();
      for (std::size_t i = 0; i < m; ++i)
        best.per_object.push_back(LegCost{to_cost[i][c], from_cost[i][c]});
    }
  }

  if (best.node == kNoNode)
    throw InfeasibleError(
        "no candidate is reachable by every moving object");
  best.elapsed_s = seconds_since(start);
  return best;
}

MeetupSolution solve_exact(const RoadGraph& g, const WeightView& w,
                           const MeetupQuery& q, const DistanceMatrix* cache) {
  const auto start = Clock::now();
  MeetupSolution sol = evaluate_candidates(
      g, w, q, CandidateSet{all_nodes(g), Strategy::all, false}, cache);
  sol.elapsed_s = seconds_since(start);
  return sol;
}

MeetupSolution solve_sp(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q, CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);
  if (q.mode != MeetupMode::intermediate)
    throw ValidationError("sp heuristic requires intermediate mode");

  // Intersection of the per-object origin->destination search spaces.
  std::vector<std::uint32_t> hits(g.node_count() + 1, 0);
  for (const MovingObject& obj : q.objects) {
    const NodeId stop[] = {*obj.destination};
    const SearchResult r =
        dijkstra(g, w, obj.origin, Direction::forward, stop);
    for (NodeId v : r.settled) ++hits[v];
  }
  std::vector<NodeId> common;
  for (NodeId v = 1; v <= g.node_count(); ++v)
    if (hits[v] == q.objects.size()) common.push_back(v);

  CandidateSet candidates =
      common.empty() ? rect_candidates(g, q, Strategy::sp, true)
                     : make_candidates(std::move(common), Strategy::sp);
  if (out_candidates) *out_candidates = candidates;

  MeetupSolution sol = evaluate_candidates(g, w, q, candidates);
  sol.elapsed_s = seconds_since(start);
  return sol;
}

MeetupSolution solve_ch(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q, CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);

  const auto pts = endpoint_points(g, q);
  const ConvexHull hull = convex_hull(pts);

  CandidateSet candidates;
  if (hull.degenerate) {
    candidates = rect_candidates(g, q, Strategy::ch, true);
  } else {
    // Box prefilter via the spatial index, then the exact polygon test.
    std::vector<Point2> hull_pts = hull.vertices;
    std::vector<LonLat> corners;
    for (const Point2& p : hull_pts) corners.push_back(LonLat{p.x, p.y});
    std::vector<NodeId> inside;
    for (NodeId v : g.nodes_in_rect(Rect::bounding(corners))) {
      const LonLat pos = g.node_pos(v);
      if (point_in_convex_polygon(hull_pts, Point2{pos.lon, pos.lat}))
        inside.push_back(v);
    }
    candidates = make_candidates(std::move(inside), Strategy::ch);
  }
  if (out_candidates) *out_candidates = candidates;

  MeetupSolution sol = evaluate_candidates(g, w, q, candidates);
  sol.elapsed_s = seconds_since(start);
  return sol;
}

MeetupSolution solve_dp(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q, CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);

  const auto pts = endpoint_points(g, q);
  const ConvexHull hull = convex_hull(pts);
  const DiameterResult diameter =
      hull.degenerate ? hull_diameter(pts) : hull_diameter(hull.vertices);

  const NodeId p = g.snap_to_node(LonLat{diameter.p.x, diameter.p.y});
  const NodeId qn = g.snap_to_node(LonLat{diameter.q.x, diameter.q.y});

  // Union of both directional search spaces between the diameter points.
  const NodeId stop_q[] = {qn};
  const NodeId stop_p[] = {p};
  std::vector<NodeId> space =
      dijkstra(g, w, p, Direction::forward, stop_q).settled;
  const std::vector<NodeId> back =
      dijkstra(g, w, qn, Direction::forward, stop_p).settled;
  space.insert(space.end(), back.begin(), back.end());

  CandidateSet candidates = make_candidates(std::move(space), Strategy::dp);
  MeetupSolution sol;
  try {
    sol = evaluate_candidates(g, w, q, candidates);
  } catch (const InfeasibleError&) {
    candidates = rect_candidates(g, q, Strategy::dp, true);
    sol = evaluate_candidates(g, w, q, candidates);
  }
  if (out_candidates) *out_candidates = candidates;
  sol.elapsed_s = seconds_since(start);
  return sol;
}

MeetupSolution solve_rt(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q, CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);
  const CandidateSet candidates = rect_candidates(g, q, Strategy::rt, false);
  if (out_candidates) *out_candidates = candidates;
  MeetupSolution sol = evaluate_candidates(g, w, q, candidates);
  sol.elapsed_s = seconds_since(start);
  return sol;
}

std::size_t default_ed_k(std::size_t node_count) {
  const std::size_t k = (node_count + 9) / 10;  // ceil(|V| / 10)
  return std::clamp<std::size_t>(k, 1, node_count);
}

MeetupSolution solve_ed(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q, std::optional<std::size_t> k,
                        CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);

  const std::size_t kk =
      std::clamp<std::size_t>(k.value_or(default_ed_k(g.node_count())), 1,
                              g.node_count());
  const LonLat seed = euclidean_seed(g, q);
  CandidateSet candidates =
      make_candidates(g.knn_nodes(seed, kk), Strategy::ed);
  if (out_candidates) *out_candidates = candidates;

  MeetupSolution sol = evaluate_candidates(g, w, q, candidates);
  sol.elapsed_s = seconds_since(start);
  return sol;
}

MeetupSolution greedy_descent(const RoadGraph& g, const WeightView& w,
                              const MeetupQuery& q,
                              std::optional<NodeId> start_node,
                              std::size_t neighborhood_k,
                              CandidateSet* out_candidates) {
  const auto start = Clock::now();
  validate_query(g, q);
  if (neighborhood_k < 1)
    throw ValidationError("greedy neighborhood must hold at least one node");

  NodeId current = start_node.value_or(g.snap_to_node(euclidean_seed(g, q)));
  if (!g.has_node(current))
    throw ValidationError("greedy start node not in graph");

  const std::size_t k =
      std::min<std::size_t>(neighborhood_k, g.node_count());
  std::unordered_set<NodeId> evaluated;

  MeetupSolution best;
  best.node = current;
  best.objective = kInf;

  while (true) {
    CandidateSet hood = make_candidates(
        g.knn_nodes(g.node_pos(current), k), Strategy::greedy);
    evaluated.insert(hood.nodes.begin(), hood.nodes.end());

    MeetupSolution local;
    try {
      local = evaluate_candidates(g, w, q, hood);
    } catch (const InfeasibleError&) {
      break;  // nothing reachable around here
    }
    if (local.objective < best.objective) {
      best = local;
      current = local.node;
    } else {
      break;  // local minimum certificate
    }
  }

  if (best.objective == kInf)
    throw InfeasibleError(
        "no node around the greedy start is reachable by every object");
  best.method = Strategy::greedy;
  best.candidate_count = evaluated.size();
  if (out_candidates) {
    *out_candidates = make_candidates(
        std::vector<NodeId>(evaluated.begin(), evaluated.end()),
        Strategy::greedy);
  }
  best.elapsed_s = seconds_since(start);
  return best;
}

MeetupSolution solve_with(Strategy method, const RoadGraph& g,
                          const WeightView& w, const MeetupQuery& q,
                          const SolveOptions& opts,
                          CandidateSet* out_candidates) {
  switch (method) {
    case Strategy::all: {
      MeetupSolution sol = solve_exact(g, w, q, opts.cache);
      if (out_candidates)
        *out_candidates = CandidateSet{all_nodes(g), Strategy::all, false};
      return sol;
    }
    case Strategy::sp: return solve_sp(g, w, q, out_candidates);
    case Strategy::ch: return solve_ch(g, w, q, out_candidates);
    case Strategy::dp: return solve_dp(g, w, q, out_candidates);
    case Strategy::rt: return solve_rt(g, w, q, out_candidates);
    case Strategy::ed:
      return solve_ed(g, w, q, opts.ed_k, out_candidates);
    case Strategy::greedy:
      return greedy_descent(g, w, q, std::nullopt, opts.greedy_k,
                            out_candidates);
  }
  throw ValidationError("unknown strategy");
}

std::vector<SurfaceRow> cost_surface(const RoadGraph& g, const WeightView& w,
                                     const MeetupQuery& q) {
  validate_query(g, q, 1);
  const bool round_trip = q.mode == MeetupMode::intermediate;

  std::vector<double> objective(g.node_count() + 1, 0.0);
  std::vector<bool> feasible(g.node_count() + 1, true);
  feasible[0] = false;

  for (const MovingObject& obj : q.objects) {
    const SearchResult fwd = dijkstra(g, w, obj.origin, Direction::forward);
    SearchResult rev;
    if (round_trip)
      rev = dijkstra(g, w, *obj.destination, Direction::reverse);
    for (NodeId v = 1; v <= g.node_count(); ++v) {
      if (!feasible[v]) continue;
      const double to = fwd.dist_at(v);
      const double from = round_trip ? rev.dist_at(v) : 0.0;
      if (to == kInf || from == kInf) {
        feasible[v] = false;
        continue;
      }
      objective[v] += obj.w_out * to + obj.w_back * from;
    }
  }

  std::vector<SurfaceRow> rows;
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (!feasible[v]) continue;
    const LonLat pos = g.node_pos(v);
    rows.push_back(SurfaceRow{v, pos.lon, pos.lat, objective[v]});
  }
  return rows;
}

}  // namespace meetup
