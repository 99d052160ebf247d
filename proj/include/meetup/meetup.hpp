#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meetup/matrix_cache.hpp"
#include "meetup/shortest_path.hpp"

namespace meetup {

enum class MeetupMode { intermediate, final_destination };

std::string_view to_string(MeetupMode m);

struct MovingObject {
  std::string id;
  NodeId origin = kNoNode;
  std::optional<NodeId> destination;  // required in intermediate mode
  double w_out = 1.0;                 // origin -> meetup weight
  double w_back = 1.0;                // meetup -> destination weight
};

struct MeetupQuery {
  std::vector<MovingObject> objects;  // >= 2
  MeetupMode mode = MeetupMode::intermediate;
  Metric metric = Metric::distance;
};

/// Which search-space reduction produced a candidate set / solution.
enum class Strategy { all, sp, ch, dp, rt, ed, greedy };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

struct CandidateSet {
  std::vector<NodeId> nodes;  // sorted ascending, unique
  Strategy strategy = Strategy::all;
  bool fell_back = false;
};

struct LegCost {
  double to_cost = 0.0;    // origin -> meetup
  double from_cost = 0.0;  // meetup -> destination (0 in final mode)
};

struct MeetupSolution {
  NodeId node = kNoNode;
  double objective = 0.0;
  std::vector<LegCost> per_object;
  std::size_t candidate_count = 0;
  Strategy method = Strategy::all;
  bool fell_back = false;
  double elapsed_s = 0.0;
};

/// Throws ValidationError if the query breaks its invariants against `g`.
/// Meetup solvers need >= 2 objects; the cost surface accepts one.
void validate_query(const RoadGraph& g, const MeetupQuery& q,
                    std::size_t min_objects = 2);

/// Evaluates every candidate: per object one forward Dijkstra from the
/// origin and (intermediate mode) one reverse Dijkstra from the
/// destination, each stopping once all candidates are settled. Returns the
/// candidate minimizing the total weighted cost; equal objectives resolve
/// to the lowest node id. Candidates unreachable by any leg are skipped;
/// if none survives, throws InfeasibleError.
MeetupSolution evaluate_candidates(const RoadGraph& g, const WeightView& w,
                                   const MeetupQuery& q,
                                   const CandidateSet& candidates,
                                   const DistanceMatrix* cache = nullptr);

/// Ground truth: candidate set = every node.
MeetupSolution solve_exact(const RoadGraph& g, const WeightView& w,
                           const MeetupQuery& q,
                           const DistanceMatrix* cache = nullptr);

/// Shortest-path search-space heuristic: candidates = intersection of the
/// per-object origin->destination search spaces; falls back to the
/// bounding-rectangle candidates when the intersection is empty.
/// Intermediate mode only.
MeetupSolution solve_sp(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q,
                        CandidateSet* out_candidates = nullptr);

/// Convex-hull heuristic: candidates = nodes inside or on the hull of all
/// origins and destinations; degenerate hulls fall back to the rectangle.
MeetupSolution solve_ch(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q,
                        CandidateSet* out_candidates = nullptr);

/// Diameter-point heuristic: candidates = union of the two directional
/// search spaces between the hull's farthest pair (snapped to nodes).
MeetupSolution solve_dp(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q,
                        CandidateSet* out_candidates = nullptr);

/// Bounding-rectangle heuristic: candidates = nodes inside the minimum
/// bounding rectangle of all origins and destinations.
MeetupSolution solve_rt(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q,
                        CandidateSet* out_candidates = nullptr);

/// Euclidean-median heuristic: candidates = k nearest nodes around the
/// geometric median of all origins and destinations.
/// Default k = ceil(|V| / 10), clamped to [1, |V|].
MeetupSolution solve_ed(const RoadGraph& g, const WeightView& w,
                        const MeetupQuery& q,
                        std::optional<std::size_t> k = std::nullopt,
                        CandidateSet* out_candidates = nullptr);

std::size_t default_ed_k(std::size_t node_count);

/// Local search from `start` (default: node nearest the geometric median):
/// moves to the best strict improver among the k spatially nearest nodes
/// of the current node until none improves. The reported candidate set is
/// the union of all evaluated neighborhoods.
MeetupSolution greedy_descent(const RoadGraph& g, const WeightView& w,
                              const MeetupQuery& q,
                              std::optional<NodeId> start = std::nullopt,
                              std::size_t neighborhood_k = 8,
                              CandidateSet* out_candidates = nullptr);

struct SolveOptions {
  std::optional<std::size_t> ed_k;
  std::size_t greedy_k = 8;
  const DistanceMatrix* cache = nullptr;  // exact/all evaluation only
};

/// Dispatch by strategy tag.
MeetupSolution solve_with(Strategy method, const RoadGraph& g,
                          const WeightView& w, const MeetupQuery& q,
                          const SolveOptions& opts = {},
                          CandidateSet* out_candidates = nullptr);

struct SurfaceRow {
  NodeId node = kNoNode;
  double lon = 0.0;
  double lat = 0.0;
  double objective = 0.0;
};

/// Total meetup cost for every node reachable by all objects, ascending by
/// node id. The minimum row carries the exact optimum.
std::vector<SurfaceRow> cost_surface(const RoadGraph& g, const WeightView& w,
                                     const MeetupQuery& q);

}  // namespace meetup
