#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "meetup/meetup.hpp"

namespace meetup {

struct CaseResult {
  int case_id = 0;
  Strategy method = Strategy::all;
  double objective = 0.0;  // kInf when infeasible
  NodeId node = kNoNode;
  double elapsed_s = 0.0;
  bool matched_optimal = false;
  bool fell_back = false;
  std::size_t candidate_count = 0;
  bool infeasible = false;
};

/// |objective - exact| <= 1e-9 * max(1, |exact|): the optimality criterion
/// compares objective values, not chosen nodes.
bool matches_optimal(double objective, double exact_objective);

struct MethodSummary {
  Strategy method = Strategy::all;
  int found_optimal = 0;
  int missed = 0;
  int infeasible = 0;
  double accuracy_pct = 0.0;  // over feasible cases
  double mean_s = 0.0;
  double median_s = 0.0;
  double p90_s = 0.0;
  double p99_s = 0.0;
};

struct Summary {
  int total_cases = 0;
  int feasible_cases = 0;
  std::vector<MethodSummary> methods;
};

/// Seeded random intermediate-mode queries: per case, 2*m distinct uniform
/// node draws; objects whose destination is unreachable from their origin
/// are redrawn (bounded retries, then the case is skipped with a note on
/// stderr). Same seed, same cases.
std::vector<MeetupQuery> gen_cases(const RoadGraph& g, int n_cases,
                                   int objects_per_case, std::uint64_t seed,
                                   Metric metric = Metric::distance);

struct RunOptions {
  int jobs = 1;  // 1 = sequential (low-noise timing)
  SolveOptions solve;
};

/// One CaseResult per (case, method); the exact solver always runs first
/// and defines matched_optimal. Infeasible cases are recorded with an
/// infinite objective. Output order is (case_id, method) regardless of
/// `jobs`. Wall time covers the solver call only; one warm-up run per
/// method is discarded.
std::vector<CaseResult> run_experiment(const RoadGraph& g, const WeightView& w,
                                       std::span<const MeetupQuery> cases,
                                       std::vector<Strategy> methods,
                                       const RunOptions& opts = {});

/// Accuracy table plus runtime statistics per method.
/// Throws ValidationError when no exact rows are present.
Summary summarize(std::span<const CaseResult> results);

/// Sorted (elapsed_s, cumulative_fraction) rows; the last fraction is 1.0.
void export_cdf(std::span<const CaseResult> results, Strategy method,
                std::ostream& out);

void write_results_csv(std::span<const CaseResult> results, std::ostream& out);
void write_summary_csv(const Summary& summary, std::ostream& out);
void print_summary_table(const Summary& summary, std::ostream& out);

}  // namespace meetup
