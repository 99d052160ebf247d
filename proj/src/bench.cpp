#include "meetup/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

#include "meetup/errors.hpp"

namespace meetup {

bool matches_optimal(double objective, double exact_objective) {
  return std::abs(objective - exact_objective) <=
         1e-9 * std::max(1.0, std::abs(exact_objective));
}

std::vector<MeetupQuery> gen_cases(const RoadGraph& g, int n_cases,
                                   int objects_per_case, std::uint64_t seed,
                                   Metric metric) {
  if (objects_per_case < 2)
    throw ValidationError("cases need at least 2 objects");
  const std::size_t n = g.node_count();
  if (n < 2 * static_cast<std::size_t>(objects_per_case))
    throw ValidationError("graph too small for " +
                          std::to_string(objects_per_case) + " objects");

  const WeightView probe = WeightView::distance_weights(g);
  std::mt19937_64 rng(seed);
  // Rejection-sampled uniform draw; avoids the platform-defined
  // uniform_int_distribution so seeds replay identically everywhere.
  const auto draw_node = [&]() -> NodeId {
    const std::uint64_t span = n;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return static_cast<NodeId>(1 + x % span);
  };

  constexpr int kMaxRetries = 100;
  std::vector<MeetupQuery> cases;
  cases.reserve(static_cast<std::size_t>(n_cases));

  for (int c = 0; c < n_cases; ++c) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
      // 2m distinct endpoints per case.
      std::vector<NodeId> picks;
      while (picks.size() < 2 * static_cast<std::size_t>(objects_per_case)) {
        const NodeId v = draw_node();
        if (std::find(picks.begin(), picks.end(), v) == picks.end())
          picks.push_back(v);
      }
      MeetupQuery q;
      q.mode = MeetupMode::intermediate;
      q.metric = metric;
      bool reachable = true;
      for (int i = 0; i < objects_per_case; ++i) {
        MovingObject obj;
        obj.id = "obj" + std::to_string(i + 1);
        obj.origin = picks[2 * i];
        obj.destination = picks[2 * i + 1];
        const NodeId stop[] = {*obj.destination};
        const SearchResult r =
            dijkstra(g, probe, obj.origin, Direction::forward, stop);
        if (!r.reached(*obj.destination)) {
          reachable = false;
          break;
        }
        q.objects.push_back(std::move(obj));
      }
      if (reachable) {
        cases.push_back(std::move(q));
        ok = true;
      }
    }
    if (!ok)
      std::fprintf(stderr, "note: case %d skipped, no reachable draw\n", c);
  }
  return cases;
}

namespace {

MeetupSolution run_one(Strategy method, const RoadGraph& g,
                       const WeightView& w, const MeetupQuery& q,
                       const SolveOptions& opts, CandidateSet* cs) {
  return solve_with(method, g, w, q, opts, cs);
}

}  // namespace

std::vector<CaseResult> run_experiment(const RoadGraph& g, const WeightView& w,
                                       std::span<const MeetupQuery> cases,
                                       std::vector<Strategy> methods,
                                       const RunOptions& opts) {
  // The exact solver leads: it defines matched_optimal for everyone else.
  if (std::find(methods.begin(), methods.end(), Strategy::all) !=
      methods.end())
    methods.erase(std::remove(methods.begin(), methods.end(), Strategy::all),
                  methods.end());
  methods.insert(methods.begin(), Strategy::all);

  std::vector<CaseResult> results(cases.size() * methods.size());
  if (cases.empty()) return results;

  // Warm-up pass, discarded: first-touch allocation noise stays out of the
  // recorded runtimes.
  for (Strategy m : methods) {
    try {
      (void)run_one(m, g, w, cases[0], opts.solve, nullptr);
    } catch (const InfeasibleError&) {
    }
  }

  const auto run_case = [&](std::size_t ci) {
    const MeetupQuery& q = cases[ci];
    double exact_objective = kInf;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      CaseResult& r = results[ci * methods.size() + mi];
      r.case_id = static_cast<int>(ci);
      r.method = methods[mi];
      CandidateSet cs;
      try {
        const MeetupSolution sol = run_one(methods[mi], g, w, q, opts.solve,
                                           &cs);
        r.objective = sol.objective;
        r.node = sol.node;
        r.elapsed_s = sol.elapsed_s;
        r.fell_back = cs.fell_back;
        r.candidate_count = sol.candidate_count;
        if (methods[mi] == Strategy::all) {
          exact_objective = sol.objective;
          r.matched_optimal = true;
        } else {
          r.matched_optimal = matches_optimal(sol.objective, exact_objective);
        }
      } catch (const InfeasibleError&) {
        r.objective = kInf;
        r.node = kNoNode;
        r.infeasible = true;
        r.matched_optimal = false;
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t ci = 0; ci < cases.size(); ++ci) run_case(ci);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t ci = next.fetch_add(1);
          if (ci >= cases.size()) return;
          run_case(ci);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return results;
}

namespace {

double percentile(std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  // Nearest-rank, except the median interpolates between the middle two.
  const std::size_t n = sorted.size();
  if (p == 0.5) {
    if (n % 2 == 1) return sorted[n / 2];
    return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  }
  const std::size_t rank = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n)));
  return sorted[std::clamp<std::size_t>(rank, 1, n) - 1];
}

}  // namespace

Summary summarize(std::span<const CaseResult> results) {
  if (results.empty()) throw ValidationError("summarize: no results");

  std::vector<Strategy> order;
  for (const CaseResult& r : results)
    if (std::find(order.begin(), order.end(), r.method) == order.end())
      order.push_back(r.method);
  if (std::find(order.begin(), order.end(), Strategy::all) == order.end())
    throw ValidationError("summarize: missing exact baseline rows");

  Summary s;
  for (const CaseResult& r : results)
    if (r.method == Strategy::all) {
      ++s.total_cases;
      if (!r.infeasible) ++s.feasible_cases;
    }

  for (Strategy m : order) {
    MethodSummary ms;
    ms.method = m;
    std::vector<double> times;
    for (const CaseResult& r : results) {
      if (r.method != m) continue;
      if (r.infeasible) {
        ++ms.infeasible;
        continue;
      }
      times.push_back(r.elapsed_s);
      if (r.matched_optimal)
        ++ms.found_optimal;
      else
        ++ms.missed;
    }
    const int denom = ms.found_optimal + ms.missed;
    ms.accuracy_pct =
        denom > 0 ? 100.0 * ms.found_optimal / static_cast<double>(denom)
                  : 0.0;
    std::sort(times.begin(), times.end());
    if (!times.empty()) {
      double sum = 0.0;
      for (double t : times) sum += t;
      ms.mean_s = sum / static_cast<double>(times.size());
      ms.median_s = percentile(times, 0.5);
      ms.p90_s = percentile(times, 0.9);
      ms.p99_s = percentile(times, 0.99);
    }
    s.methods.push_back(ms);
  }
  return s;
}

void export_cdf(std::span<const CaseResult> results, Strategy method,
                std::ostream& out) {
  std::vector<double> times;
  for (const CaseResult& r : results)
    if (r.method == method && !r.infeasible) times.push_back(r.elapsed_s);
  if (times.empty())
    throw ValidationError("export_cdf: no rows for method " +
                          std::string(to_string(method)));
  std::sort(times.begin(), times.end());

  out << "elapsed_s,cumulative_fraction\n";
  const double n = static_cast<double>(times.size());
  char buf[64];
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", times[i],
                  static_cast<double>(i + 1) / n);
    out << buf;
  }
}

void write_results_csv(std::span<const CaseResult> results,
                       std::ostream& out) {
  out << "case_id,method,objective,node_id,elapsed_s,matched_optimal,"
         "fell_back,candidate_count\n";
  char buf[160];
  for (const CaseResult& r : results) {
    std::snprintf(buf, sizeof(buf), "%d,%s,%.12g,%u,%.9g,%d,%d,%zu\n",
                  r.case_id, std::string(to_string(r.method)).c_str(),
                  r.objective, r.node, r.elapsed_s, r.matched_optimal ? 1 : 0,
                  r.fell_back ? 1 : 0, r.candidate_count);
    out << buf;
  }
}

void write_summary_csv(const Summary& summary, std::ostream& out) {
  out << "Methods,Number of found optimal cases,Number of missed cases,"
         "Accuracy,mean_s,median_s,p90_s,p99_s\n";
  char buf[200];
  for (const MethodSummary& m : summary.methods) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.1f,%.9g,%.9g,%.9g,%.9g\n",
                  std::string(to_string(m.method)).c_str(), m.found_optimal,
                  m.missed, m.accuracy_pct, m.mean_s, m.median_s, m.p90_s,
                  m.p99_s);
    out << buf;
  }
}

void print_summary_table(const Summary& summary, std::ostream& out) {
  out << "cases: " << summary.total_cases
      << " (feasible: " << summary.feasible_cases << ")\n";
  char buf[200];
  std::snprintf(buf, sizeof(buf), "%-8s %8s %8s %10s %12s %12s\n", "method",
                "found", "missed", "accuracy", "median_ms", "p90_ms");
  out << buf;
  for (const MethodSummary& m : summary.methods) {
    std::snprintf(buf, sizeof(buf), "%-8s %8d %8d %9.1f%% %12.3f %12.3f\n",
                  std::string(to_string(m.method)).c_str(), m.found_optimal,
                  m.missed, m.accuracy_pct, m.median_s * 1e3, m.p90_s * 1e3);
    out << buf;
  }
}

}  // namespace meetup
