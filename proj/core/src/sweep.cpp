#include "dpham/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "dpham/construct.hpp"
#include "dpham/verify.hpp"

namespace dpham {

const char* oracle_status_name(OracleStatus s) noexcept {
  switch (s) {
    case OracleStatus::NotRun:
      return "-";
    case OracleStatus::Found:
      return "found";
    case OracleStatus::NoCycle:
      return "no-cycle";
    case OracleStatus::BudgetExhausted:
      return "budget";
    case OracleStatus::TooLarge:
      return "skipped";
  }
  return "?";
}

std::size_t SweepSummary::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const PairResult& r) { return r.passed(); }));
}

std::size_t SweepSummary::oracle_count(OracleStatus s) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [s](const PairResult& r) { return r.oracle == s; }));
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.n_min < 3 || spec.n_max < 3) {
    throw std::invalid_argument("sweep bounds must be at least 3");
  }
  if (spec.n_min > spec.n_max) {
    throw std::invalid_argument("sweep lower bound exceeds upper bound");
  }
  if (spec.jobs == 0) throw std::invalid_argument("jobs must be positive");
  for (Index t : spec.t_values) {
    for (Index n = spec.n_min; n <= spec.n_max; ++n) make_params(n, t);
  }
  if (spec.oracle && (spec.oracle->max_vertices <= 0 || spec.oracle->max_steps == 0)) {
    throw std::invalid_argument("oracle budget limits must be positive");
  }
}

std::vector<std::pair<Index, Index>> sweep_pairs(const SweepSpec& spec) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index n = spec.n_min; n <= spec.n_max; ++n) {
    if (spec.t_values.empty()) {
      for (Index t = 1; 2 * t < n; ++t) pairs.emplace_back(n, t);
    } else {
      std::vector<Index> ts(spec.t_values);
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      for (Index t : ts) pairs.emplace_back(n, t);
    }
  }
  return pairs;
}

PairResult check_pair(Index n, Index t, const std::optional<SearchBudget>& oracle) {
  PairResult result;
  result.n = n;
  result.t = t;
  try {
    const DpGraph g(make_params(n, t));
    const auto report = verify_hamilton(g, hamilton_cycle(n, t));
    result.constructed = report.ok();
    if (!report.ok()) result.finding = report.failures.front().detail;

    if (oracle) {
      if (g.vertex_count() > oracle->max_vertices) {
        result.oracle = OracleStatus::TooLarge;
      } else {
        try {
          const auto found = brute_force_hamilton(g, *oracle);
          result.oracle = found && verify_hamilton(g, *found).ok()
                              ? OracleStatus::Found
                              : OracleStatus::NoCycle;
          if (result.oracle == OracleStatus::NoCycle && result.finding.empty()) {
            result.finding = "oracle found no cycle";
          }
        } catch (const BudgetExhausted&) {
          result.oracle = OracleStatus::BudgetExhausted;
        }
      }
    }
  } catch (const std::exception& e) {
    result.constructed = false;
    result.finding = e.what();
  }
  return result;
}

SweepSummary run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);
  const auto pairs = sweep_pairs(spec);
  SweepSummary summary;
  summary.results.resize(pairs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      summary.results[i] = check_pair(pairs[i].first, pairs[i].second, spec.oracle);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         spec.jobs, static_cast<unsigned>(pairs.size())));
  std::vector<std::jthread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  threads.clear();
  return summary;
}

}  // namespace dpham
