#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dpham/graph.hpp"
#include "dpham/oracle.hpp"

namespace dpham {

struct SweepSpec {
  Index n_min = 3;
  Index n_max = 31;
  /// Empty means every t with 1 <= t < n/2.
  std::vector<Index> t_values;
  unsigned jobs = 1;
  std::optional<SearchBudget> oracle;
};

enum class OracleStatus { NotRun, Found, NoCycle, BudgetExhausted, TooLarge };

const char* oracle_status_name(OracleStatus s) noexcept;

struct PairResult {
  Index n = 0;
  Index t = 0;
  bool constructed = false;
  std::string finding;  // empty when the pair passed
  OracleStatus oracle = OracleStatus::NotRun;

  bool passed() const noexcept {
    return constructed && oracle != OracleStatus::NoCycle;
  }
};

struct SweepSummary {
  std::vector<PairResult> results;  // sorted by (n, t)

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept { return results.size() - passed(); }
  std::size_t oracle_count(OracleStatus s) const noexcept;
  bool all_passed() const noexcept { return failed() == 0; }
};

/// Throws std::invalid_argument for bounds below 3, n_min > n_max, jobs == 0,
/// or an explicit t that is invalid for some n in range.
void validate_sweep(const SweepSpec& spec);

/// The (n, t) pairs covered by `spec`, sorted.
std::vector<std::pair<Index, Index>> sweep_pairs(const SweepSpec& spec);

/// Construct and verify (and optionally search) every pair, spread over
/// spec.jobs threads. Results come back in (n, t) order regardless of which
/// thread finished first.
SweepSummary run_sweep(const SweepSpec& spec);

PairResult check_pair(Index n, Index t, const std::optional<SearchBudget>& oracle);

}  // namespace dpham
