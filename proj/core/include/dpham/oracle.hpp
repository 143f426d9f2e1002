#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "dpham/construct.hpp"
#include "dpham/graph.hpp"

namespace dpham {

struct SearchBudget {
  Index max_vertices = 48;
  std::uint64_t max_steps = 100'000'000;
};

/// The search hit max_steps before finishing. Says nothing about existence.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t steps)
      : std::runtime_error("search budget exhausted after " +
                           std::to_string(steps) + " expansions"),
        steps_(steps) {}
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t steps_;
};

struct SearchOutcome {
  std::optional<HamiltonCycle> cycle;
  std::uint64_t expansions = 0;
};

/// Backtracking search anchored at X_0. Neighbours are tried in serial order
/// and a branch is cut as soon as some unvisited vertex is left with fewer
/// than two usable neighbours.
///
/// `seed`, if given, is a path from X_0 the search starts from instead.
/// Throws std::invalid_argument if 4n exceeds budget.max_vertices or the seed
/// is not a path from X_0; BudgetExhausted if max_steps runs out.
SearchOutcome brute_force_search(const DpGraph& g, const SearchBudget& budget,
                                 std::span<const Vertex> seed = {});

inline std::optional<HamiltonCycle> brute_force_hamilton(
    const DpGraph& g, const SearchBudget& budget = {}) {
  return brute_force_search(g, budget).cycle;
}

/// True iff the search finds a cycle and the constructed cycle verifies.
bool agreement_check(Index n, Index t, const SearchBudget& budget = {});

}  // namespace dpham
