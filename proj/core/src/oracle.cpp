#include "dpham/oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>
#include <string>

#include "dpham/construct.hpp"
#include "dpham/errors.hpp"
#include "dpham/verify.hpp"

namespace dpham {

namespace {

class Search {
 public:
  Search(const DpGraph& g, const SearchBudget& budget)
      : g_(g),
        budget_(budget),
        size_(static_cast<std::size_t>(g.vertex_count())),
        adj_(size_),
        visited_(size_, false) {
    for (std::size_t id = 0; id < size_; ++id) {
      const Vertex v = *g.from_serial(static_cast<Index>(id));
      const auto nbrs = g.neighbors(v);
      for (std::size_t j = 0; j < 3; ++j)
        adj_[id][j] = static_cast<std::size_t>(g.serial(nbrs[j]));
      std::sort(adj_[id].begin(), adj_[id].end());
    }
  }

  // Returns true once path_ is a Hamilton path closing back to its start.
  bool run(std::span<const Vertex> seed) {
    for (const Vertex& v : seed) push(static_cast<std::size_t>(g_.serial(v)));
    return extend();
  }

  const std::vector<std::size_t>& path() const noexcept { return path_; }
  std::uint64_t expansions() const noexcept { return expansions_; }

 private:
  void push(std::size_t id) {
    visited_[id] = true;
    path_.push_back(id);
  }
  void pop() {
    visited_[path_.back()] = false;
    path_.pop_back();
  }

  bool usable(std::size_t id) const {
    return !visited_[id] || id == path_.front() || id == path_.back();
  }

  // After the tour moved past `interior`, its unvisited neighbours may have
  // lost their last spare edge.
  bool dead_end_around(std::size_t interior) const {
    for (std::size_t z : adj_[interior]) {
      if (visited_[z]) continue;
      int options = 0;
      for (std::size_t w : adj_[z]) options += usable(w) ? 1 : 0;
      if (options < 2) return true;
    }
    return false;
  }

  bool extend() {
    const std::size_t end = path_.back();
    if (path_.size() == size_) {
      const auto& nb = adj_[end];
      return std::find(nb.begin(), nb.end(), path_.front()) != nb.end();
    }
    for (std::size_t next : adj_[end]) {
      if (visited_[next]) continue;
      if (++expansions_ > budget_.max_steps) throw BudgetExhausted(expansions_ - 1);
      push(next);
      const bool pruned = path_.size() > 2 && dead_end_around(end);
      if (!pruned && extend()) return true;
      pop();
    }
    return false;
  }

  const DpGraph& g_;
  SearchBudget budget_;
  std::size_t size_;
  std::vector<std::array<std::size_t, 3>> adj_;
  std::vector<bool> visited_;
  std::vector<std::size_t> path_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

SearchOutcome brute_force_search(const DpGraph& g, const SearchBudget& budget,
                                 std::span<const Vertex> seed) {
  if (budget.max_vertices <= 0 || budget.max_steps == 0) {
    throw std::invalid_argument("search budget limits must be positive");
  }
  if (g.vertex_count() > budget.max_vertices) {
    throw std::invalid_argument(
        "graph has " + std::to_string(g.vertex_count()) +
        " vertices, search budget allows " + std::to_string(budget.max_vertices));
  }
  const Vertex origin{Layer::X, 0};
  std::vector<Vertex> start{origin};
  if (!seed.empty()) {
    if (seed.front() != origin) {
      throw std::invalid_argument("seed path must start at x0");
    }
    if (seed.size() > static_cast<std::size_t>(g.vertex_count())) {
      throw std::invalid_argument("seed path is longer than the graph");
    }
    try {
      start = VertexPath(g, std::vector<Vertex>(seed.begin(), seed.end())).vertices();
    } catch (const IntegrityError& e) {
      throw std::invalid_argument(std::string("seed is not a simple path: ") + e.what());
    }
  }

  Search search(g, budget);
  SearchOutcome outcome;
  const bool found = search.run(start);
  outcome.expansions = search.expansions();
  if (found) {
    std::vector<Vertex> tour;
    tour.reserve(search.path().size());
    for (std::size_t id : search.path())
      tour.push_back(*g.from_serial(static_cast<Index>(id)));
    outcome.cycle = HamiltonCycle::canonical(g, std::move(tour));
  }
  return outcome;
}

bool agreement_check(Index n, Index t, const SearchBudget& budget) {
  const DpGraph g(make_params(n, t));
  const auto found = brute_force_hamilton(g, budget);
  if (!found || !verify_hamilton(g, *found).ok()) return false;
  return verify_hamilton(g, hamilton_cycle(n, t)).ok();
}

}  // namespace dpham
