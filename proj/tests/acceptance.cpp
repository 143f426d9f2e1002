// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "cli.hpp"
#include "dpham/dpham.hpp"
#include "reference.hpp"

namespace {

using namespace dpham;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Every (n, t) with 3 <= n <= 31 verifies; whole run under one second.
Outcome small_range() {
  const auto start = Clock::now();
  SweepSpec spec;
  spec.n_min = 3;
  spec.n_max = 31;
  spec.jobs = 1;
  const auto summary = run_sweep(spec);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << summary.results.size() << " pairs, " << summary.failed() << " failures, "
    << elapsed << " s (limit 1 s)";
  return {summary.results.size() == 225 && summary.all_passed() && elapsed < 1.0, d.str()};
}

// Every valid (n, t) with n <= 1000 verifies in under 60 seconds.
Outcome extended_sweep() {
  const auto start = Clock::now();
  SweepSpec spec;
  spec.n_min = 3;
  spec.n_max = 1000;
  spec.jobs = worker_count();
  const auto summary = run_sweep(spec);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << summary.results.size() << " pairs, " << summary.failed() << " failures, "
    << elapsed << " s on " << spec.jobs << " thread(s) (limit 60 s)";
  return {summary.all_passed() && elapsed < 60.0, d.str()};
}

// Brute force finds a cycle and agreement holds for every 4n <= 48.
Outcome oracle_agreement() {
  std::size_t pairs = 0, failures = 0;
  for (Index n = 3; 4 * n <= 48; ++n) {
    for (Index t = 1; 2 * t < n; ++t) {
      ++pairs;
      const DpGraph g(make_params(n, t));
      const auto found = brute_force_hamilton(g);
      const bool ok = found && verify_hamilton(g, *found).ok() && agreement_check(n, t);
      if (!ok) {
        ++failures;
        std::cout << "    oracle disagreement at DP(" << n << "," << t << ")\n";
      }
    }
  }
  return {pairs == 30 && failures == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

// Five partition checks on every odd n <= 201 with canonical a, plus 100
// sampled non-canonical a-sequences with n <= 99.
Outcome partition_suite() {
  std::size_t canonical_runs = 0, failures = 0;
  for (Index n = 3; n <= 201; n += 2) {
    for (Index t = 1; 2 * t < n; ++t) {
      const DpGraph g(make_params(n, t));
      ++canonical_runs;
      const auto report = check_proof_partitions(g, canonical_a_sequence(g.params()));
      if (!report.ok()) {
        ++failures;
        std::cout << "    DP(" << n << "," << t << "): " << report.summary();
      }
    }
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Index> pick_n(1, 49);
  std::size_t sampled = 0;
  while (sampled < 100) {
    const Index n = 2 * pick_n(rng) + 1;  // odd, 3..99
    const Index t = std::uniform_int_distribution<Index>(1, (n - 1) / 2)(rng);
    const auto params = make_params(n, t);
    auto entries = ref::random_a_sequence(n, params.g(), rng);
    if (entries == canonical_a_sequence(params).entries()) continue;
    ++sampled;
    const DpGraph g(params);
    const auto a = validate_a_sequence(params, entries);
    const auto report = check_proof_partitions(g, a);
    const bool cycle_ok = verify_hamilton(g, odd_hamilton(g, a)).ok();
    if (!report.ok() || !cycle_ok) {
      ++failures;
      std::cout << "    DP(" << n << "," << t << ") sampled a-sequence failed\n"
                << report.summary();
    }
  }
  return {failures == 0, std::to_string(canonical_runs) + " canonical + " +
                             std::to_string(sampled) + " sampled, " +
                             std::to_string(failures) + " failures"};
}

// 3-regularity, symmetry, 6n edges and inner cycles of length 2p for n <= 200.
Outcome structural_invariants() {
  std::size_t graphs = 0, violations = 0;
  for (Index n = 3; n <= 200; ++n) {
    for (Index t = 1; 2 * t < n; ++t) {
      ++graphs;
      const DpGraph g(make_params(n, t));
      Index degree_sum = 0;
      for (Index id = 0; id < g.vertex_count(); ++id) {
        const Vertex v = *g.from_serial(id);
        const auto nb = g.neighbors(v);
        const std::set<Vertex> distinct(nb.begin(), nb.end());
        if (distinct.size() != 3 || distinct.count(v)) ++violations;
        degree_sum += static_cast<Index>(distinct.size());
        for (const Vertex& w : nb) {
          const auto back = g.neighbors(w);
          if (std::find(back.begin(), back.end(), v) == back.end() || !g.adjacent(w, v) ||
              !g.adjacent(v, w)) {
            ++violations;
          }
        }
      }
      if (degree_sum != 12 * n || static_cast<Index>(g.edges().size()) != 6 * n) ++violations;
      if (g.params().odd()) {
        Index covered = 0;
        for (Index i = 0; i < g.params().g(); ++i) {
          const auto c = cycle_C(g, i);
          const std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
          if (static_cast<Index>(distinct.size()) != 2 * *g.params().p()) ++violations;
          covered += static_cast<Index>(distinct.size());
        }
        if (covered != 2 * n) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(graphs) + " graphs, " +
                               std::to_string(violations) + " violations"};
}

// `cycle 9 3 --format cert` twice gives identical bytes; certificate
// round-trip is the identity on 50 random valid (n, t).
Outcome determinism() {
  auto run_cert = [] {
    std::ostringstream out, err;
    const int code = cli::run({"cycle", "9", "3", "--format", "cert"}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto first = run_cert();
  const auto second = run_cert();
  const bool cli_same = first.first == 0 && second.first == 0 && first.second == second.second &&
                        !first.second.empty();

  std::mt19937_64 rng(50);
  std::uniform_int_distribution<Index> pick_n(3, 300);
  std::size_t identity = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = pick_n(rng);
    const Index t = std::uniform_int_distribution<Index>(1, (n - 1) / 2)(rng);
    const auto params = make_params(n, t);
    const auto cert =
        params.odd()
            ? make_certificate(hamilton_cycle(n, t), Construction::OddPqrs,
                               canonical_a_sequence(params))
            : make_certificate(hamilton_cycle(n, t), Construction::EvenLadder);
    const auto text = encode_certificate(cert);
    const auto decoded = decode_certificate(text);
    if (decoded == cert && encode_certificate(decoded) == text) ++identity;
  }
  return {cli_same && identity == 50,
          std::string("cli output ") + (cli_same ? "identical" : "DIFFERS") + ", " +
              std::to_string(identity) + "/50 round-trips exact"};
}

// DP(5,2): 20-vertex cycle from both the construction and the search.
Outcome petersen_contrast() {
  const DpGraph g(make_params(5, 2));
  const auto built = hamilton_cycle(5, 2);
  const auto found = brute_force_hamilton(g);
  const bool built_ok = built.size() == 20 && verify_hamilton(g, built).ok() &&
                        ref::definition_accepts(5, 2, built.vertices());
  const bool found_ok = found && found->size() == 20 && verify_hamilton(g, *found).ok();
  return {built_ok && found_ok, std::string("construction ") + (built_ok ? "ok" : "FAILED") +
                                    ", oracle " + (found_ok ? "ok" : "FAILED")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"small range n<=31", small_range},
      {"extended sweep n<=1000", extended_sweep},
      {"oracle agreement 4n<=48", oracle_agreement},
      {"proof partition suite", partition_suite},
      {"structural invariants n<=200", structural_invariants},
      {"determinism and round-trip", determinism},
      {"DP(5,2) contrast instance", petersen_contrast},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome{false, "threw"};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail
              << std::endl;
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
