#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dpham/dpham.hpp"

namespace dpham::cli {

namespace {

unsigned default_jobs() {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("DPHAM_JOBS")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && value > 0) {
      jobs = std::min(jobs, static_cast<unsigned>(value));
    }
  }
  return jobs;
}

struct CycleOptions {
  Index n = 0;
  Index t = 0;
  std::string format = "list";
  std::vector<Index> a;
};

int cmd_cycle(const CycleOptions& opt, std::ostream& out) {
  const DpGraph g(make_params(opt.n, opt.t));
  std::optional<ASequence> a;
  Construction construction = Construction::EvenLadder;
  std::optional<HamiltonCycle> cycle;
  if (g.params().odd()) {
    a = opt.a.empty() ? canonical_a_sequence(g.params())
                      : validate_a_sequence(g.params(), opt.a);
    construction = Construction::OddPqrs;
    cycle = odd_hamilton(g, *a);
  } else {
    if (!opt.a.empty()) {
      throw ASequenceError(ASequenceFault::WrongLength,
                           "an a-sequence applies only to odd n");
    }
    cycle = even_hamilton(g);
  }

  if (opt.format == "list") {
    const auto& vs = cycle->vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << label(vs[i]);
    out << '\n';
  } else if (opt.format == "cert") {
    out << encode_certificate(make_certificate(*cycle, construction, a));
  } else {
    out << encode_dot(g, cycle);
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto cert = decode_certificate(buffer.str());
    out << "ok: DP(" << cert.n << "," << cert.t << ") Hamilton cycle of "
        << cert.cycle.size() << " vertices (" << construction_name(cert.construction)
        << ")\n";
    return kOk;
  } catch (const CertificateSyntaxError& e) {
    err << "error: malformed certificate: " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateVerificationError& e) {
    out << "FAILED\n" << e.report().summary();
    return kVerificationFailed;
  }
}

struct SweepOptions {
  Index n_min = 3;
  Index n_max = 31;
  std::vector<Index> t_values;
  unsigned jobs = 0;
  bool oracle = false;
  Index oracle_max_vertices = SearchBudget{}.max_vertices;
  std::uint64_t oracle_max_steps = SearchBudget{}.max_steps;
  bool quiet = false;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.n_min = opt.n_min;
  spec.n_max = opt.n_max;
  spec.t_values = opt.t_values;
  spec.jobs = opt.jobs ? opt.jobs : default_jobs();
  if (opt.oracle) spec.oracle = SearchBudget{opt.oracle_max_vertices, opt.oracle_max_steps};
  try {
    validate_sweep(spec);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto summary = run_sweep(spec);

  if (!opt.quiet) {
    struct Row {
      std::size_t pairs = 0, passed = 0, oracle_found = 0, oracle_other = 0;
    };
    std::map<Index, Row> rows;
    for (const auto& r : summary.results) {
      auto& row = rows[r.n];
      ++row.pairs;
      row.passed += r.passed() ? 1 : 0;
      if (r.oracle == OracleStatus::Found) ++row.oracle_found;
      else if (r.oracle != OracleStatus::NotRun) ++row.oracle_other;
    }
    out << std::setw(6) << "n" << std::setw(8) << "pairs" << std::setw(8) << "passed"
        << std::setw(8) << "failed";
    if (opt.oracle) out << std::setw(8) << "oracle" << std::setw(9) << "skipped";
    out << '\n';
    for (const auto& [n, row] : rows) {
      out << std::setw(6) << n << std::setw(8) << row.pairs << std::setw(8)
          << row.passed << std::setw(8) << row.pairs - row.passed;
      if (opt.oracle) out << std::setw(8) << row.oracle_found << std::setw(9) << row.oracle_other;
      out << '\n';
    }
  }

  for (const auto& r : summary.results) {
    if (r.oracle == OracleStatus::BudgetExhausted) {
      out << "oracle budget exhausted: DP(" << r.n << "," << r.t << ")\n";
    }
    if (!r.passed()) {
      out << "FAIL DP(" << r.n << "," << r.t << "): " << r.finding << '\n';
    }
  }
  out << "total " << summary.results.size() << " passed " << summary.passed()
      << " failed " << summary.failed();
  if (opt.oracle) {
    out << " oracle-found " << summary.oracle_count(OracleStatus::Found)
        << " oracle-budget " << summary.oracle_count(OracleStatus::BudgetExhausted)
        << " oracle-skipped " << summary.oracle_count(OracleStatus::TooLarge);
  }
  out << '\n';
  return summary.all_passed() ? kOk : kVerificationFailed;
}

int cmd_export(Index n, Index t, const std::string& format, std::ostream& out) {
  const DpGraph g(make_params(n, t));
  out << (format == "edges" ? encode_edge_list(g) : encode_dot(g));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton cycles in double generalized Petersen graphs DP(n,t)", "dpham"};
  app.require_subcommand(1);

  CycleOptions cycle_opt;
  auto* cycle = app.add_subcommand("cycle", "Construct a Hamilton cycle of DP(n,t)");
  cycle->add_option("n", cycle_opt.n, "Rim length")->required();
  cycle->add_option("t", cycle_opt.t, "Spoke skip, 1 <= t < n/2")->required();
  cycle->add_option("--format", cycle_opt.format, "list, cert or dot")
      ->check(CLI::IsMember({"list", "cert", "dot"}));
  cycle->add_option("--a", cycle_opt.a, "Comma-separated a-sequence (odd n)")
      ->delimiter(',');

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Verify a cycle certificate file");
  verify->add_option("certificate", cert_path, "Certificate file")->required();

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Construct and verify every DP(n,t) in a range");
  sweep->add_option("--n-min", sweep_opt.n_min, "Smallest n")->capture_default_str();
  sweep->add_option("--n-max", sweep_opt.n_max, "Largest n")->capture_default_str();
  sweep->add_option("--t", sweep_opt.t_values, "Comma-separated t values (default: all)")
      ->delimiter(',');
  sweep->add_option("--jobs", sweep_opt.jobs, "Worker threads (default: all cores, capped by DPHAM_JOBS)");
  sweep->add_flag("--oracle", sweep_opt.oracle, "Also run the brute-force search");
  sweep->add_option("--oracle-max-vertices", sweep_opt.oracle_max_vertices,
                   "Skip the search above this many vertices")
      ->capture_default_str();
  sweep->add_option("--oracle-max-steps", sweep_opt.oracle_max_steps, "Search step budget per pair")
      ->capture_default_str();
  sweep->add_flag("--quiet", sweep_opt.quiet, "Only print failures and the total line");

  Index export_n = 0, export_t = 0;
  std::string export_format = "edges";
  auto* exp = app.add_subcommand("export", "Write DP(n,t) as an edge list or DOT");
  exp->add_option("n", export_n, "Rim length")->required();
  exp->add_option("t", export_t, "Spoke skip")->required();
  exp->add_option("--format", export_format, "edges or dot")
      ->check(CLI::IsMember({"edges", "dot"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cycle) return cmd_cycle(cycle_opt, out);
    if (*verify) return cmd_verify(cert_path, out, err);
    if (*sweep) return cmd_sweep(sweep_opt, out, err);
    return cmd_export(export_n, export_t, export_format, out);
  } catch (const ParamError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ASequenceError& e) {
    err << "error: invalid a-sequence: " << e.what() << '\n';
    return kBadASequence;
  } catch (const IntegrityError& e) {
    err << "internal error: " << e.what() << '\n';
    return kIntegrity;
  }
}

}  // namespace dpham::cli
