// shiftmc: command-line front end for the shift/MC/QMC estimation toolkit.
//
// Subcommands: rng-test, transport, table, markov-ruin, integrate.
// Exit codes: 0 success, 1 usage error, 2 runtime error, 3 truncation count
// above --truncation-limit.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftmc/errors.hpp"
#include "shiftmc/harness.hpp"
#include "shiftmc/report_io.hpp"
#include "shiftmc/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitTruncation = 3;

struct CommonOpts {
  std::uint64_t seed = 42;
  std::uint64_t samples = 500'000;
  std::string method = "shift";
  std::string memo = "on";
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_method_qmc) {
  cmd->add_option("--seed", opts.seed, "tape seed");
  cmd->add_option("--samples,-n", opts.samples, "sample count")->check(CLI::PositiveNumber);
  std::vector<std::string> methods = {"mc", "shift"};
  if (with_method_qmc) methods.push_back("qmc");
  cmd->add_option("--method", opts.method, "estimation method")
      ->check(CLI::IsMember(methods));
  cmd->add_option("--memo", opts.memo, "per-cell memoization")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void emit(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

shiftmc::CoordinatePermutation parse_perm(const std::string& text) {
  shiftmc::CoordinatePermutation perm;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    perm.sigma.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return perm;
}

int check_truncation(std::uint64_t truncated, long long limit) {
  if (limit >= 0 && truncated > static_cast<std::uint64_t>(limit)) {
    std::fprintf(stderr, "truncated trees (%llu) exceed --truncation-limit (%lld)\n",
                 static_cast<unsigned long long>(truncated), limit);
    return kExitTruncation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shift-method simulation toolkit"};
  app.require_subcommand(1);

  // rng-test
  std::uint64_t rng_seed = 42;
  std::uint64_t rng_count = 16;
  CLI::App* rng_cmd =
      app.add_subcommand("rng-test", "print the first K uniforms of a seed, one per line");
  rng_cmd->add_option("--seed", rng_seed, "generator seed");
  rng_cmd->add_option("--count,-k", rng_count, "number of uniforms")->check(CLI::PositiveNumber);

  // transport
  CommonOpts transport_opts;
  double transport_lambda = 0.0;
  int transport_max_depth = 64;
  std::uint64_t transport_max_particles = 1'000'000;
  long long transport_trunc_limit = -1;
  CLI::App* transport_cmd =
      app.add_subcommand("transport", "branching-particle benchmark, one estimator run");
  transport_cmd->add_option("--lambda", transport_lambda, "mean free-path length")
      ->required()
      ->check(CLI::PositiveNumber);
  transport_cmd->add_option("--max-depth", transport_max_depth, "split-tree depth cap")
      ->check(CLI::PositiveNumber);
  transport_cmd->add_option("--max-particles", transport_max_particles, "particle cap")
      ->check(CLI::PositiveNumber);
  transport_cmd->add_option("--truncation-limit", transport_trunc_limit,
                            "exit 3 when more trees were truncated (-1: disabled)");
  add_common(transport_cmd, transport_opts, /*with_method_qmc=*/false);

  // table
  CommonOpts table_opts;
  std::vector<double> table_lambdas;
  long long table_trunc_limit = -1;
  CLI::App* table_cmd =
      app.add_subcommand("table", "MC vs shift comparison over a lambda grid");
  table_cmd
      ->add_option("--lambda", table_lambdas,
                   "lambda grid (repeatable; default 0.98 0.96 0.94 0.92 0.90)")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--truncation-limit", table_trunc_limit,
                        "exit 3 when more trees were truncated (-1: disabled)");
  add_common(table_cmd, table_opts, /*with_method_qmc=*/false);

  // markov-ruin
  CommonOpts ruin_opts;
  int ruin_states = 4;
  int ruin_start = 2;
  double ruin_p_up = 0.5;
  std::string ruin_payoff = "duration";
  CLI::App* ruin_cmd =
      app.add_subcommand("markov-ruin", "gambler's-ruin hitting-time fixture");
  ruin_cmd->add_option("--states,-N", ruin_states, "absorbing top state N")
      ->check(CLI::Range(2, 1 << 20));
  ruin_cmd->add_option("--start", ruin_start, "initial state in 1..N-1")
      ->check(CLI::PositiveNumber);
  ruin_cmd->add_option("--p-up", ruin_p_up, "probability of a +1 step")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  ruin_cmd->add_option("--payoff", ruin_payoff, "payoff functional")
      ->check(CLI::IsMember({"duration", "hit-top"}));
  add_common(ruin_cmd, ruin_opts, /*with_method_qmc=*/false);

  // integrate
  CommonOpts integrate_opts;
  std::string integrate_function = "linear1";
  std::string integrate_perm;
  CLI::App* integrate_cmd =
      app.add_subcommand("integrate", "integrate a registered function over [0,1]^d");
  integrate_cmd
      ->add_option("--function,-f", integrate_function, "registered integrand name")
      ->check(CLI::IsMember(shiftmc::integrand_names()));
  integrate_cmd->add_option("--perm", integrate_perm,
                            "coordinate permutation, comma-separated 1-based images");
  add_common(integrate_cmd, integrate_opts, /*with_method_qmc=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rng_cmd->parsed()) {
      shiftmc::GeneratorState state = shiftmc::seed_generator(rng_seed);
      std::string out;
      for (std::uint64_t i = 0; i < rng_count; ++i) {
        const shiftmc::UniformDraw draw = shiftmc::next_uniform(state);
        state = draw.next;
        out += shiftmc::format_g17(draw.value) + "\n";
      }
      emit(out);
      return kExitOk;
    }

    if (transport_cmd->parsed()) {
      shiftmc::TransportRunConfig cfg;
      cfg.lambda = transport_lambda;
      cfg.method = transport_opts.method;
      cfg.n = transport_opts.samples;
      cfg.seed = transport_opts.seed;
      cfg.memo = transport_opts.memo == "on";
      cfg.max_depth = transport_max_depth;
      cfg.max_particles = transport_max_particles;
      const shiftmc::EstimatorReport report = shiftmc::run_transport(cfg);
      emit(transport_opts.format == "json" ? shiftmc::report_to_json(report, true)
                                           : shiftmc::report_to_csv(report, true));
      return check_truncation(report.truncated_count, transport_trunc_limit);
    }

    if (table_cmd->parsed()) {
      if (table_lambdas.empty()) table_lambdas = {0.98, 0.96, 0.94, 0.92, 0.90};
      const shiftmc::TableResult table = shiftmc::run_table(
          table_lambdas, table_opts.samples, table_opts.seed, table_opts.memo == "on");
      emit(table_opts.format == "json" ? shiftmc::table_to_json(table)
                                       : shiftmc::table_to_csv(table));
      std::uint64_t truncated = 0;
      for (const shiftmc::TableCell& cell : table.cells) {
        truncated += cell.mc.truncated_count + cell.shift.truncated_count;
      }
      return check_truncation(truncated, table_trunc_limit);
    }

    if (ruin_cmd->parsed()) {
      if (ruin_start >= ruin_states) {
        std::fprintf(stderr, "--start must be in 1..N-1\n");
        return kExitUsage;
      }
      shiftmc::RuinRunConfig cfg;
      cfg.n_states = ruin_states;
      cfg.start = ruin_start;
      cfg.p_up = ruin_p_up;
      cfg.payoff = ruin_payoff == "duration" ? shiftmc::RuinPayoff::kDuration
                                             : shiftmc::RuinPayoff::kHitTop;
      cfg.method = ruin_opts.method;
      cfg.n = ruin_opts.samples;
      cfg.seed = ruin_opts.seed;
      const shiftmc::EstimatorReport report = shiftmc::run_ruin(cfg);
      emit(ruin_opts.format == "json" ? shiftmc::report_to_json(report, false)
                                      : shiftmc::report_to_csv(report, false));
      return kExitOk;
    }

    if (integrate_cmd->parsed()) {
      shiftmc::IntegrateRunConfig cfg;
      cfg.function_name = integrate_function;
      cfg.method = integrate_opts.method;
      cfg.n = integrate_opts.samples;
      cfg.seed = integrate_opts.seed;
      cfg.memo = integrate_opts.memo == "on";
      if (!integrate_perm.empty()) {
        try {
          cfg.perm = parse_perm(integrate_perm);
        } catch (const std::exception&) {
          std::fprintf(stderr, "--perm must be a comma-separated list of integers\n");
          return kExitUsage;
        }
        if (!cfg.perm->valid()) {
          std::fprintf(stderr, "--perm is not a permutation of {1..d}\n");
          return kExitUsage;
        }
      }
      const shiftmc::IntegrateResult result = shiftmc::run_integrate(cfg);
      emit(integrate_opts.format == "json" ? shiftmc::integrate_to_json(result)
                                           : shiftmc::integrate_to_csv(result));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
