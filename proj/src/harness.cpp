#include "shiftmc/harness.hpp"

#include <algorithm>
#include <cmath>

#include "shiftmc/errors.hpp"
#include "shiftmc/lowdisc.hpp"
#include "shiftmc/report_io.hpp"

namespace shiftmc {

namespace {

EstimatorReport dispatch(const std::string& method, const ConsumptionModel& model,
                         std::uint64_t n, Tape& tape, SampleLog* log) {
  if (method == "mc") return mc_estimate(model, n, tape, log);
  if (method == "shift") return shift_estimate(model, n, tape, log);
  throw ContractViolation("unknown tape method '" + method + "' (expected mc or shift)");
}

}  // namespace

EstimatorReport run_transport(const TransportRunConfig& cfg, SampleLog* log) {
  TransportParams params{cfg.lambda, cfg.max_depth, cfg.max_particles};
  Tape tape(cfg.seed);
  tape.set_memo_enabled(cfg.memo);
  auto truncated = std::make_shared<std::uint64_t>(0);
  const ConsumptionModel model = transport_model(params, truncated);
  EstimatorReport report = dispatch(cfg.method, model, cfg.n, tape, log);
  report.truncated_count = *truncated;
  report.params = {
      {"lambda", format_g17(cfg.lambda)},
      {"memo", cfg.memo ? "true" : "false"},
      {"max_depth", std::to_string(cfg.max_depth)},
      {"max_particles", std::to_string(cfg.max_particles)},
      {"call_convention", "\"new_tape_cells\""},
  };
  return report;
}

TableResult run_table(std::span<const double> lambdas, std::uint64_t n, std::uint64_t seed,
                      bool memo) {
  if (lambdas.empty()) throw ContractViolation("run_table: need at least one lambda");
  std::vector<double> grid(lambdas.begin(), lambdas.end());
  std::sort(grid.begin(), grid.end(), std::greater<>());

  TableResult table;
  table.n_samples = n;
  table.base_seed = seed;
  table.cells.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    TransportRunConfig cell_cfg;
    cell_cfg.lambda = grid[i];
    cell_cfg.n = n;
    cell_cfg.memo = memo;

    cell_cfg.method = "mc";
    cell_cfg.seed = seed + 2 * i;
    EstimatorReport mc = run_transport(cell_cfg);

    cell_cfg.method = "shift";
    cell_cfg.seed = seed + 2 * i + 1;
    EstimatorReport shift = run_transport(cell_cfg);

    const double ratio = shift.elapsed_ms > 0.0 ? mc.elapsed_ms / shift.elapsed_ms : 0.0;
    table.cells.push_back(TableCell{grid[i], std::move(mc), std::move(shift), ratio});
  }
  return table;
}

EstimatorReport run_ruin(const RuinRunConfig& cfg) {
  auto [model, spec] = gamblers_ruin(cfg.n_states, cfg.start, cfg.p_up, cfg.payoff);
  spec.cap = cfg.cap;
  const bool duration = cfg.payoff == RuinPayoff::kDuration;
  const ConsumptionModel cm =
      chain_consumption_model(std::move(model), std::move(spec), duration ? "duration" : "hit_top");
  Tape tape(cfg.seed);
  EstimatorReport report = dispatch(cfg.method, cm, cfg.n, tape, nullptr);
  report.params = {
      {"n_states", std::to_string(cfg.n_states)},
      {"start", std::to_string(cfg.start)},
      {"p_up", format_g17(cfg.p_up)},
      {"payoff", duration ? "\"duration\"" : "\"hit_top\""},
      {"cap", std::to_string(cfg.cap)},
  };
  return report;
}

namespace {

const std::vector<Integrand>& integrand_registry() {
  static const std::vector<Integrand> registry = [] {
    std::vector<Integrand> r;
    r.push_back({"const1", 1, [](std::span<const double>) { return 1.0; }, 1.0, 0.0});
    r.push_back({"linear1", 1, [](std::span<const double> x) { return x[0]; }, 0.5, 1.0});
    r.push_back({"square", 1, [](std::span<const double> x) { return x[0] * x[0]; },
                 1.0 / 3.0, 1.0});
    r.push_back({"cube", 1, [](std::span<const double> x) { return x[0] * x[0] * x[0]; },
                 0.25, 1.0});
    r.push_back({"linear3", 3,
                 [](std::span<const double> x) { return x[0] + 2.0 * x[1] + 3.0 * x[2]; }, 3.0,
                 std::nullopt});
    r.push_back({"prod2", 2, [](std::span<const double> x) { return x[0] * x[1]; }, 0.25,
                 std::nullopt});
    return r;
  }();
  return registry;
}

}  // namespace

const Integrand* find_integrand(std::string_view name) {
  for (const Integrand& f : integrand_registry()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::vector<std::string> integrand_names() {
  std::vector<std::string> names;
  for (const Integrand& f : integrand_registry()) names.push_back(f.name);
  return names;
}

IntegrateResult run_integrate(const IntegrateRunConfig& cfg) {
  const Integrand* f = find_integrand(cfg.function_name);
  if (f == nullptr) {
    throw ContractViolation("unknown integrand '" + cfg.function_name + "'");
  }
  if (cfg.perm && cfg.perm->dim() != f->dim) {
    throw ContractViolation("permutation length does not match integrand dimension");
  }

  auto fn = cfg.perm ? permuted(f->fn, *cfg.perm) : f->fn;
  IntegrateResult result;

  if (cfg.method == "qmc") {
    const HaltonSequence seq(f->dim);
    result.report = qmc_estimate(fn, f->dim, cfg.n, seq);
    if (f->dim == 1) {
      std::vector<double> nodes(cfg.n);
      for (std::uint64_t k = 0; k < cfg.n; ++k) {
        nodes[k] = radical_inverse(seq.start_index() + k, HaltonSequence::kBases[0]);
      }
      const DiscrepancyReport disc = star_discrepancy_1d(nodes);
      result.d_star = disc.d_star;
      if (f->variation_1d) {
        result.kh_bound = koksma_hlawka_bound(*f->variation_1d, disc.d_star);
      }
    }
  } else {
    Tape tape(cfg.seed);
    tape.set_memo_enabled(cfg.memo);
    const ConsumptionModel model = function_model(fn, f->dim);
    result.report = dispatch(cfg.method, model, cfg.n, tape, nullptr);
    if (cfg.n >= 3) result.lil = lil_band(result.report.payoff_stats[0], cfg.n);
  }

  result.report.params = {
      {"function", "\"" + f->name + "\""},
      {"dim", std::to_string(f->dim)},
  };
  if (cfg.perm) {
    std::string sigma = "[";
    for (std::size_t j = 0; j < cfg.perm->sigma.size(); ++j) {
      if (j > 0) sigma += ",";
      sigma += std::to_string(cfg.perm->sigma[j]);
    }
    sigma += "]";
    result.report.params.emplace_back("perm", sigma);
  }
  if (cfg.method != "qmc") {
    result.report.params.emplace_back("memo", cfg.memo ? "true" : "false");
  }
  return result;
}

}  // namespace shiftmc
