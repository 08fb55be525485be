#ifndef SHIFTMC_HARNESS_HPP
#define SHIFTMC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftmc/estimators.hpp"
#include "shiftmc/markov.hpp"
#include "shiftmc/transport.hpp"

namespace shiftmc {

// Experiment runners shared by the CLI, the acceptance suite and the python
// bindings. Each run builds a fresh tape from its seed, so every report is
// independently reproducible.

struct TransportRunConfig {
  double lambda = 0.98;
  std::string method = "shift";  // "mc" or "shift"
  std::uint64_t n = 500'000;
  std::uint64_t seed = 42;
  bool memo = true;
  int max_depth = 64;
  std::uint64_t max_particles = 1'000'000;
};

EstimatorReport run_transport(const TransportRunConfig& cfg, SampleLog* log = nullptr);

struct TableCell {
  double lambda = 0.0;
  EstimatorReport mc;
  EstimatorReport shift;
  double duration_ratio_mc_over_shift = 0.0;
};

struct TableResult {
  std::uint64_t n_samples = 0;
  std::uint64_t base_seed = 0;
  std::vector<TableCell> cells;  // ordered by lambda descending
};

/// Runs MC and shift at the same n for every lambda. Per-cell tape seeds are
/// base_seed + 2i (MC) and base_seed + 2i + 1 (shift), i the cell index.
TableResult run_table(std::span<const double> lambdas, std::uint64_t n, std::uint64_t seed,
                      bool memo);

struct RuinRunConfig {
  int n_states = 4;
  int start = 2;
  double p_up = 0.5;
  RuinPayoff payoff = RuinPayoff::kDuration;
  std::string method = "shift";
  std::uint64_t n = 500'000;
  std::uint64_t seed = 42;
  std::uint64_t cap = 10'000'000;
};

EstimatorReport run_ruin(const RuinRunConfig& cfg);

/// A registered integrand with the metadata the integrate command needs.
struct Integrand {
  std::string name;
  int dim = 1;
  std::function<double(std::span<const double>)> fn;
  std::optional<double> analytic;      // known integral, informational
  std::optional<double> variation_1d;  // total variation, d = 1 only
};

const Integrand* find_integrand(std::string_view name);
std::vector<std::string> integrand_names();

struct IntegrateRunConfig {
  std::string function_name = "linear1";
  std::string method = "shift";  // "mc", "shift" or "qmc"
  std::uint64_t n = 500'000;
  std::uint64_t seed = 42;
  bool memo = true;
  std::optional<CoordinatePermutation> perm;
};

struct IntegrateResult {
  EstimatorReport report;
  std::optional<double> d_star;    // qmc, d = 1
  std::optional<double> kh_bound;  // qmc, d = 1 with registered variation
  std::optional<double> lil;       // mc/shift with n >= 3
};

IntegrateResult run_integrate(const IntegrateRunConfig& cfg);

}  // namespace shiftmc

#endif  // SHIFTMC_HARNESS_HPP
