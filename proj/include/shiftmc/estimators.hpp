#ifndef SHIFTMC_ESTIMATORS_HPP
#define SHIFTMC_ESTIMATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftmc/stats.hpp"
#include "shiftmc/tape.hpp"

namespace shiftmc {

class HaltonSequence;

/// A functional that reads a finite (possibly random-length) prefix of
/// uniforms from a cursor and fills one value per payoff name. Evaluation
/// must be deterministic given the cell values it reads, and must read only
/// at indices [cursor.start, cursor.start + consumed).
struct ConsumptionModel {
  std::vector<std::string> payoff_names;
  /// Present only when every evaluation consumes exactly this many cells.
  std::optional<int> fixed_dim;
  std::function<void(TapeCursor&, std::span<double>)> evaluate;
};

struct PayoffEstimate {
  std::string name;
  double mean = 0.0;
  std::optional<double> std_error;  // absent for deterministic (qmc) runs
};

struct EstimatorReport {
  std::string method;  // "mc", "shift" or "qmc"
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 0;
  std::vector<std::pair<std::string, std::string>> params;  // echo, values as JSON text
  std::vector<PayoffEstimate> estimates;
  std::vector<RunningStats> payoff_stats;
  std::uint64_t rng_calls = 0;      // newly materialized tape cells
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t truncated_count = 0;  // transport runs only
  double elapsed_ms = 0.0;

  double calls_per_sample() const noexcept {
    return n_samples == 0 ? 0.0
                          : static_cast<double>(rng_calls) / static_cast<double>(n_samples);
  }
  double cache_hit_rate() const noexcept {
    const std::uint64_t total = cache_hits + cache_misses;
    return total == 0 ? 0.0 : static_cast<double>(cache_hits) / static_cast<double>(total);
  }
};

/// Optional per-sample recording, one stream per payoff.
struct SampleLog {
  std::vector<std::vector<double>> per_payoff;
};

/// Independent replications: sample k starts one past the last cell consumed
/// by sample k-1, and the window advances past each consumed segment.
EstimatorReport mc_estimate(const ConsumptionModel& model, std::uint64_t n, Tape& tape,
                            SampleLog* log = nullptr);

/// Ergodic averaging along the shift orbit: sample k starts at window_start+k,
/// reusing overlapping cells and their memos; the window advances one cell per
/// sample.
EstimatorReport shift_estimate(const ConsumptionModel& model, std::uint64_t n, Tape& tape,
                               SampleLog* log = nullptr);

/// Deterministic average of f over the first n nodes of a low-discrepancy
/// sequence. No tape, no standard error.
EstimatorReport qmc_estimate(const std::function<double(std::span<const double>)>& f, int dim,
                             std::uint64_t n, const HaltonSequence& seq);

struct CoordinatePermutation {
  std::vector<int> sigma;  // 1-based images: sigma[j-1] = sigma(j)

  static CoordinatePermutation identity(int dim);
  bool valid() const;
  int dim() const noexcept { return static_cast<int>(sigma.size()); }
};

/// f_sigma(x_1..x_d) = f(x_sigma(1), ..., x_sigma(d)).
std::function<double(std::span<const double>)> permuted(
    std::function<double(std::span<const double>)> f, CoordinatePermutation sigma);

/// Wraps a function on [0,1]^d as a fixed-dimension consumption model reading
/// exactly d cells per sample.
ConsumptionModel function_model(std::function<double(std::span<const double>)> f, int dim,
                                std::string payoff_name = "value");

}  // namespace shiftmc

#endif  // SHIFTMC_ESTIMATORS_HPP
