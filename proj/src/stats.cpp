#include "shiftmc/stats.hpp"

#include <cmath>
#include <string>

#include "shiftmc/errors.hpp"

namespace shiftmc {

double RunningStats::variance() const noexcept {
  if (count < 2) return 0.0;
  return m2 / static_cast<double>(count - 1);
}

double RunningStats::stddev() const noexcept { return std::sqrt(variance()); }

double RunningStats::std_error() const noexcept {
  if (count == 0) return 0.0;
  return stddev() / std::sqrt(static_cast<double>(count));
}

double lil_band(const RunningStats& stats, std::uint64_t n) {
  if (n < 3) {
    throw ContractViolation("lil_band: undefined for n < 3 (got " + std::to_string(n) + ")");
  }
  const double nd = static_cast<double>(n);
  return stats.stddev() * std::sqrt(2.0 * nd * std::log(std::log(nd))) / nd;
}

double batch_means_variance(std::span<const double> values, std::size_t batch_size) {
  if (batch_size < 2) {
    throw ContractViolation("batch_means_variance: batch size must be >= 2");
  }
  if (values.size() < 2 * batch_size) {
    throw ContractViolation("batch_means_variance: stream shorter than two batches");
  }
  const std::size_t n_batches = values.size() / batch_size;
  RunningStats batch_stats;
  for (std::size_t b = 0; b < n_batches; ++b) {
    double sum = 0.0;
    for (std::size_t j = 0; j < batch_size; ++j) sum += values[b * batch_size + j];
    batch_stats.update(sum / static_cast<double>(batch_size));
  }
  return static_cast<double>(batch_size) * batch_stats.variance();
}

double batch_means_variance(std::span<const double> values) {
  const auto b = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(values.size()))));
  return batch_means_variance(values, b < 2 ? 2 : b);
}

}  // namespace shiftmc
