#ifndef SHIFTMC_STATS_HPP
#define SHIFTMC_STATS_HPP

#include <cstdint>
#include <span>

namespace shiftmc {

/// One-pass (Welford) mean and sum of squared deviations.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void update(double x) noexcept {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  /// Sample variance m2/(count-1); 0 when fewer than two observations.
  double variance() const noexcept;
  double stddev() const noexcept;
  /// stddev()/sqrt(count); the i.i.d. standard error of the mean.
  double std_error() const noexcept;
};

/// Asymptotic half-width of the iterated-logarithm envelope of an empirical
/// mean: sigma-hat * sqrt(2 n ln ln n) / n, natural logs. Requires n >= 3.
double lil_band(const RunningStats& stats, std::uint64_t n);

/// Batch-means proxy for the asymptotic variance of a correlated stream:
/// b times the sample variance of the floor(len/b) consecutive batch means.
/// Requires batch_size >= 2 and len >= 2*batch_size.
double batch_means_variance(std::span<const double> values, std::size_t batch_size);

/// Same with the default batch size ceil(sqrt(len)).
double batch_means_variance(std::span<const double> values);

}  // namespace shiftmc

#endif  // SHIFTMC_STATS_HPP
