#include "shiftmc/lowdisc.hpp"

#include <algorithm>
#include <string>

#include "shiftmc/errors.hpp"

namespace shiftmc {

double radical_inverse(std::uint64_t k, int base) {
  if (base < 2) throw ContractViolation("radical_inverse: base must be >= 2");
  const auto b = static_cast<std::uint64_t>(base);
  double inv = 0.0;
  double digit_weight = 1.0 / static_cast<double>(base);
  while (k != 0) {
    inv += static_cast<double>(k % b) * digit_weight;
    k /= b;
    digit_weight /= static_cast<double>(base);
  }
  return inv;
}

HaltonSequence::HaltonSequence(int dim, std::uint64_t start_index)
    : dim_(dim), start_index_(start_index) {
  if (dim < 1 || dim > static_cast<int>(kBases.size())) {
    throw ContractViolation("HaltonSequence: dimension must be in 1.." +
                            std::to_string(kBases.size()));
  }
  if (start_index < 1) {
    throw ContractViolation("HaltonSequence: start index must be >= 1");
  }
}

void HaltonSequence::point(std::uint64_t k, std::span<double> out) const {
  if (k < start_index_) {
    throw ContractViolation("HaltonSequence::point: index below start index");
  }
  if (out.size() != static_cast<std::size_t>(dim_)) {
    throw ContractViolation("HaltonSequence::point: output span has wrong dimension");
  }
  for (int j = 0; j < dim_; ++j) {
    out[static_cast<std::size_t>(j)] = radical_inverse(k, kBases[static_cast<std::size_t>(j)]);
  }
}

DiscrepancyReport star_discrepancy_1d(std::span<const double> points) {
  if (points.empty()) {
    throw ContractViolation("star_discrepancy_1d: empty point set");
  }
  std::vector<double> sorted(points.begin(), points.end());
  for (double x : sorted) {
    if (!(x >= 0.0 && x < 1.0)) {
      throw ContractViolation("star_discrepancy_1d: point outside [0,1)");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  const double nd = static_cast<double>(n);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double anchor = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * nd);
    max_dev = std::max(max_dev, std::abs(sorted[i] - anchor));
  }
  DiscrepancyReport report;
  report.n = n;
  report.d_star = 1.0 / (2.0 * nd) + max_dev;
  report.bound_holds = report.d_star >= 1.0 / (2.0 * nd) && report.d_star <= 1.0;
  return report;
}

double koksma_hlawka_bound(double variation, double d_star) {
  if (variation < 0.0 || d_star < 0.0) {
    throw ContractViolation("koksma_hlawka_bound: arguments must be nonnegative");
  }
  return variation * d_star;
}

}  // namespace shiftmc
