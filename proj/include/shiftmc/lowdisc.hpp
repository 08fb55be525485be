#ifndef SHIFTMC_LOWDISC_HPP
#define SHIFTMC_LOWDISC_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace shiftmc {

/// Digit reversal of k in base b: k = sum a_j b^j  ->  sum a_j b^(-j-1).
double radical_inverse(std::uint64_t k, int base);

/// Halton nodes over the first d primes, d <= 8. Indexing starts at
/// start_index (default 1, skipping the all-zeros point). Dimension 1 is the
/// van der Corput sequence in base 2.
class HaltonSequence {
 public:
  static constexpr std::array<int, 8> kBases{2, 3, 5, 7, 11, 13, 17, 19};

  explicit HaltonSequence(int dim, std::uint64_t start_index = 1);

  int dimension() const noexcept { return dim_; }
  std::uint64_t start_index() const noexcept { return start_index_; }

  /// Fills out[j] = radical_inverse(k, j-th prime). Requires k >= start_index
  /// and out.size() == dimension().
  void point(std::uint64_t k, std::span<double> out) const;

 private:
  int dim_;
  std::uint64_t start_index_;
};

struct DiscrepancyReport {
  std::size_t n = 0;
  double d_star = 0.0;
  /// Internal certificate: d_star lies in its theoretical range [1/(2n), 1].
  bool bound_holds = false;
};

/// Exact one-dimensional star discrepancy,
/// D* = 1/(2n) + max_i |x_(i) - (2i-1)/(2n)|. Points must lie in [0,1).
DiscrepancyReport star_discrepancy_1d(std::span<const double> points);

/// Certified error bound |QMC estimate - integral| <= variation * d_star for
/// functions of bounded (Hardy-Krause) variation.
double koksma_hlawka_bound(double variation, double d_star);

}  // namespace shiftmc

#endif  // SHIFTMC_LOWDISC_HPP
