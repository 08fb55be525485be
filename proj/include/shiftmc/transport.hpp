#ifndef SHIFTMC_TRANSPORT_HPP
#define SHIFTMC_TRANSPORT_HPP

#include <cstdint>
#include <memory>

#include "shiftmc/estimators.hpp"
#include "shiftmc/tape.hpp"

namespace shiftmc {

/// Branching particle in the square [0,1] x [-1/2, 1/2]: exponential free
/// paths with mean free-path length lambda, binary splits with two
/// independent offspring angles uniform on [-pi/2, pi/2] relative to the
/// parent direction.
struct TransportParams {
  double lambda = 0.98;               // mean free-path length, > 0
  int max_depth = 64;                 // split-tree depth cap
  std::uint64_t max_particles = 1'000'000;
};

struct TransportOutcome {
  std::uint64_t splittings = 0;
  std::uint64_t exits_right = 0;
  std::uint64_t exits_left = 0;
  std::uint64_t exits_top = 0;
  std::uint64_t exits_bottom = 0;
  std::uint64_t particles = 0;  // 2*splittings + 1 when not truncated
  std::uint64_t consumed = 0;   // particles + 2*splittings when not truncated
  int depth_reached = 0;
  bool truncated = false;
};

/// Memo transform ids used by the walk: id 1 caches -ln(1-u) (free path
/// before the lambda scaling), id 2 caches pi*(u - 1/2) (relative angle).
inline constexpr int kFreePathTransformId = 1;
inline constexpr int kAngleTransformId = 2;

/// One depth-first tree walk starting at (0,0) with direction +x. Per
/// particle: one cell for the free path; a particle exits when the boundary
/// is reached within its distance (corner ties resolve to the vertical
/// sides), otherwise it splits at the endpoint and both offspring angle cells
/// are consumed before either subtree is simulated, first-drawn child first.
/// Cap hits set truncated; a capped branch tallies nothing further.
TransportOutcome simulate_tree(const TransportParams& params, TapeCursor& cursor);

/// Vector-payoff model over simulate_tree with payoffs
/// ("splittings", "right_exits"), both tallied in a single walk.
/// truncated_trees, when given, is incremented once per truncated tree.
ConsumptionModel transport_model(const TransportParams& params,
                                 std::shared_ptr<std::uint64_t> truncated_trees = nullptr);

}  // namespace shiftmc

#endif  // SHIFTMC_TRANSPORT_HPP
