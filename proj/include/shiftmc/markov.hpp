#ifndef SHIFTMC_MARKOV_HPP
#define SHIFTMC_MARKOV_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftmc/estimators.hpp"
#include "shiftmc/tape.hpp"

namespace shiftmc {

/// A chain X_{n+1} = F(X_n, n, U_{n+1}) on a fixed-width real state vector.
/// The transition mutates the state in place and consumes one value per step:
/// the raw uniform, or - when memo_transform is declared - the transformed
/// value f(u) served through the tape's memo slot for transform_id.
struct ChainModel {
  std::vector<double> initial_state;
  std::function<void(std::span<double> state, std::uint64_t n, double r)> transition;

  struct MemoTransform {
    int transform_id;
    std::function<double(double)> map;
  };
  std::optional<MemoTransform> memo_transform;
};

/// Target set, payoff G(X_T, T) and the safety cap on steps.
struct HittingSpec {
  std::function<bool(std::span<const double>)> target;
  std::function<double(std::span<const double>, std::uint64_t)> payoff;
  std::uint64_t cap = 10'000'000;
};

struct ChainOutcome {
  double payoff = 0.0;
  std::uint64_t steps = 0;
  std::uint64_t consumed = 0;  // equals steps: one uniform per transition
  bool censored = false;       // cap reached before hitting the target
};

/// Iterates the chain until the first n > 0 with X_n in the target set,
/// reading one cell per step. At the cap the outcome is censored with payoff
/// G(X_cap, cap); censored outcomes are included, never discarded silently.
ChainOutcome run_chain(const ChainModel& model, const HittingSpec& spec, TapeCursor& cursor);

enum class RuinPayoff { kDuration, kHitTop };

/// Birth-death walk on {0..n_states} stepping +1 when u < p_up, with the
/// absorbing set {0, n_states}. Payoff is the absorption time T or the
/// hit-the-top indicator. E[T] = i(N-i) and P(top) = i/N at p = 1/2.
std::pair<ChainModel, HittingSpec> gamblers_ruin(int n_states, int start, double p_up,
                                                 RuinPayoff payoff);

/// Packages a chain + hitting spec as a single-payoff consumption model.
ConsumptionModel chain_consumption_model(ChainModel model, HittingSpec spec,
                                         std::string payoff_name);

}  // namespace shiftmc

#endif  // SHIFTMC_MARKOV_HPP
