#include "shiftmc/markov.hpp"

#include <cmath>
#include <string>

#include "shiftmc/errors.hpp"

namespace shiftmc {

namespace {

void check_finite(std::span<const double> state, std::uint64_t step) {
  for (double v : state) {
    if (!std::isfinite(v)) {
      throw EvaluationError("run_chain: non-finite state component after step " +
                            std::to_string(step));
    }
  }
}

ChainOutcome run_chain_buffered(const ChainModel& model, const HittingSpec& spec,
                                TapeCursor& cursor, std::vector<double>& state) {
  if (spec.cap < 1) throw ContractViolation("run_chain: cap must be >= 1");
  state.assign(model.initial_state.begin(), model.initial_state.end());
  std::span<double> s(state);
  for (std::uint64_t n = 0; n < spec.cap; ++n) {
    const double r = model.memo_transform
                         ? cursor.next_transformed(model.memo_transform->transform_id,
                                                   model.memo_transform->map)
                         : cursor.next();
    model.transition(s, n, r);
    check_finite(s, n + 1);
    if (spec.target(s)) {
      const std::uint64_t steps = n + 1;
      return ChainOutcome{spec.payoff(s, steps), steps, steps, false};
    }
  }
  return ChainOutcome{spec.payoff(s, spec.cap), spec.cap, spec.cap, true};
}

}  // namespace

ChainOutcome run_chain(const ChainModel& model, const HittingSpec& spec, TapeCursor& cursor) {
  std::vector<double> state;
  return run_chain_buffered(model, spec, cursor, state);
}

std::pair<ChainModel, HittingSpec> gamblers_ruin(int n_states, int start, double p_up,
                                                 RuinPayoff payoff) {
  if (n_states < 2) throw ContractViolation("gamblers_ruin: need at least 2 states");
  if (start < 1 || start > n_states - 1) {
    throw ContractViolation("gamblers_ruin: start must be in 1..N-1");
  }
  if (!(p_up > 0.0 && p_up < 1.0)) {
    throw ContractViolation("gamblers_ruin: p_up must be in (0,1)");
  }
  ChainModel model;
  model.initial_state = {static_cast<double>(start)};
  model.transition = [p_up](std::span<double> s, std::uint64_t, double u) {
    s[0] += u < p_up ? 1.0 : -1.0;
  };
  const double top = static_cast<double>(n_states);
  HittingSpec spec;
  spec.target = [top](std::span<const double> s) { return s[0] <= 0.0 || s[0] >= top; };
  if (payoff == RuinPayoff::kDuration) {
    spec.payoff = [](std::span<const double>, std::uint64_t steps) {
      return static_cast<double>(steps);
    };
  } else {
    spec.payoff = [top](std::span<const double> s, std::uint64_t) {
      return s[0] >= top ? 1.0 : 0.0;
    };
  }
  return {std::move(model), std::move(spec)};
}

ConsumptionModel chain_consumption_model(ChainModel model, HittingSpec spec,
                                         std::string payoff_name) {
  ConsumptionModel cm;
  cm.payoff_names = {std::move(payoff_name)};
  cm.evaluate = [model = std::move(model), spec = std::move(spec),
                 state = std::vector<double>()](TapeCursor& cursor,
                                                std::span<double> out) mutable {
    out[0] = run_chain_buffered(model, spec, cursor, state).payoff;
  };
  return cm;
}

}  // namespace shiftmc
