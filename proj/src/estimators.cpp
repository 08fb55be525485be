#include "shiftmc/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "shiftmc/errors.hpp"
#include "shiftmc/lowdisc.hpp"

namespace shiftmc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RunAccumulator {
  explicit RunAccumulator(const ConsumptionModel& model, SampleLog* log)
      : stats(model.payoff_names.size()), payoff(model.payoff_names.size()), log_(log) {
    if (log_) log_->per_payoff.assign(model.payoff_names.size(), {});
  }

  void absorb() {
    for (std::size_t i = 0; i < stats.size(); ++i) {
      stats[i].update(payoff[i]);
      if (log_) log_->per_payoff[i].push_back(payoff[i]);
    }
  }

  std::vector<RunningStats> stats;
  std::vector<double> payoff;

 private:
  SampleLog* log_;
};

void evaluate_sample(const ConsumptionModel& model, TapeCursor& cursor,
                     std::span<double> payoff, std::uint64_t sample_index) {
  try {
    model.evaluate(cursor, payoff);
  } catch (const std::exception& e) {
    throw EvaluationError("sample " + std::to_string(sample_index) +
                          ": model evaluation failed: " + e.what());
  }
}

EstimatorReport finish_report(std::string method, const Tape& tape, const TapeStats& base,
                              std::uint64_t n, const ConsumptionModel& model,
                              RunAccumulator&& acc, Clock::time_point t0) {
  EstimatorReport report;
  report.method = std::move(method);
  report.seed = tape.seed();
  report.n_samples = n;
  report.rng_calls = tape.stats().cells_generated - base.cells_generated;
  report.cache_hits = tape.stats().memo_hits - base.memo_hits;
  report.cache_misses = tape.stats().memo_misses - base.memo_misses;
  report.payoff_stats = std::move(acc.stats);
  report.estimates.reserve(model.payoff_names.size());
  for (std::size_t i = 0; i < model.payoff_names.size(); ++i) {
    report.estimates.push_back(PayoffEstimate{model.payoff_names[i],
                                              report.payoff_stats[i].mean,
                                              report.payoff_stats[i].std_error()});
  }
  report.elapsed_ms = elapsed_ms_since(t0);
  return report;
}

}  // namespace

EstimatorReport mc_estimate(const ConsumptionModel& model, std::uint64_t n, Tape& tape,
                            SampleLog* log) {
  if (n < 1) throw ContractViolation("mc_estimate: n must be >= 1");
  const auto t0 = Clock::now();
  const TapeStats base = tape.stats();
  RunAccumulator acc(model, log);
  std::uint64_t start = tape.window_start();
  for (std::uint64_t k = 0; k < n; ++k) {
    TapeCursor cursor = tape.cursor(start);
    evaluate_sample(model, cursor, acc.payoff, k);
    acc.absorb();
    start += cursor.consumed();
    tape.advance_window(start);
  }
  return finish_report("mc", tape, base, n, model, std::move(acc), t0);
}

EstimatorReport shift_estimate(const ConsumptionModel& model, std::uint64_t n, Tape& tape,
                               SampleLog* log) {
  if (n < 1) throw ContractViolation("shift_estimate: n must be >= 1");
  const auto t0 = Clock::now();
  const TapeStats base = tape.stats();
  RunAccumulator acc(model, log);
  const std::uint64_t first = tape.window_start();
  for (std::uint64_t k = 0; k < n; ++k) {
    TapeCursor cursor = tape.cursor(first + k);
    evaluate_sample(model, cursor, acc.payoff, k);
    acc.absorb();
    tape.advance_window(first + k + 1);
  }
  return finish_report("shift", tape, base, n, model, std::move(acc), t0);
}

EstimatorReport qmc_estimate(const std::function<double(std::span<const double>)>& f, int dim,
                             std::uint64_t n, const HaltonSequence& seq) {
  if (dim < 1) throw ContractViolation("qmc_estimate: dimension must be >= 1");
  if (n < 1) throw ContractViolation("qmc_estimate: n must be >= 1");
  if (seq.dimension() != dim) {
    throw ContractViolation("qmc_estimate: sequence dimension " +
                            std::to_string(seq.dimension()) + " does not match f's dimension " +
                            std::to_string(dim));
  }
  const auto t0 = Clock::now();
  std::vector<double> node(static_cast<std::size_t>(dim));
  double sum = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    seq.point(seq.start_index() + k, node);
    sum += f(node);
  }
  EstimatorReport report;
  report.method = "qmc";
  report.seed = 0;  // deterministic method, no tape
  report.n_samples = n;
  report.estimates.push_back(
      PayoffEstimate{"value", sum / static_cast<double>(n), std::nullopt});
  report.payoff_stats.resize(1);
  report.elapsed_ms = elapsed_ms_since(t0);
  return report;
}

CoordinatePermutation CoordinatePermutation::identity(int dim) {
  CoordinatePermutation p;
  p.sigma.resize(static_cast<std::size_t>(dim));
  std::iota(p.sigma.begin(), p.sigma.end(), 1);
  return p;
}

bool CoordinatePermutation::valid() const {
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return !sigma.empty();
}

std::function<double(std::span<const double>)> permuted(
    std::function<double(std::span<const double>)> f, CoordinatePermutation sigma) {
  if (!sigma.valid()) {
    throw ContractViolation("permuted: sigma is not a permutation of {1..d}");
  }
  return [f = std::move(f), sigma = std::move(sigma)](std::span<const double> x) {
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      y[j] = x[static_cast<std::size_t>(sigma.sigma[j]) - 1];
    }
    return f(y);
  };
}

ConsumptionModel function_model(std::function<double(std::span<const double>)> f, int dim,
                                std::string payoff_name) {
  if (dim < 1) throw ContractViolation("function_model: dimension must be >= 1");
  ConsumptionModel model;
  model.payoff_names = {std::move(payoff_name)};
  model.fixed_dim = dim;
  model.evaluate = [f = std::move(f), buf = std::vector<double>(static_cast<std::size_t>(dim))](
                       TapeCursor& cursor, std::span<double> out) mutable {
    for (double& x : buf) x = cursor.next();
    out[0] = f(buf);
  };
  return model;
}

}  // namespace shiftmc
