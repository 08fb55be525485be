#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "shiftmc/errors.hpp"
#include "shiftmc/harness.hpp"
#include "shiftmc/lowdisc.hpp"
#include "shiftmc/report_io.hpp"
#include "shiftmc/rng.hpp"
#include "shiftmc/stats.hpp"
#include "shiftmc/tape.hpp"

namespace py = pybind11;

namespace {

py::dict report_to_dict(const shiftmc::EstimatorReport& r, bool include_truncated) {
  py::dict estimates;
  for (const shiftmc::PayoffEstimate& e : r.estimates) {
    py::dict entry;
    entry["mean"] = e.mean;
    entry["stderr"] = e.std_error ? py::cast(*e.std_error) : py::none();
    estimates[e.name.c_str()] = entry;
  }
  py::dict d;
  d["method"] = r.method;
  d["seed"] = r.seed;
  d["n_samples"] = r.n_samples;
  d["estimates"] = estimates;
  d["rng_calls"] = r.rng_calls;
  d["calls_per_sample"] = r.calls_per_sample();
  d["cache_hits"] = r.cache_hits;
  d["cache_misses"] = r.cache_misses;
  d["cache_hit_rate"] = r.cache_hit_rate();
  if (include_truncated) d["truncated_count"] = r.truncated_count;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

std::vector<double> uniforms(std::uint64_t seed, std::uint64_t count) {
  shiftmc::GeneratorState state = shiftmc::seed_generator(seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const shiftmc::UniformDraw draw = shiftmc::next_uniform(state);
    state = draw.next;
    out.push_back(draw.value);
  }
  return out;
}

shiftmc::EstimatorReport estimate_callable(
    const std::function<double(std::vector<double>)>& f, int dim, const std::string& method,
    std::uint64_t n, std::uint64_t seed, bool memo) {
  const auto wrapped = [f](std::span<const double> x) {
    return f(std::vector<double>(x.begin(), x.end()));
  };
  if (method == "qmc") {
    return shiftmc::qmc_estimate(wrapped, dim, n, shiftmc::HaltonSequence(dim));
  }
  shiftmc::Tape tape(seed);
  tape.set_memo_enabled(memo);
  const shiftmc::ConsumptionModel model = shiftmc::function_model(wrapped, dim);
  if (method == "mc") return shiftmc::mc_estimate(model, n, tape);
  if (method == "shift") return shiftmc::shift_estimate(model, n, tape);
  throw shiftmc::ContractViolation("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_shiftmc, m) {
  m.doc() = "shift-method simulation toolkit: seeded tapes, MC/shift/QMC "
            "estimators, low-discrepancy nodes and the transport benchmark";

  py::register_exception<shiftmc::ContractViolation>(m, "ContractViolation",
                                                     PyExc_ValueError);
  py::register_exception<shiftmc::ReclaimedCellError>(m, "ReclaimedCellError",
                                                      PyExc_RuntimeError);

  m.def("uniforms", &uniforms, py::arg("seed"), py::arg("count"),
        "First `count` uniforms of the seeded generator.");

  py::class_<shiftmc::Tape>(m, "Tape")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_property_readonly("seed", &shiftmc::Tape::seed)
      .def_property_readonly("window_start", &shiftmc::Tape::window_start)
      .def_property_readonly("high_index", &shiftmc::Tape::high_index)
      .def("cell_value", &shiftmc::Tape::cell_value, py::arg("index"))
      .def("advance_window", &shiftmc::Tape::advance_window, py::arg("new_start"))
      .def("set_memo_enabled", &shiftmc::Tape::set_memo_enabled, py::arg("enabled"))
      .def("stats", [](const shiftmc::Tape& t) {
        py::dict d;
        d["cells_generated"] = t.stats().cells_generated;
        d["memo_hits"] = t.stats().memo_hits;
        d["memo_misses"] = t.stats().memo_misses;
        return d;
      });

  m.def(
      "run_transport",
      [](double lambda, const std::string& method, std::uint64_t n, std::uint64_t seed,
         bool memo) {
        shiftmc::TransportRunConfig cfg;
        cfg.lambda = lambda;
        cfg.method = method;
        cfg.n = n;
        cfg.seed = seed;
        cfg.memo = memo;
        return report_to_dict(shiftmc::run_transport(cfg), true);
      },
      py::arg("lambda_"), py::arg("method") = "shift", py::arg("n") = 500'000,
      py::arg("seed") = 42, py::arg("memo") = true,
      "One transport estimator run; returns the report as a dict.");

  m.def(
      "run_table",
      [](const std::vector<double>& lambdas, std::uint64_t n, std::uint64_t seed, bool memo) {
        const shiftmc::TableResult table = shiftmc::run_table(lambdas, n, seed, memo);
        py::list cells;
        for (const shiftmc::TableCell& cell : table.cells) {
          py::dict d;
          d["lambda"] = cell.lambda;
          d["mc"] = report_to_dict(cell.mc, true);
          d["shift"] = report_to_dict(cell.shift, true);
          d["duration_ratio_mc_over_shift"] = cell.duration_ratio_mc_over_shift;
          cells.append(d);
        }
        return cells;
      },
      py::arg("lambdas"), py::arg("n") = 500'000, py::arg("seed") = 42, py::arg("memo") = true,
      "MC vs shift over a lambda grid; returns one dict per grid point.");

  m.def(
      "run_ruin",
      [](int n_states, int start, double p_up, const std::string& payoff,
         const std::string& method, std::uint64_t n, std::uint64_t seed) {
        shiftmc::RuinRunConfig cfg;
        cfg.n_states = n_states;
        cfg.start = start;
        cfg.p_up = p_up;
        cfg.payoff = payoff == "duration" ? shiftmc::RuinPayoff::kDuration
                                          : shiftmc::RuinPayoff::kHitTop;
        cfg.method = method;
        cfg.n = n;
        cfg.seed = seed;
        return report_to_dict(shiftmc::run_ruin(cfg), false);
      },
      py::arg("n_states") = 4, py::arg("start") = 2, py::arg("p_up") = 0.5,
      py::arg("payoff") = "duration", py::arg("method") = "shift", py::arg("n") = 500'000,
      py::arg("seed") = 42, "Gambler's-ruin hitting-time run; returns the report as a dict.");

  m.def(
      "estimate",
      [](const std::function<double(std::vector<double>)>& f, int dim,
         const std::string& method, std::uint64_t n, std::uint64_t seed, bool memo) {
        return report_to_dict(estimate_callable(f, dim, method, n, seed, memo),
                              false);
      },
      py::arg("f"), py::arg("dim"), py::arg("method") = "shift", py::arg("n") = 10'000,
      py::arg("seed") = 42, py::arg("memo") = true,
      "Estimate the integral of a Python callable on [0,1]^dim by mc/shift/qmc.");

  m.def("radical_inverse", &shiftmc::radical_inverse, py::arg("k"), py::arg("base"));

  m.def(
      "halton_point",
      [](std::uint64_t k, int dim) {
        const shiftmc::HaltonSequence seq(dim);
        std::vector<double> out(static_cast<std::size_t>(dim));
        seq.point(k, out);
        return out;
      },
      py::arg("k"), py::arg("dim"));

  m.def(
      "star_discrepancy_1d",
      [](const std::vector<double>& points) {
        const shiftmc::DiscrepancyReport r = shiftmc::star_discrepancy_1d(points);
        py::dict d;
        d["n"] = r.n;
        d["d_star"] = r.d_star;
        d["bound_holds"] = r.bound_holds;
        return d;
      },
      py::arg("points"));

  m.def("koksma_hlawka_bound", &shiftmc::koksma_hlawka_bound, py::arg("variation"),
        py::arg("d_star"));

  m.def(
      "batch_means_variance",
      [](const std::vector<double>& values, std::size_t batch_size) {
        return shiftmc::batch_means_variance(values, batch_size);
      },
      py::arg("values"), py::arg("batch_size"));

  m.attr("__version__") = "0.1.0";
}
