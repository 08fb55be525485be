#include "shiftmc/report_io.hpp"

#include <cstdio>

namespace shiftmc {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string opt_g17(const std::optional<double>& v) {
  return v ? format_g17(*v) : std::string("null");
}

// Emits one report as a JSON object at the given indentation depth. Field
// order is fixed so identical runs produce identical bytes; elapsed_ms sits
// on its own line so determinism checks can strip it.
void emit_report_json(std::string& out, const EstimatorReport& r, bool include_truncated,
                      const ExtraFields& extra, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner = pad + "  ";
  out += "{\n";
  out += inner + "\"method\": \"" + r.method + "\",\n";
  out += inner + "\"seed\": " + std::to_string(r.seed) + ",\n";
  out += inner + "\"n_samples\": " + std::to_string(r.n_samples) + ",\n";
  out += inner + "\"params\": {";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += inner + "  \"" + r.params[i].first + "\": " + r.params[i].second;
  }
  out += r.params.empty() ? "},\n" : "\n" + inner + "},\n";
  out += inner + "\"estimates\": {";
  for (std::size_t i = 0; i < r.estimates.size(); ++i) {
    const PayoffEstimate& e = r.estimates[i];
    out += i == 0 ? "\n" : ",\n";
    out += inner + "  \"" + e.name + "\": { \"mean\": " + format_g17(e.mean) +
           ", \"stderr\": " + opt_g17(e.std_error) + " }";
  }
  out += r.estimates.empty() ? "},\n" : "\n" + inner + "},\n";
  out += inner + "\"rng_calls\": " + std::to_string(r.rng_calls) + ",\n";
  out += inner + "\"calls_per_sample\": " + format_g17(r.calls_per_sample()) + ",\n";
  out += inner + "\"cache_hits\": " + std::to_string(r.cache_hits) + ",\n";
  out += inner + "\"cache_misses\": " + std::to_string(r.cache_misses) + ",\n";
  out += inner + "\"cache_hit_rate\": " + format_g17(r.cache_hit_rate()) + ",\n";
  if (include_truncated) {
    out += inner + "\"truncated_count\": " + std::to_string(r.truncated_count) + ",\n";
  }
  for (const auto& [key, value] : extra) {
    out += inner + "\"" + key + "\": " + value + ",\n";
  }
  out += inner + "\"elapsed_ms\": " + format_g17(r.elapsed_ms) + "\n";
  out += pad + "}";
}

}  // namespace

std::string report_to_json(const EstimatorReport& report, bool include_truncated,
                           const ExtraFields& extra) {
  std::string out;
  emit_report_json(out, report, include_truncated, extra, 0);
  out += "\n";
  return out;
}

std::string report_to_csv(const EstimatorReport& report, bool include_truncated,
                          const ExtraFields& extra) {
  std::string header =
      "method,seed,n_samples,payoff,mean,stderr,rng_calls,calls_per_sample,cache_hit_rate";
  if (include_truncated) header += ",truncated_count";
  for (const auto& [key, value] : extra) header += "," + key;
  header += ",elapsed_ms\n";

  std::string out = header;
  for (const PayoffEstimate& e : report.estimates) {
    out += report.method + "," + std::to_string(report.seed) + "," +
           std::to_string(report.n_samples) + "," + e.name + "," + format_g17(e.mean) + "," +
           (e.std_error ? format_g17(*e.std_error) : "") + "," + std::to_string(report.rng_calls) +
           "," + format_g17(report.calls_per_sample()) + "," + format_g17(report.cache_hit_rate());
    if (include_truncated) out += "," + std::to_string(report.truncated_count);
    for (const auto& [key, value] : extra) out += "," + (value == "null" ? "" : value);
    out += "," + format_g17(report.elapsed_ms) + "\n";
  }
  return out;
}

std::string table_to_json(const TableResult& table) {
  std::string out = "{\n";
  out += "  \"n_samples\": " + std::to_string(table.n_samples) + ",\n";
  out += "  \"base_seed\": " + std::to_string(table.base_seed) + ",\n";
  out += "  \"cells\": [";
  for (std::size_t i = 0; i < table.cells.size(); ++i) {
    const TableCell& cell = table.cells[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\n";
    out += "      \"lambda\": " + format_g17(cell.lambda) + ",\n";
    out += "      \"mc\": ";
    emit_report_json(out, cell.mc, true, {}, 3);
    out += ",\n      \"shift\": ";
    emit_report_json(out, cell.shift, true, {}, 3);
    out += ",\n";
    out += "      \"duration_ratio_mc_over_shift\": " +
           format_g17(cell.duration_ratio_mc_over_shift) + "\n";
    out += "    }";
  }
  out += table.cells.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string table_to_csv(const TableResult& table) {
  std::string out = "quantity,method";
  for (const TableCell& cell : table.cells) out += ",lambda=" + format_g17(cell.lambda);
  out += "\n";

  const auto row = [&](const std::string& quantity, const std::string& method,
                       const std::function<double(const TableCell&)>& value) {
    out += quantity + "," + method;
    for (const TableCell& cell : table.cells) out += "," + format_g17(value(cell));
    out += "\n";
  };
  row("mean_splittings", "mc", [](const TableCell& c) { return c.mc.estimates[0].mean; });
  row("mean_splittings", "shift", [](const TableCell& c) { return c.shift.estimates[0].mean; });
  row("mean_right_exits", "mc", [](const TableCell& c) { return c.mc.estimates[1].mean; });
  row("mean_right_exits", "shift", [](const TableCell& c) { return c.shift.estimates[1].mean; });
  row("calls_per_sample", "mc", [](const TableCell& c) { return c.mc.calls_per_sample(); });
  row("calls_per_sample", "shift", [](const TableCell& c) { return c.shift.calls_per_sample(); });
  row("duration_ratio_mc_over_shift", "",
      [](const TableCell& c) { return c.duration_ratio_mc_over_shift; });
  return out;
}

namespace {

ExtraFields integrate_extras(const IntegrateResult& result) {
  ExtraFields extra;
  extra.emplace_back("d_star", opt_g17(result.d_star));
  extra.emplace_back("kh_bound", opt_g17(result.kh_bound));
  extra.emplace_back("lil_band", opt_g17(result.lil));
  return extra;
}

}  // namespace

std::string integrate_to_json(const IntegrateResult& result) {
  return report_to_json(result.report, false, integrate_extras(result));
}

std::string integrate_to_csv(const IntegrateResult& result) {
  return report_to_csv(result.report, false, integrate_extras(result));
}

}  // namespace shiftmc
