#ifndef SHIFTMC_REPORT_IO_HPP
#define SHIFTMC_REPORT_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "shiftmc/estimators.hpp"
#include "shiftmc/harness.hpp"

namespace shiftmc {

/// Renders a double with up to 17 significant digits (%.17g): enough to
/// round-trip any IEEE-754 double, so identical runs emit identical bytes.
std::string format_g17(double v);

/// Extra top-level fields appended after the standard ones; values must be
/// valid JSON text (use format_g17 for numbers).
using ExtraFields = std::vector<std::pair<std::string, std::string>>;

std::string report_to_json(const EstimatorReport& report, bool include_truncated,
                           const ExtraFields& extra = {});
std::string report_to_csv(const EstimatorReport& report, bool include_truncated,
                          const ExtraFields& extra = {});

std::string table_to_json(const TableResult& table);
std::string table_to_csv(const TableResult& table);

std::string integrate_to_json(const IntegrateResult& result);
std::string integrate_to_csv(const IntegrateResult& result);

}  // namespace shiftmc

#endif  // SHIFTMC_REPORT_IO_HPP
