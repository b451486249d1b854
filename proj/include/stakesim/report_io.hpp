#pragma once

#include "stakesim/sim.hpp"

#include <string>

namespace stakesim {

/// Canonical JSON rendering of a report: keys sorted, amounts as exact
/// decimal strings, LF line endings. Two runs of the same scenario
/// produce byte-identical output.
std::string report_to_json(const SimulationReport& report);

/// Epoch time series as CSV (header row, '.' decimal separator, LF).
std::string report_timeseries_csv(const SimulationReport& report);

/// Signed percentage like "0.512" or "-0.034" at the given decimals.
std::string inflation_percent_string(const SimulationReport& report,
                                     int decimals);

/// One-page human summary printed by the run command.
std::string report_summary_text(const SimulationReport& report);

} // namespace stakesim
