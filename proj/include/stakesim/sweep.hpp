#pragma once

#include "stakesim/sim.hpp"

#include <string>
#include <vector>

namespace stakesim {

/// One sweep dimension: a config key plus the values it takes. Parsed
/// from "key=v1,v2,v3" or "key=start:stop:step" (decimal range,
/// inclusive of stop when the step lands on it).
struct SweepAxis {
    std::string key;
    std::vector<std::string> values;

    static SweepAxis parse(const std::string& spec);
};

struct SweepPoint {
    std::vector<std::string> axis_values; // one per axis, grid order
    FlatConfig flat;                      // base + overrides
};

/// Row-major Cartesian product of the axes over the base config.
/// Throws std::invalid_argument when an axis is empty or the grid
/// exceeds `cap` points.
std::vector<SweepPoint> enumerate_grid(const FlatConfig& base,
                                       const std::vector<SweepAxis>& axes,
                                       u64 cap);

struct SweepOutcome {
    std::vector<SimulationReport> reports; // grid enumeration order
};

/// Serial reference runner: one point after another, in grid order.
SweepOutcome run_sweep_serial(const std::vector<SweepPoint>& points);

/// OpenMP runner over the same grid; reports land at their grid index
/// so the outcome is identical to the serial reference regardless of
/// scheduling. threads <= 1 falls back to the serial path.
SweepOutcome run_sweep_parallel(const std::vector<SweepPoint>& points,
                                int threads);

} // namespace stakesim
