#include "stakesim/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace stakesim {

namespace {

struct ScaledDecimal {
    u128 value;
    u32 scale; // value * 10^-scale
};

ScaledDecimal parse_scaled(const std::string& text)
{
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return {detail::parse_u128(text), 0};
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    return {detail::parse_u128(digits),
            static_cast<u32>(text.size() - dot - 1)};
}

u128 pow10(u32 n)
{
    u128 v = 1;
    while (n--)
        v = detail::checked_mul_u128(v, 10);
    return v;
}

std::string render_scaled(u128 value, u32 scale)
{
    std::string digits = detail::u128_to_string(value);
    if (scale == 0)
        return digits;
    if (digits.size() <= scale)
        digits.insert(digits.begin(), scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
    size_t last = digits.find_last_not_of('0');
    if (digits[last] == '.')
        return digits.substr(0, last);
    return digits.substr(0, last + 1);
}

} // namespace

SweepAxis SweepAxis::parse(const std::string& spec)
{
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("axis spec must be key=values: " + spec);
    SweepAxis axis;
    axis.key = spec.substr(0, eq);
    std::string rhs = spec.substr(eq + 1);
    if (rhs.empty())
        throw std::invalid_argument("axis has no values: " + spec);

    if (rhs.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= rhs.size()) {
            size_t comma = rhs.find(',', pos);
            std::string v = rhs.substr(
                pos, comma == std::string::npos ? std::string::npos
                                                : comma - pos);
            if (v.empty())
                throw std::invalid_argument("empty value in axis: " + spec);
            axis.values.push_back(v);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return axis;
    }

    auto c1 = rhs.find(':');
    if (c1 != std::string::npos) {
        auto c2 = rhs.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument(
                "range axis must be start:stop:step: " + spec);
        ScaledDecimal start = parse_scaled(rhs.substr(0, c1));
        ScaledDecimal stop = parse_scaled(rhs.substr(c1 + 1, c2 - c1 - 1));
        ScaledDecimal step = parse_scaled(rhs.substr(c2 + 1));
        u32 scale = std::max({start.scale, stop.scale, step.scale});
        u128 a = detail::checked_mul_u128(start.value,
                                          pow10(scale - start.scale));
        u128 b = detail::checked_mul_u128(stop.value,
                                          pow10(scale - stop.scale));
        u128 s = detail::checked_mul_u128(step.value,
                                          pow10(scale - step.scale));
        if (s == 0)
            throw std::invalid_argument("zero step in axis: " + spec);
        for (u128 v = a; v <= b; v = detail::checked_add_u128(v, s))
            axis.values.push_back(render_scaled(v, scale));
        if (axis.values.empty())
            throw std::invalid_argument("empty range in axis: " + spec);
        return axis;
    }

    axis.values.push_back(rhs);
    return axis;
}

std::vector<SweepPoint> enumerate_grid(const FlatConfig& base,
                                       const std::vector<SweepAxis>& axes,
                                       u64 cap)
{
    u128 total = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty())
            throw std::invalid_argument("axis '" + axis.key +
                                        "' has no values");
        total = detail::checked_mul_u128(total, axis.values.size());
        if (total > cap)
            throw std::invalid_argument("sweep grid exceeds the cap of " +
                                        std::to_string(cap) + " points");
    }

    std::vector<SweepPoint> points;
    std::vector<size_t> idx(axes.size(), 0);
    for (;;) {
        SweepPoint p;
        p.flat = base;
        for (size_t i = 0; i < axes.size(); ++i) {
            p.axis_values.push_back(axes[i].values[idx[i]]);
            p.flat[axes[i].key] = axes[i].values[idx[i]];
        }
        points.push_back(std::move(p));
        // Advance the last axis fastest (row-major order).
        size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i].values.size())
                break;
            idx[i] = 0;
            if (i == 0)
                return points;
        }
        if (axes.empty())
            return points;
    }
}

namespace {

SimulationReport run_point(const SweepPoint& point)
{
    std::vector<Diagnostic> diags;
    ScenarioConfig cfg = ScenarioConfig::from_flat(point.flat, diags);
    if (!diags.empty()) {
        std::string msg = "invalid sweep point:";
        for (const auto& d : diags)
            msg += " [" + d.key + ": " + d.message + "]";
        throw std::invalid_argument(msg);
    }
    return run_scenario(cfg);
}

} // namespace

SweepOutcome run_sweep_serial(const std::vector<SweepPoint>& points)
{
    SweepOutcome out;
    out.reports.reserve(points.size());
    for (const auto& p : points)
        out.reports.push_back(run_point(p));
    return out;
}

SweepOutcome run_sweep_parallel(const std::vector<SweepPoint>& points,
                                int threads)
{
#ifdef _OPENMP
    if (threads > 1 && points.size() > 1) {
        SweepOutcome out;
        out.reports.resize(points.size());
        std::vector<std::string> errors(points.size());
        bool failed = false;
#pragma omp parallel for schedule(dynamic) num_threads(threads) \
    shared(out, errors, failed)
        for (long long i = 0; i < static_cast<long long>(points.size());
             ++i) {
            try {
                out.reports[static_cast<size_t>(i)] =
                    run_point(points[static_cast<size_t>(i)]);
            } catch (const std::exception& e) {
                errors[static_cast<size_t>(i)] = e.what();
#pragma omp atomic write
                failed = true;
            }
        }
        if (failed) {
            for (const auto& e : errors)
                if (!e.empty())
                    throw std::invalid_argument(e);
        }
        return out;
    }
#else
    (void)threads;
#endif
    return run_sweep_serial(points);
}

} // namespace stakesim
