#include "stakesim/cli_commands.hpp"

#include "stakesim/report_io.hpp"
#include "stakesim/sim.hpp"
#include "stakesim/sweep.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace stakesim::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Collects files as (path, content) and writes them all at the end;
/// any failure removes the files already written, so a failing command
/// leaves no partial output behind.
class OutputSet {
public:
    void add(fs::path path, std::string content)
    {
        files_.emplace_back(std::move(path), std::move(content));
    }

    void commit()
    {
        std::vector<fs::path> written;
        try {
            for (const auto& [path, content] : files_) {
                if (path.has_parent_path())
                    fs::create_directories(path.parent_path());
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw IoError("cannot write " + path.string());
                out.write(content.data(),
                          static_cast<std::streamsize>(content.size()));
                if (!out)
                    throw IoError("short write to " + path.string());
                written.push_back(path);
            }
        } catch (...) {
            std::error_code ec;
            for (const auto& p : written)
                fs::remove(p, ec);
            throw;
        }
    }

private:
    std::vector<std::pair<fs::path, std::string>> files_;
};

FlatConfig load_or_throw(const std::string& path)
{
    if (!fs::exists(path))
        throw IoError("no such config file: " + path);
    return load_config_file(path); // parse errors -> runtime_error
}

/// Loads, parses and validates one config. Returns nullopt (after
/// printing diagnostics) when validation fails.
std::optional<ScenarioConfig> build_config(const std::string& path,
                                           bool quiet, int& exit_code)
{
    FlatConfig flat;
    try {
        flat = load_or_throw(path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        exit_code = kExitRuntime;
        return std::nullopt;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << '\n';
        exit_code = kExitValidation;
        return std::nullopt;
    }
    std::vector<Diagnostic> diags;
    ScenarioConfig cfg = ScenarioConfig::from_flat(flat, diags);
    if (!diags.empty()) {
        for (const auto& d : diags)
            std::cerr << path << ": " << d.key << ": " << d.message << '\n';
        exit_code = kExitValidation;
        return std::nullopt;
    }
    (void)quiet;
    return cfg;
}

std::string csv_escape(const std::string& v)
{
    if (v.find_first_of(",\"\n") == std::string::npos)
        return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

int cmd_validate(const std::string& config_path, bool quiet)
{
    int exit_code = kExitOk;
    auto cfg = build_config(config_path, quiet, exit_code);
    if (!cfg)
        return exit_code;
    if (!quiet)
        std::cout << config_path << ": OK\n";
    return kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            bool quiet)
{
    int exit_code = kExitOk;
    auto cfg = build_config(config_path, quiet, exit_code);
    if (!cfg)
        return exit_code;
    try {
        SimulationReport report = run_scenario(*cfg);
        OutputSet out;
        out.add(fs::path(out_dir) / "report.json", report_to_json(report));
        out.add(fs::path(out_dir) / "timeseries.csv",
                report_timeseries_csv(report));
        out.commit();
        if (!quiet) {
            std::cout << report_summary_text(report) << "wrote "
                      << (fs::path(out_dir) / "report.json").string()
                      << " and "
                      << (fs::path(out_dir) / "timeseries.csv").string()
                      << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_sweep(const std::string& config_path,
              const std::vector<std::string>& axis_specs,
              const std::string& out_dir, int threads, u64 cap, bool quiet)
{
    int exit_code = kExitOk;
    auto cfg = build_config(config_path, quiet, exit_code);
    if (!cfg)
        return exit_code;
    FlatConfig base;
    try {
        base = load_or_throw(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }

    std::vector<SweepAxis> axes;
    std::vector<SweepPoint> points;
    try {
        if (axis_specs.empty())
            throw std::invalid_argument("sweep needs at least one --axis");
        for (const auto& spec : axis_specs)
            axes.push_back(SweepAxis::parse(spec));
        points = enumerate_grid(base, axes, cap);
        // Invalid axis keys or values surface as point diagnostics; check
        // the first point before burning time on the whole grid.
        std::vector<Diagnostic> diags;
        (void)ScenarioConfig::from_flat(points.front().flat, diags);
        if (!diags.empty()) {
            for (const auto& d : diags)
                std::cerr << "axis: " << d.key << ": " << d.message << '\n';
            return kExitValidation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        SweepOutcome outcome = run_sweep_parallel(points, threads);

        std::ostringstream csv;
        csv << "point";
        for (const auto& axis : axes)
            csv << ',' << csv_escape(axis.key);
        csv << ",realized_inflation_percent,total_minted_xdc,total_burned_"
               "xdc,mean_validator_earnings_xdc,mean_standby_earnings_xdc,"
               "final_supply_xdc\n";
        OutputSet out;
        for (size_t i = 0; i < points.size(); ++i) {
            const SimulationReport& r = outcome.reports[i];
            csv << i;
            for (const auto& v : points[i].axis_values)
                csv << ',' << csv_escape(v);
            csv << ',' << inflation_percent_string(r, 6) << ','
                << r.total_minted.to_string() << ','
                << r.total_burned.to_string() << ','
                << r.mean_earnings(Role::Validator).to_string() << ','
                << r.mean_earnings(Role::Standby).to_string() << ','
                << r.final_supply.to_string() << '\n';

            char name[32];
            std::snprintf(name, sizeof name, "point_%04zu", i);
            fs::path dir = fs::path(out_dir) / name;
            out.add(dir / "report.json", report_to_json(r));
            out.add(dir / "timeseries.csv", report_timeseries_csv(r));
        }
        out.add(fs::path(out_dir) / "sweep_summary.csv", csv.str());
        out.commit();
        if (!quiet)
            std::cout << points.size() << " points swept; wrote "
                      << (fs::path(out_dir) / "sweep_summary.csv").string()
                      << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_compare(const std::vector<std::string>& config_paths,
                const std::string& out_dir, bool quiet)
{
    if (config_paths.size() < 2) {
        std::cerr << "error: compare needs at least two configs\n";
        return kExitValidation;
    }
    std::vector<ScenarioConfig> configs;
    for (const auto& path : config_paths) {
        int exit_code = kExitOk;
        auto cfg = build_config(path, quiet, exit_code);
        if (!cfg)
            return exit_code;
        configs.push_back(*cfg);
    }

    try {
        std::ostringstream csv;
        csv << "config,scheme,realized_inflation_percent,total_minted_xdc,"
               "total_burned_xdc,net_supply_growth_xdc,mean_validator_"
               "earnings_xdc,mean_standby_earnings_xdc\n";
        std::ostringstream table;
        for (size_t i = 0; i < configs.size(); ++i) {
            SimulationReport r = run_scenario(configs[i]);
            std::string name = fs::path(config_paths[i]).stem().string();
            csv << csv_escape(name) << ',' << r.scheme << ','
                << inflation_percent_string(r, 6) << ','
                << r.total_minted.to_string() << ','
                << r.total_burned.to_string() << ','
                << r.net_growth.to_string() << ','
                << r.mean_earnings(Role::Validator).to_string() << ','
                << r.mean_earnings(Role::Standby).to_string() << '\n';
            table << name << " (" << r.scheme
                  << "): inflation " << inflation_percent_string(r, 3)
                  << "%, minted " << r.total_minted.to_string()
                  << ", burned " << r.total_burned.to_string()
                  << ", net growth " << r.net_growth.to_string()
                  << ", validator " <<
                r.mean_earnings(Role::Validator).to_string()
                  << ", standby "
                  << r.mean_earnings(Role::Standby).to_string() << '\n';
        }
        OutputSet out;
        out.add(fs::path(out_dir) / "compare.csv", csv.str());
        out.commit();
        if (!quiet)
            std::cout << table.str() << "wrote "
                      << (fs::path(out_dir) / "compare.csv").string() << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace stakesim::cli
