#include "stakesim/cli_commands.hpp"

#include <CLI11.hpp>

#include <thread>

int main(int argc, char** argv)
{
    CLI::App app{"stakesim - deterministic masternode staking and "
                 "tokenomics simulator"};
    app.require_subcommand(1);
    app.fallthrough(); // let --quiet / --threads appear after the subcommand

    bool quiet = false;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1)
        threads = 1;
    app.add_flag("--quiet", quiet, "suppress non-error output");
    app.add_option("--threads", threads,
                   "worker threads for sweeps (default: machine parallelism)");

    std::string config_path, out_dir = ".";
    std::vector<std::string> axis_specs;
    std::vector<std::string> compare_paths;
    stakesim::u64 cap = 10'000;

    auto* validate = app.add_subcommand("validate", "check a scenario config");
    validate->add_option("config", config_path, "scenario file")->required();

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("config", config_path, "scenario file")->required();
    run->add_option("--out", out_dir, "output directory")->required();

    auto* sweep = app.add_subcommand("sweep", "run a parameter grid");
    sweep->add_option("config", config_path, "scenario file")->required();
    sweep->add_option("--axis", axis_specs,
                      "axis as key=v1,v2,... or key=start:stop:step")
        ->required();
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--cap", cap, "maximum grid size (default 10000)");

    auto* compare = app.add_subcommand("compare", "compare scenarios");
    compare->add_option("configs", compare_paths, "two or more scenario files")
        ->required();
    compare->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    using namespace stakesim::cli;
    if (validate->parsed())
        return cmd_validate(config_path, quiet);
    if (run->parsed())
        return cmd_run(config_path, out_dir, quiet);
    if (sweep->parsed())
        return cmd_sweep(config_path, axis_specs, out_dir, threads, cap,
                         quiet);
    if (compare->parsed())
        return cmd_compare(compare_paths, out_dir, quiet);
    return kExitValidation;
}
