#pragma once

#include "stakesim/scenario.hpp"

#include <string>
#include <vector>

namespace stakesim::cli {

/// Exit code contract shared by every subcommand: 0 success,
/// 1 validation error, 2 runtime or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

int cmd_validate(const std::string& config_path, bool quiet);

int cmd_run(const std::string& config_path, const std::string& out_dir,
            bool quiet);

int cmd_sweep(const std::string& config_path,
              const std::vector<std::string>& axis_specs,
              const std::string& out_dir, int threads, u64 cap, bool quiet);

int cmd_compare(const std::vector<std::string>& config_paths,
                const std::string& out_dir, bool quiet);

} // namespace stakesim::cli
