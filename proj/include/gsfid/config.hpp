#pragma once

// Run configuration shared by every CLI subcommand.
//
// Settings come from four layers, later layers winning:
//   defaults < subcommand defaults < config file < GSFID_WORKERS < flags.
// Config files are flat `key = value` lines; keys are the long flag names with
// '_' in place of '-'.  '#' starts a comment.

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsfid::cli {

/// Bad flags, keys or values; the CLI exits with status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Settings = std::map<std::string, std::string>;

inline constexpr const char* workers_env = "GSFID_WORKERS";

struct RunConfig {
    std::string command;
    std::string recipe;
    std::string quantity; ///< empty: the subcommand's default

    double gamma = 1.0;
    double lambda = 0.5;
    std::int64_t n_sites = 1001;
    double delta_lambda = 1e-6;
    double delta_gamma = 1e-6;
    double critical_lambda = 1.0;

    double omega0 = 1.0;
    double omega = 1.0;
    std::string variant = "paper";

    double lambda_min = -1.5;
    double lambda_max = 1.5;
    std::int64_t lambda_points = 61;
    double gamma_min = -1.5;
    double gamma_max = 1.5;
    std::int64_t gamma_points = 61;

    std::vector<std::int64_t> n_list{1001, 3001, 10001, 30001, 100001};
    double window_min = 1e-3;
    double window_max = 1e-1;
    std::int64_t points = 21;

    double t_max = 50.0;
    std::int64_t t_points = 501;

    double scale = 1.0;
    std::uint64_t seed = 20061016;
    int workers = 1;
    std::string output; ///< empty: standard output
    std::string format; ///< csv, json, or empty for the subcommand's default
};

/// Every key a config file or flag may set.
const std::vector<std::string>& known_keys();

/// Parses a flat key-value file.  Unknown keys and malformed lines are UsageErrors.
Settings read_config_file(const std::filesystem::path& path);

/// Applies one setting; throws UsageError naming the key on a bad value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Cross-field checks (odd n_sites, positive counts, ...).
void validate(const RunConfig& config);

/// Layers the settings, then validates.  An empty path skips the file.
RunConfig merge_config(const std::filesystem::path& path, const Settings& flags,
                       const Settings& command_defaults = {});

/// merge_config with no flags.
RunConfig load_config(const std::filesystem::path& path);

} // namespace gsfid::cli
