#include "gsfid/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gsfid::cli {

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{
        "quantity",     "gamma",        "lambda",      "n_sites",      "delta",         "delta_lambda",
        "delta_gamma",  "critical_lambda", "omega0",   "omega",        "variant",       "lambda_min",
        "lambda_max",   "lambda_points", "gamma_min",  "gamma_max",    "gamma_points",  "n_list",
        "window_min",   "window_max",   "points",      "t_max",        "t_points",      "scale",
        "seed",         "workers",      "output",      "format"};
    return keys;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw UsageError(key + ": expected a finite number, got '" + text + "'");
    return v;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
    // Accept 1e5-style integers as well as plain digits.
    const double v = parse_real(key, text);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        throw UsageError(key + ": expected an integer, got '" + text + "'");
    return static_cast<std::int64_t>(v);
}

} // namespace

Settings read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file '" + path.string() + "'");
    Settings out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path.string() + ":" + std::to_string(number) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw UsageError(path.string() + ":" + std::to_string(number) + ": unknown key '" + key + "'");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "quantity") c.quantity = value;
    else if (key == "gamma") c.gamma = parse_real(key, value);
    else if (key == "lambda") c.lambda = parse_real(key, value);
    else if (key == "n_sites") c.n_sites = parse_int(key, value);
    else if (key == "delta") c.delta_lambda = c.delta_gamma = parse_real(key, value);
    else if (key == "delta_lambda") c.delta_lambda = parse_real(key, value);
    else if (key == "delta_gamma") c.delta_gamma = parse_real(key, value);
    else if (key == "critical_lambda") c.critical_lambda = parse_real(key, value);
    else if (key == "omega0") c.omega0 = parse_real(key, value);
    else if (key == "omega") c.omega = parse_real(key, value);
    else if (key == "variant") c.variant = value;
    else if (key == "lambda_min") c.lambda_min = parse_real(key, value);
    else if (key == "lambda_max") c.lambda_max = parse_real(key, value);
    else if (key == "lambda_points") c.lambda_points = parse_int(key, value);
    else if (key == "gamma_min") c.gamma_min = parse_real(key, value);
    else if (key == "gamma_max") c.gamma_max = parse_real(key, value);
    else if (key == "gamma_points") c.gamma_points = parse_int(key, value);
    else if (key == "n_list") {
        c.n_list.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ','))
            c.n_list.push_back(parse_int(key, trim(item)));
    } else if (key == "window_min") c.window_min = parse_real(key, value);
    else if (key == "window_max") c.window_max = parse_real(key, value);
    else if (key == "points") c.points = parse_int(key, value);
    else if (key == "t_max") c.t_max = parse_real(key, value);
    else if (key == "t_points") c.t_points = parse_int(key, value);
    else if (key == "scale") c.scale = parse_real(key, value);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "workers") c.workers = static_cast<int>(parse_int(key, value));
    else if (key == "output") c.output = value;
    else if (key == "format") {
        if (value != "csv" && value != "json")
            throw UsageError("format: expected csv or json, got '" + value + "'");
        c.format = value;
    } else
        throw UsageError("unknown key '" + key + "'");
}

void validate(const RunConfig& c) {
    if (c.n_sites < 3)
        throw UsageError("n_sites must be >= 3");
    if (c.n_sites % 2 == 0)
        throw UsageError("n_sites must be odd");
    for (auto n : c.n_list)
        if (n < 3 || n % 2 == 0)
            throw UsageError("n_list entries must be odd and >= 3");
    if (!(c.omega0 > 0.0) || !(c.omega > 0.0))
        throw UsageError("omega0 and omega must be positive");
    if (c.variant != "paper" && c.variant != "literature")
        throw UsageError("variant must be paper or literature");
    if (c.lambda_points < 1 || c.gamma_points < 1 || c.points < 1 || c.t_points < 1)
        throw UsageError("point counts must be positive");
    if (!(c.window_min > 0.0) || !(c.window_max > c.window_min))
        throw UsageError("window_min must be positive and below window_max");
    if (!(c.scale > 0.0) || c.scale > 1.0)
        throw UsageError("scale must lie in (0, 1]");
    if (c.workers < 1)
        throw UsageError("workers must be >= 1");
    if (c.t_max < 0.0)
        throw UsageError("t_max must be nonnegative");
}

namespace {

// "delta" sets both step sizes; delta_lambda / delta_gamma in the same layer win.
void apply_layer(RunConfig& config, const Settings& layer) {
    for (const auto& [key, value] : layer)
        if (key != "delta_lambda" && key != "delta_gamma")
            apply_setting(config, key, value);
    for (const auto& [key, value] : layer)
        if (key == "delta_lambda" || key == "delta_gamma")
            apply_setting(config, key, value);
}

} // namespace

RunConfig merge_config(const std::filesystem::path& path, const Settings& flags,
                       const Settings& command_defaults) {
    RunConfig config;
    apply_layer(config, command_defaults);
    if (!path.empty())
        apply_layer(config, read_config_file(path));
    if (const char* env = std::getenv(workers_env); env && *env)
        apply_setting(config, "workers", env);
    apply_layer(config, flags);
    validate(config);
    return config;
}

RunConfig load_config(const std::filesystem::path& path) { return merge_config(path, {}); }

} // namespace gsfid::cli
