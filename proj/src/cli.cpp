#include "gsfid/cli.hpp"

#include "gsfid/dicke.hpp"
#include "gsfid/dynamics.hpp"
#include "gsfid/errors.hpp"
#include "gsfid/fit.hpp"
#include "gsfid/verify.hpp"
#include "gsfid/xy_chain.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace gsfid::cli {

namespace {

using analysis::Axis;
using analysis::SweepSpec;
using analysis::ValueKind;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string number(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r' || c == '"')
            c = c == ',' ? ';' : ' ';
    return s;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

json fit_report(const analysis::PowerLawFit& fit, double runtime, json context) {
    context["amplitude"] = fit.amplitude;
    context["exponent"] = fit.exponent;
    context["window"] = {fit.window_min, fit.window_max};
    context["r_squared"] = fit.r_squared;
    context["n_points"] = fit.n_points;
    context["runtime_seconds"] = runtime;
    return context;
}

dicke::Variant variant_of(const RunConfig& c) {
    return c.variant == "literature" ? dicke::Variant::literature : dicke::Variant::paper;
}

analysis::ModelPoint base_point(const RunConfig& c) {
    analysis::ModelPoint p;
    p.gamma = c.gamma;
    p.lambda = c.lambda;
    p.n_sites = c.n_sites;
    p.delta_lambda = c.delta_lambda;
    p.delta_gamma = c.delta_gamma;
    p.critical_lambda = c.critical_lambda;
    p.omega0 = c.omega0;
    p.omega = c.omega;
    p.variant = variant_of(c);
    p.t_max = c.t_max;
    p.t_points = c.t_points;
    return p;
}

ValueKind xy_kind(const RunConfig& c, std::initializer_list<ValueKind> allowed) {
    ValueKind kind;
    try {
        kind = analysis::value_kind_from_string(c.quantity);
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    for (auto k : allowed)
        if (k == kind)
            return kind;
    throw UsageError("quantity '" + c.quantity + "' is not available for " + c.command);
}

std::vector<double> to_doubles(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

// ---- subcommands; each writes its result to `os` ----

void xy_grid(const RunConfig& c, std::ostream& os) {
    SweepSpec spec;
    spec.kind = xy_kind(c, {ValueKind::overlap, ValueKind::s_lambda, ValueKind::s_gamma, ValueKind::echo_min});
    spec.base = base_point(c);
    spec.axes = {{"gamma", analysis::linear_grid(c.gamma_min, c.gamma_max, static_cast<std::size_t>(c.gamma_points))},
                 {"lambda", analysis::linear_grid(c.lambda_min, c.lambda_max, static_cast<std::size_t>(c.lambda_points))}};
    write_csv(os, analysis::grid_sweep(spec, c.workers));
}

json scaling_report(const RunConfig& c, std::ostream* table_out) {
    const auto start = Clock::now();
    SweepSpec spec;
    spec.kind = xy_kind(c, {ValueKind::s_lambda, ValueKind::s_gamma});
    spec.base = base_point(c);
    spec.axes = {{"n_sites", to_doubles(c.n_list)}};
    const auto table = analysis::grid_sweep(spec, c.workers);
    if (table_out) {
        write_csv(*table_out, table);
        return {};
    }
    const auto fit = analysis::scaling_fit(table);
    return fit_report(fit, seconds_since(start),
                      {{"quantity", c.quantity}, {"abscissa", "n_sites"}, {"gamma", c.gamma}, {"lambda", c.lambda}});
}

json asymptotic_report(const RunConfig& c, std::ostream* table_out) {
    const auto start = Clock::now();
    SweepSpec spec;
    spec.kind = xy_kind(c, {ValueKind::s_lambda, ValueKind::s_gamma});
    spec.base = base_point(c);
    const auto grid = analysis::log_grid(c.window_min, c.window_max, static_cast<std::size_t>(c.points));
    const bool over_field = spec.kind == ValueKind::s_lambda;
    spec.axes = {{over_field ? "distance" : "gamma", grid}};
    const auto table = analysis::grid_sweep(spec, c.workers);
    if (table_out) {
        write_csv(*table_out, table);
        return {};
    }
    const auto fit = analysis::asymptotic_fit(table, c.window_min, c.window_max);
    json context{{"quantity", c.quantity}, {"n_sites", c.n_sites}};
    if (over_field) {
        context["abscissa"] = "distance";
        context["critical_lambda"] = c.critical_lambda;
        context["gamma"] = c.gamma;
    } else {
        context["abscissa"] = "gamma";
        context["lambda"] = c.lambda;
    }
    return fit_report(fit, seconds_since(start), context);
}

void xy_overlap(const RunConfig& c, std::ostream& os) {
    const xy::XYParams p(c.gamma, c.lambda, c.n_sites);
    const auto q = p.shifted(c.delta_gamma, c.delta_lambda);
    const auto r = xy::ground_state_overlap(p, q);
    if (c.format == "json") {
        os << json{{"gamma", c.gamma}, {"lambda", c.lambda}, {"n_sites", c.n_sites},
                   {"delta_gamma", c.delta_gamma}, {"delta_lambda", c.delta_lambda},
                   {"overlap", r.overlap}, {"log_overlap", r.degenerate ? json(nullptr) : json(r.log_overlap)},
                   {"degenerate", r.degenerate}}
                  .dump()
           << '\n';
        return;
    }
    os << "gamma,lambda,n_sites,delta_gamma,delta_lambda,overlap,log_overlap,degenerate\n"
       << number(c.gamma) << ',' << number(c.lambda) << ',' << c.n_sites << ',' << number(c.delta_gamma) << ','
       << number(c.delta_lambda) << ',' << number(r.overlap) << ',' << number(r.log_overlap) << ','
       << (r.degenerate ? "true" : "false") << '\n';
}

void dicke_overlap(const RunConfig& c, std::ostream& os) {
    SweepSpec spec;
    spec.kind = ValueKind::dicke_overlap;
    spec.base = base_point(c);
    spec.axes = {{"lambda", analysis::linear_grid(c.lambda_min, c.lambda_max, static_cast<std::size_t>(c.lambda_points))}};
    write_csv(os, analysis::grid_sweep(spec, c.workers));
}

json dicke_exponent_report(const RunConfig& c) {
    const auto start = Clock::now();
    const dicke::DickeParams p(c.omega0, c.omega, 0.0, variant_of(c));
    const auto fit = analysis::dicke_exponent(p, c.delta_lambda, c.window_min, c.window_max,
                                              static_cast<std::size_t>(c.points), c.workers);
    return fit_report(fit, seconds_since(start),
                      {{"quantity", "dicke_overlap"}, {"abscissa", "distance"}, {"omega0", c.omega0},
                       {"omega", c.omega}, {"variant", c.variant}, {"delta_lambda", c.delta_lambda},
                       {"critical_coupling", dicke::critical_coupling(p)}});
}

void loschmidt(const RunConfig& c, std::ostream& os) {
    const xy::XYParams p(c.gamma, c.lambda, c.n_sites);
    const auto times = analysis::linear_grid(0.0, c.t_max, static_cast<std::size_t>(c.t_points));
    const auto echo = dynamics::loschmidt_echo(p, p.shifted(c.delta_gamma, c.delta_lambda), times);
    os << "t,echo\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        os << number(echo.times[i]) << ',' << number(echo.values[i]) << '\n';
}

int verify_all(const RunConfig& c, std::ostream& os) {
    bool ok = true;
    for (const auto& r : verify::run_all(c.seed)) {
        os << (r.passed() ? "PASS" : "FAIL") << "  max deviation " << number(r.max_deviation) << "  tolerance "
           << number(r.tolerance) << "  samples " << r.samples << "  " << r.name << '\n';
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

// ---- reproduction recipes ----

std::int64_t recipe_sites(const RunConfig& c, const Settings& flags, double nominal_sites) {
    if (flags.contains("n_sites"))
        return c.n_sites;
    return odd_sites_at_least(static_cast<std::int64_t>(std::llround(nominal_sites * c.scale)));
}

void reproduce(RunConfig c, const Settings& flags, std::ostream& os) {
    const std::string& r = c.recipe;
    if (r == "fig1") {
        const dicke::DickeParams p(1.0, 1.0, 0.0);
        c.omega0 = c.omega = 1.0;
        if (!flags.contains("delta_lambda") && !flags.contains("delta"))
            c.delta_lambda = 1e-6;
        c.lambda_min = 0.0;
        c.lambda_max = dicke::critical_coupling(p) - 2.0 * std::abs(c.delta_lambda);
        if (!flags.contains("lambda_points"))
            c.lambda_points = 2001;
        dicke_overlap(c, os);
    } else if (r == "fig2a" || r == "fig2b" || r == "fig2c") {
        c.n_sites = recipe_sites(c, flags, 1e6);
        c.quantity = r == "fig2a" ? "overlap" : r == "fig2b" ? "s_lambda" : "s_gamma";
        c.gamma_min = c.lambda_min = -1.5;
        c.gamma_max = c.lambda_max = 1.5;
        c.gamma_points = c.lambda_points = 61;
        xy_grid(c, os);
    } else if (r == "scaling") {
        struct Claim { const char* label; const char* quantity; double gamma, lambda; };
        for (const Claim& cl : {Claim{"S_lambda ~ N^2 at lambda = 1", "s_lambda", 1.0, 1.0},
                                Claim{"S_lambda ~ N off criticality", "s_lambda", 1.0, 0.5},
                                Claim{"S_gamma ~ N at lambda = 1", "s_gamma", 0.5, 1.0}}) {
            c.quantity = cl.quantity;
            c.gamma = cl.gamma;
            c.lambda = cl.lambda;
            auto report = scaling_report(c, nullptr);
            report["claim"] = cl.label;
            os << report.dump() << '\n';
        }
    } else if (r == "asymptotic") {
        c.n_sites = recipe_sites(c, flags, 1e5);
        c.window_min = 1e-3;
        c.window_max = 1e-1;
        c.quantity = "s_lambda";
        c.gamma = 0.5;
        c.critical_lambda = 1.0;
        auto alpha = asymptotic_report(c, nullptr);
        alpha["claim"] = "S_lambda ~ |1 - lambda|^-alpha, alpha -> 1";
        os << alpha.dump() << '\n';
        c.quantity = "s_gamma";
        c.lambda = 0.5;
        auto beta = asymptotic_report(c, nullptr);
        beta["claim"] = "S_gamma ~ gamma^-beta, beta -> 1";
        os << beta.dump() << '\n';
    } else if (r == "dicke-exponent") {
        c.omega0 = c.omega = 1.0;
        if (!flags.contains("delta_lambda") && !flags.contains("delta"))
            c.delta_lambda = 1e-2;
        c.window_min = 1e-8;
        c.window_max = 1e-4;
        auto report = dicke_exponent_report(c);
        report["claim"] = "overlap ~ (lambda_c - lambda)^(1/8)";
        os << report.dump() << '\n';
    } else if (r == "echo") {
        c.n_sites = recipe_sites(c, flags, 1e3);
        c.gamma = 1.0;
        if (!flags.contains("delta_lambda") && !flags.contains("delta"))
            c.delta_lambda = 1e-3;
        c.delta_gamma = 0.0;
        const auto times = analysis::linear_grid(0.0, c.t_max, static_cast<std::size_t>(c.t_points));
        const xy::XYParams near(1.0, 1.05, c.n_sites), far(1.0, 1.5, c.n_sites);
        const auto a = dynamics::loschmidt_echo(near, near.shifted(0.0, c.delta_lambda), times);
        const auto b = dynamics::loschmidt_echo(far, far.shifted(0.0, c.delta_lambda), times);
        os << "t,echo_lambda_1.05,echo_lambda_1.5\n";
        for (std::size_t i = 0; i < times.size(); ++i)
            os << number(times[i]) << ',' << number(a.values[i]) << ',' << number(b.values[i]) << '\n';
    } else {
        throw UsageError("unknown recipe '" + r + "' (fig1, fig2a, fig2b, fig2c, scaling, asymptotic, dicke-exponent, echo)");
    }
}

struct Command {
    std::string name;
    std::string description;
    std::vector<std::string> keys;
    Settings defaults;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> list{
        {"xy-grid", "XY overlap or susceptibility over a (gamma, lambda) grid -> CSV",
         {"quantity", "gamma_min", "gamma_max", "gamma_points", "lambda_min", "lambda_max", "lambda_points",
          "n_sites", "delta", "delta_lambda", "delta_gamma", "t_max", "t_points", "workers", "output"},
         {{"quantity", "overlap"}}},
        {"xy-scaling", "power-law fit of S_lambda or S_gamma against N -> JSON (csv: raw table)",
         {"quantity", "gamma", "lambda", "n_list", "workers", "output", "format"},
         {{"quantity", "s_lambda"}, {"gamma", "1"}, {"lambda", "1"}, {"format", "json"}}},
        {"xy-asymptotic", "power-law fit near a critical line -> JSON (csv: raw table)",
         {"quantity", "gamma", "lambda", "n_sites", "critical_lambda", "window_min", "window_max", "points",
          "workers", "output", "format"},
         {{"quantity", "s_lambda"}, {"gamma", "0.5"}, {"n_sites", "100001"}, {"format", "json"}}},
        {"xy-overlap", "exact overlap between two XY ground states",
         {"gamma", "lambda", "n_sites", "delta", "delta_lambda", "delta_gamma", "output", "format"},
         {{"format", "csv"}}},
        {"dicke-overlap", "Dicke normal-phase overlap along lambda -> CSV",
         {"omega0", "omega", "variant", "delta_lambda", "lambda_min", "lambda_max", "lambda_points", "workers",
          "output"},
         {{"lambda_min", "0"}, {"lambda_max", "0.4999"}, {"lambda_points", "500"}}},
        {"dicke-exponent", "overlap exponent at the Dicke critical point -> JSON",
         {"omega0", "omega", "variant", "delta_lambda", "window_min", "window_max", "points", "workers", "output"},
         {{"delta_lambda", "1e-2"}, {"window_min", "1e-8"}, {"window_max", "1e-4"}, {"points", "17"}}},
        {"loschmidt", "Loschmidt echo of g(q + delta) under H(q) -> CSV",
         {"gamma", "lambda", "n_sites", "delta", "delta_lambda", "delta_gamma", "t_max", "t_points", "output"},
         {{"lambda", "1.05"}, {"delta_lambda", "1e-3"}, {"delta_gamma", "0"}}},
        {"verify", "run the oracle-equivalence suites", {"seed"}, {}},
        {"reproduce", "named recipes: fig1 fig2a fig2b fig2c scaling asymptotic dicke-exponent echo",
         {"n_sites", "delta", "delta_lambda", "lambda_points", "scale", "n_list", "t_max", "t_points", "workers",
          "output"},
         {{"t_max", "50"}, {"t_points", "501"}}},
    };
    return list;
}

std::string flag_name(std::string key) {
    for (char& ch : key)
        if (ch == '_')
            ch = '-';
    return "--" + key;
}

int dispatch(const RunConfig& c, const Settings& flags, std::ostream& os) {
    if (c.command == "xy-grid") xy_grid(c, os);
    else if (c.command == "xy-scaling") {
        if (c.format == "csv") scaling_report(c, &os);
        else os << scaling_report(c, nullptr).dump() << '\n';
    } else if (c.command == "xy-asymptotic") {
        if (c.format == "csv") asymptotic_report(c, &os);
        else os << asymptotic_report(c, nullptr).dump() << '\n';
    } else if (c.command == "xy-overlap") xy_overlap(c, os);
    else if (c.command == "dicke-overlap") dicke_overlap(c, os);
    else if (c.command == "dicke-exponent") os << dicke_exponent_report(c).dump() << '\n';
    else if (c.command == "loschmidt") loschmidt(c, os);
    else if (c.command == "verify") return verify_all(c, os);
    else if (c.command == "reproduce") reproduce(c, flags, os);
    return 0;
}

} // namespace

std::int64_t odd_sites_at_least(std::int64_t n) {
    n = std::max<std::int64_t>(n, 3);
    return n % 2 == 0 ? n + 1 : n;
}

void write_csv(std::ostream& os, const analysis::SweepTable& table) {
    for (const auto& axis : table.axes)
        os << axis.name << ',';
    os << analysis::to_string(table.kind) << ",status\n";
    for (const auto& row : table.rows) {
        for (double c : row.coords)
            os << number(c) << ',';
        os << number(row.value) << ',' << (row.ok() ? "ok" : "error: " + csv_safe(row.error)) << '\n';
    }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gsfid: ground-state overlap diagnostics for quantum phase transitions"};
    app.require_subcommand(1);

    std::map<std::string, std::map<std::string, std::string>> storage;
    std::map<std::string, std::string> config_paths;
    std::string recipe;
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.description);
        for (const auto& key : cmd.keys)
            sub->add_option(flag_name(key), storage[cmd.name][key], key);
        sub->add_option("--config", config_paths[cmd.name], "flat key = value file; flags take precedence");
        if (cmd.name == "reproduce")
            sub->add_option("recipe", recipe, "recipe name")->required();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Command* chosen = nullptr;
    for (const auto& cmd : commands())
        if (app.got_subcommand(cmd.name))
            chosen = &cmd;

    Settings flags;
    auto* sub = app.get_subcommand(chosen->name);
    for (const auto& key : chosen->keys)
        if (sub->get_option(flag_name(key))->count() > 0)
            flags[key] = storage[chosen->name][key];

    RunConfig config;
    try {
        if (chosen->name == "reproduce" && flags.contains("n_sites")) {
            // Recipes take round sizes such as 100000; the chain needs N = 2M + 1.
            const auto n = std::llround(std::stod(flags["n_sites"]));
            if (n % 2 == 0) {
                flags["n_sites"] = std::to_string(odd_sites_at_least(n));
                err << "note: n_sites " << n << " rounded up to odd " << flags["n_sites"] << "\n";
            }
        }
        config = merge_config(config_paths[chosen->name], flags, chosen->defaults);
        config.command = chosen->name;
        config.recipe = recipe;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::ostringstream buffer;
        const int status = dispatch(config, flags, buffer);
        if (config.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file)
                throw std::runtime_error("cannot open output file '" + config.output + "'");
            file << buffer.str();
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gsfid::cli
