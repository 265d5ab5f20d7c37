#include "gsfid/sweep.hpp"

#include "gsfid/dynamics.hpp"
#include "gsfid/errors.hpp"
#include "gsfid/xy_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

namespace gsfid::analysis {

std::string_view to_string(ValueKind kind) {
    switch (kind) {
    case ValueKind::overlap: return "overlap";
    case ValueKind::s_lambda: return "s_lambda";
    case ValueKind::s_gamma: return "s_gamma";
    case ValueKind::echo_min: return "echo_min";
    case ValueKind::dicke_overlap: return "dicke_overlap";
    }
    return "unknown";
}

ValueKind value_kind_from_string(std::string_view name) {
    for (auto kind : {ValueKind::overlap, ValueKind::s_lambda, ValueKind::s_gamma, ValueKind::echo_min,
                      ValueKind::dicke_overlap})
        if (to_string(kind) == name)
            return kind;
    throw ParameterError("unknown value kind '" + std::string(name) + "'");
}

namespace {

using MomentumCache = std::map<std::int64_t, xy::Momenta>;

std::int64_t as_count(double v, const std::string& name) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 9.0e15)
        throw ParameterError(name + " must be a positive integer");
    return static_cast<std::int64_t>(v);
}

void assign(ModelPoint& point, const std::string& name, double v) {
    if (name == "gamma") point.gamma = v;
    else if (name == "lambda") point.lambda = v;
    else if (name == "n_sites") point.n_sites = as_count(v, name);
    else if (name == "delta_lambda") point.delta_lambda = v;
    else if (name == "delta_gamma") point.delta_gamma = v;
    else if (name == "omega0") point.omega0 = v;
    else if (name == "omega") point.omega = v;
    else if (name == "distance") {
        point.distance = v;
        point.use_distance = true;
    } else
        throw ParameterError("unknown sweep axis '" + name + "'");
}

double evaluate_cell(ValueKind kind, const ModelPoint& pt, const MomentumCache& cache) {
    if (kind == ValueKind::dicke_overlap) {
        const dicke::DickeParams base(pt.omega0, pt.omega, 0.0, pt.variant);
        const double lambda = pt.use_distance ? dicke::critical_coupling(base) - pt.distance : pt.lambda;
        const auto g = dicke::ground_state(base.with_lambda(lambda));
        const auto h = dicke::ground_state(base.with_lambda(lambda + pt.delta_lambda));
        return dicke::gaussian_overlap(g, h);
    }

    const double lambda = pt.use_distance ? pt.critical_lambda - pt.distance : pt.lambda;
    const xy::XYParams p(pt.gamma, lambda, pt.n_sites);
    std::optional<xy::Momenta> local;
    const auto it = cache.find(pt.n_sites);
    const xy::Momenta& momenta = it != cache.end() ? it->second : local.emplace(pt.n_sites);

    switch (kind) {
    case ValueKind::overlap:
        return xy::ground_state_overlap(p, p.shifted(pt.delta_gamma, pt.delta_lambda), momenta).overlap;
    case ValueKind::s_lambda:
        return xy::s_lambda(p, momenta);
    case ValueKind::s_gamma:
        return xy::s_gamma(p, momenta);
    case ValueKind::echo_min: {
        if (pt.t_points < 1)
            throw ParameterError("t_points must be positive");
        const auto times = linear_grid(0.0, pt.t_max, static_cast<std::size_t>(pt.t_points));
        const auto echo = dynamics::loschmidt_echo(p, p.shifted(pt.delta_gamma, pt.delta_lambda), times);
        return *std::min_element(echo.values.begin(), echo.values.end());
    }
    case ValueKind::dicke_overlap:
        break;
    }
    throw ParameterError("unhandled value kind");
}

std::size_t cell_count(const SweepSpec& spec) {
    std::size_t n = 1;
    for (const auto& axis : spec.axes) {
        if (axis.values.empty())
            throw ParameterError("sweep axis '" + axis.name + "' is empty");
        n *= axis.values.size();
    }
    return n;
}

// Validates axis names up front and builds the shared momentum tables.
MomentumCache prepare(const SweepSpec& spec) {
    ModelPoint probe = spec.base;
    for (const auto& axis : spec.axes)
        assign(probe, axis.name, axis.values.front());

    MomentumCache cache;
    if (spec.kind == ValueKind::dicke_overlap)
        return cache;
    std::vector<std::int64_t> sizes{spec.base.n_sites};
    for (const auto& axis : spec.axes)
        if (axis.name == "n_sites")
            for (double v : axis.values)
                sizes.push_back(as_count(v, axis.name));
    for (auto n : sizes)
        if (n >= 3 && n % 2 == 1 && !cache.contains(n))
            cache.emplace(n, xy::Momenta(n));
    return cache;
}

SweepRow evaluate_row(const SweepSpec& spec, const MomentumCache& cache, std::size_t index) {
    SweepRow row;
    row.coords.resize(spec.axes.size());
    ModelPoint point = spec.base;
    // Row-major: last axis varies fastest.
    std::size_t rest = index;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
        const auto& axis = spec.axes[a];
        const std::size_t i = rest % axis.values.size();
        rest /= axis.values.size();
        row.coords[a] = axis.values[i];
    }
    try {
        for (std::size_t a = 0; a < spec.axes.size(); ++a)
            assign(point, spec.axes[a].name, row.coords[a]);
        row.value = evaluate_cell(spec.kind, point, cache);
    } catch (const std::exception& e) {
        row.value = std::numeric_limits<double>::quiet_NaN();
        row.error = e.what();
        if (row.error.empty())
            row.error = "evaluation failed";
    }
    return row;
}

} // namespace

double evaluate(ValueKind kind, const ModelPoint& point) { return evaluate_cell(kind, point, {}); }

SweepTable sweep_serial(const SweepSpec& spec) {
    const std::size_t n = cell_count(spec);
    const auto cache = prepare(spec);
    SweepTable table{spec.kind, spec.axes, std::vector<SweepRow>(n)};
    for (std::size_t i = 0; i < n; ++i)
        table.rows[i] = evaluate_row(spec, cache, i);
    return table;
}

SweepTable sweep_parallel(const SweepSpec& spec, int workers) {
    const std::size_t n = cell_count(spec);
    const auto cache = prepare(spec);
    SweepTable table{spec.kind, spec.axes, std::vector<SweepRow>(n)};
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(workers, 1))
    for (std::ptrdiff_t i = 0; i < count; ++i)
        table.rows[static_cast<std::size_t>(i)] = evaluate_row(spec, cache, static_cast<std::size_t>(i));
    return table;
}

SweepTable grid_sweep(const SweepSpec& spec, int workers) {
    return workers <= 1 ? sweep_serial(spec) : sweep_parallel(spec, workers);
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    if (count == 0)
        throw ParameterError("grid needs at least one point");
    if (count == 1)
        return {lo};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.back() = hi;
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > 0.0))
        throw ParameterError("log grid bounds must be positive");
    auto out = linear_grid(std::log(lo), std::log(hi), count);
    for (auto& v : out)
        v = std::exp(v);
    out.front() = lo;
    if (count > 1)
        out.back() = hi;
    return out;
}

} // namespace gsfid::analysis
