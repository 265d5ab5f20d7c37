#include "gsfid/fit.hpp"

#include "gsfid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gsfid::analysis {

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw FitError("abscissa and ordinate lengths differ");
    if (x.size() < 3)
        throw FitError("power-law fit needs at least 3 points");

    struct Point {
        double x, lx, ly;
        bool operator<(const Point& o) const { return x < o.x || (x == o.x && ly < o.ly); }
    };
    std::vector<Point> pts;
    pts.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw FitError("power-law fit needs positive finite values");
        pts.push_back({x[i], std::log(x[i]), std::log(y[i])});
    }
    std::sort(pts.begin(), pts.end());

    const auto n = static_cast<double>(pts.size());
    double mx = 0.0, my = 0.0;
    for (const auto& p : pts) {
        mx += p.lx;
        my += p.ly;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : pts) {
        sxx += (p.lx - mx) * (p.lx - mx);
        sxy += (p.lx - mx) * (p.ly - my);
        syy += (p.ly - my) * (p.ly - my);
    }
    if (sxx == 0.0)
        throw FitError("power-law fit needs distinct abscissae");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.amplitude = std::exp(my - fit.exponent * mx);
    double ss_res = 0.0;
    for (const auto& p : pts) {
        const double r = p.ly - (my + fit.exponent * (p.lx - mx));
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    fit.window_min = pts.front().x;
    fit.window_max = pts.back().x;
    fit.n_points = pts.size();
    return fit;
}

namespace {

std::size_t varying_axis(const SweepTable& table) {
    std::size_t found = table.axes.size();
    for (std::size_t a = 0; a < table.axes.size(); ++a) {
        if (table.axes[a].values.size() > 1) {
            if (found != table.axes.size())
                throw FitError("table has more than one varying axis");
            found = a;
        }
    }
    if (found == table.axes.size())
        throw FitError("table has no varying axis");
    return found;
}

} // namespace

PowerLawFit scaling_fit(const SweepTable& table) {
    const std::size_t a = varying_axis(table);
    if (table.axes[a].name != "n_sites")
        throw FitError("scaling fit runs over n_sites, not '" + table.axes[a].name + "'");
    std::vector<double> x, y;
    for (const auto& row : table.rows) {
        if (!row.ok())
            throw FitError("error cell at n_sites = " + std::to_string(row.coords[a]) + ": " + row.error);
        x.push_back(row.coords[a]);
        y.push_back(row.value);
    }
    if (x.size() < 4)
        throw FitError("scaling fit needs at least 4 system sizes");
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (!(*lo > 0.0) || std::log10(*hi / *lo) < 1.5)
        throw FitError("scaling fit needs system sizes spanning at least 1.5 decades");
    return fit_power_law(x, y);
}

PowerLawFit asymptotic_fit(const SweepTable& table, double window_min, double window_max) {
    const std::size_t a = varying_axis(table);
    if (!(window_min > 0.0) || !(window_max >= window_min))
        throw FitError("fit window must be positive and ordered");
    std::vector<double> x, y;
    double previous = 0.0;
    for (const auto& row : table.rows) {
        const double c = row.coords[a];
        if (!(c > previous))
            throw FitError("abscissa must be positive and strictly increasing");
        previous = c;
        if (c < window_min || c > window_max)
            continue;
        if (!row.ok())
            throw FitError("error cell inside fit window at " + table.axes[a].name + " = " +
                           std::to_string(c) + ": " + row.error);
        x.push_back(c);
        y.push_back(row.value);
    }
    if (x.size() < 6)
        throw FitError("asymptotic fit needs at least 6 points inside the window");
    return fit_power_law(x, y);
}

PowerLawFit dicke_exponent(const dicke::DickeParams& p, double delta_lambda, double distance_min,
                           double distance_max, std::size_t points, int workers) {
    if (!(delta_lambda > 0.0))
        throw ParameterError("delta_lambda must be positive");
    SweepSpec spec;
    spec.kind = ValueKind::dicke_overlap;
    spec.base.omega0 = p.omega0();
    spec.base.omega = p.omega();
    spec.base.variant = p.variant();
    // Partner point on the normal-phase side: lambda - delta_lambda.
    spec.base.delta_lambda = -delta_lambda;
    spec.axes.push_back({"distance", log_grid(distance_min, distance_max, points)});
    return asymptotic_fit(grid_sweep(spec, workers), distance_min, distance_max);
}

} // namespace gsfid::analysis
