#pragma once

// Power laws y = amplitude * x^exponent by ordinary least squares on (ln x, ln y).

#include "gsfid/dicke.hpp"
#include "gsfid/sweep.hpp"

#include <cstddef>
#include <span>

namespace gsfid::analysis {

struct PowerLawFit {
    double amplitude = 0.0;
    double exponent = 0.0;
    double window_min = 0.0; ///< smallest abscissa used
    double window_max = 0.0; ///< largest abscissa used
    double r_squared = 0.0;
    std::size_t n_points = 0;
};

/// Needs >= 3 points with positive finite coordinates.  Points are sorted by
/// abscissa before accumulation, so input order does not affect the result.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Fit over the single non-trivial axis (must be n_sites) of the table.
/// Requires >= 4 points spanning >= 1.5 decades, no error cells.
PowerLawFit scaling_fit(const SweepTable& table);

/// Fit over the single non-trivial axis restricted to [window_min, window_max].
/// Abscissae must be positive and strictly increasing; >= 6 points in the
/// window; an error cell inside the window is a FitError.
PowerLawFit asymptotic_fit(const SweepTable& table, double window_min, double window_max);

/// Overlap <g(lambda_c - D)|g(lambda_c - D - delta_lambda)> against D on a
/// log-spaced grid of `points` values in [distance_min, distance_max].
PowerLawFit dicke_exponent(const dicke::DickeParams& p, double delta_lambda, double distance_min,
                           double distance_max, std::size_t points = 17, int workers = 1);

} // namespace gsfid::analysis
