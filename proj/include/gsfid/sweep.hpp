#pragma once

// Cartesian parameter sweeps.  A sweep fixes every knob in a ModelPoint and
// overrides some of them from named axes; cells are laid out row-major over the
// axes in declaration order (first axis slowest).
//
// sweep_serial is the reference kernel.  sweep_parallel distributes cells over
// OpenMP threads; each cell is evaluated by the same sequential code, so the
// two produce bit-identical tables for any thread count.

#include "gsfid/dicke.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsfid::analysis {

enum class ValueKind { overlap, s_lambda, s_gamma, echo_min, dicke_overlap };

std::string_view to_string(ValueKind kind);
ValueKind value_kind_from_string(std::string_view name);

/// Every parameter a cell can depend on.
struct ModelPoint {
    // XY chain
    double gamma = 1.0;
    double lambda = 0.5;
    std::int64_t n_sites = 1001;
    double delta_lambda = 1e-6;
    double delta_gamma = 1e-6;
    double critical_lambda = 1.0; ///< reference for the "distance" axis (XY)
    // Dicke
    double omega0 = 1.0;
    double omega = 1.0;
    dicke::Variant variant = dicke::Variant::paper;
    // echo_min
    double t_max = 50.0;
    std::int64_t t_points = 501;
    // When set, lambda = critical - distance (Dicke: critical = bisected coupling).
    double distance = 0.0;
    bool use_distance = false;
};

/// Recognised names: gamma, lambda, n_sites, delta_lambda, delta_gamma, distance, omega0, omega.
struct Axis {
    std::string name;
    std::vector<double> values;
};

struct SweepSpec {
    ValueKind kind = ValueKind::overlap;
    ModelPoint base;
    std::vector<Axis> axes;
};

struct SweepRow {
    std::vector<double> coords;
    double value = 0.0;
    std::string error; ///< empty when the cell evaluated successfully

    bool ok() const noexcept { return error.empty(); }
};

struct SweepTable {
    ValueKind kind = ValueKind::overlap;
    std::vector<Axis> axes;
    std::vector<SweepRow> rows;
};

/// Evaluates one cell.  Throws the underlying module error on failure.
double evaluate(ValueKind kind, const ModelPoint& point);

/// Row count is the product of axis lengths.  Per-cell failures are recorded
/// in SweepRow::error, never dropped.
SweepTable sweep_serial(const SweepSpec& spec);
SweepTable sweep_parallel(const SweepSpec& spec, int workers);

/// Dispatches to sweep_serial for workers <= 1.
SweepTable grid_sweep(const SweepSpec& spec, int workers = 1);

std::vector<double> linear_grid(double lo, double hi, std::size_t count);
std::vector<double> log_grid(double lo, double hi, std::size_t count);

} // namespace gsfid::analysis
