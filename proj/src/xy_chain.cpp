#include "gsfid/xy_chain.hpp"

#include "gsfid/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gsfid::xy {

XYParams::XYParams(double gamma, double lambda, std::int64_t n_sites)
    : gamma_(gamma), lambda_(lambda), n_sites_(n_sites) {
    if (!std::isfinite(gamma) || !std::isfinite(lambda))
        throw ParameterError("gamma and lambda must be finite");
    if (n_sites < 3)
        throw ParameterError("n_sites must be >= 3");
    if (n_sites % 2 == 0)
        throw ParameterError("n_sites must be odd");
}

double Momenta::momentum(std::int64_t k, std::int64_t n_sites) {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_sites);
}

Momenta::Momenta(std::int64_t n_sites) : n_sites_(n_sites) {
    if (n_sites < 3 || n_sites % 2 == 0)
        throw ParameterError("n_sites must be odd and >= 3");
    const auto m = static_cast<std::size_t>((n_sites - 1) / 2);
    cos_.resize(m);
    sin_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = momentum(static_cast<std::int64_t>(i) + 1, n_sites);
        cos_[i] = std::cos(x);
        sin_[i] = std::sin(x);
    }
}

double bogoliubov_angle(double gamma_sin_x, double eps) {
    // +0.0 turns a negative zero into a positive one, so gamma = 0 gives
    // theta in {0, pi} rather than -pi.
    return std::atan2(gamma_sin_x + 0.0, eps);
}

namespace {

void require_same_size(const XYParams& p, const Momenta& momenta) {
    if (momenta.n_sites() != p.n_sites())
        throw ParameterError("momentum table built for a different n_sites");
}

// 1 / Lambda_k^2, or a SingularityError naming the mode.
double inverse_energy_squared(double eps, double gamma_sin_x, std::int64_t k) {
    const double denom = eps * eps + gamma_sin_x * gamma_sin_x;
    if (denom == 0.0)
        throw SingularityError("critical mode: Lambda_k = 0 at k = " + std::to_string(k), k);
    return 1.0 / denom;
}

double lambda_derivative(double gamma, double cos_x, double sin_x, double lambda, std::int64_t k) {
    const double eps = cos_x - lambda;
    const double gs = gamma * sin_x;
    return gs * inverse_energy_squared(eps, gs, k);
}

double gamma_derivative(double gamma, double cos_x, double sin_x, double lambda, std::int64_t k) {
    const double eps = cos_x - lambda;
    const double gs = gamma * sin_x;
    return -std::abs(sin_x) * eps * inverse_energy_squared(eps, gs, k);
}

} // namespace

std::vector<ModeData> mode_table(const XYParams& p) { return mode_table(p, Momenta(p.n_sites())); }

std::vector<ModeData> mode_table(const XYParams& p, const Momenta& momenta) {
    require_same_size(p, momenta);
    const auto c = momenta.cos();
    const auto s = momenta.sin();
    std::vector<ModeData> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto k = static_cast<std::int64_t>(i) + 1;
        const double eps = c[i] - p.lambda();
        const double gs = p.gamma() * s[i];
        out[i] = ModeData{k, Momenta::momentum(k, p.n_sites()), eps, std::hypot(eps, gs),
                          bogoliubov_angle(gs, eps)};
    }
    return out;
}

std::vector<double> angles(const XYParams& p, const Momenta& momenta) {
    require_same_size(p, momenta);
    const auto c = momenta.cos();
    const auto s = momenta.sin();
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = bogoliubov_angle(p.gamma() * s[i], c[i] - p.lambda());
    return out;
}

OverlapResult ground_state_overlap(const XYParams& p, const XYParams& q) {
    if (p.n_sites() != q.n_sites())
        throw ParameterError("overlap requires equal n_sites");
    return ground_state_overlap(p, q, Momenta(p.n_sites()));
}

OverlapResult ground_state_overlap(const XYParams& p, const XYParams& q, const Momenta& momenta) {
    if (p.n_sites() != q.n_sites())
        throw ParameterError("overlap requires equal n_sites");
    require_same_size(p, momenta);
    const auto c = momenta.cos();
    const auto s = momenta.sin();
    constexpr double two_pi = 2.0 * std::numbers::pi;

    double log_sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double t1 = bogoliubov_angle(p.gamma() * s[i], c[i] - p.lambda());
        const double t2 = bogoliubov_angle(q.gamma() * s[i], c[i] - q.lambda());
        const double half = 0.5 * std::remainder(t1 - t2, two_pi);
        // |half| = pi/2: the pair states are orthogonal (cos would give ~6e-17).
        if (std::abs(half) >= 0.5 * std::numbers::pi || std::cos(half) <= 0.0)
            return {-std::numeric_limits<double>::infinity(), 0.0, true};
        // ln cos u = log1p(-2 sin^2(u/2)) keeps precision when u is tiny.
        const double h = std::sin(0.5 * half);
        log_sum += std::log1p(-2.0 * h * h);
    }
    return {log_sum, std::exp(log_sum), false};
}

double dtheta_dlambda(const ModeData& m, const XYParams& p) {
    return lambda_derivative(p.gamma(), std::cos(m.momentum), std::sin(m.momentum), p.lambda(), m.k);
}

double dtheta_dgamma(const ModeData& m, const XYParams& p) {
    return gamma_derivative(p.gamma(), std::cos(m.momentum), std::sin(m.momentum), p.lambda(), m.k);
}

double s_lambda(const XYParams& p) { return s_lambda(p, Momenta(p.n_sites())); }

double s_lambda(const XYParams& p, const Momenta& momenta) {
    require_same_size(p, momenta);
    const auto c = momenta.cos();
    const auto s = momenta.sin();
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double d = lambda_derivative(p.gamma(), c[i], s[i], p.lambda(), static_cast<std::int64_t>(i) + 1);
        sum += d * d;
    }
    return sum;
}

double s_gamma(const XYParams& p) { return s_gamma(p, Momenta(p.n_sites())); }

double s_gamma(const XYParams& p, const Momenta& momenta) {
    require_same_size(p, momenta);
    const auto c = momenta.cos();
    const auto s = momenta.sin();
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double d = gamma_derivative(p.gamma(), c[i], s[i], p.lambda(), static_cast<std::int64_t>(i) + 1);
        sum += d * d;
    }
    return sum;
}

double overlap_gaussian_approx(const XYParams& p, Direction direction, double delta) {
    const double s = direction == Direction::lambda ? s_lambda(p) : s_gamma(p);
    return std::exp(-s * delta * delta / 8.0);
}

} // namespace gsfid::xy
