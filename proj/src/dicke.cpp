#include "gsfid/dicke.hpp"

#include "gsfid/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace gsfid::dicke {

DickeParams::DickeParams(double omega0, double omega, double lambda, Variant variant)
    : omega0_(omega0), omega_(omega), lambda_(lambda), variant_(variant) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw ParameterError("omega0 must be a positive finite number");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw ParameterError("omega must be a positive finite number");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ParameterError("lambda must be a nonnegative finite number");
}

namespace {

struct Coefficients {
    double sum_sq;  // w^2 + w0^2
    double diff_sq; // w^2 - w0^2
    double kappa;   // coupling weight in the discriminant
    double root;    // coupling where S^2 - R^2 vanishes
};

Coefficients coefficients(double omega0, double omega, Variant variant) {
    const double w2 = omega * omega;
    const double w02 = omega0 * omega0;
    if (variant == Variant::paper)
        return {w2 + w02, w2 - w02, w2 * w02, 0.5};
    return {w2 + w02, w2 - w02, omega * omega0, 0.5 * std::sqrt(omega * omega0)};
}

double discriminant(const Coefficients& c, double lambda) {
    return std::sqrt(c.diff_sq * c.diff_sq + 16.0 * lambda * lambda * c.kappa);
}

// S^2 - R^2 = 4 w^2 w0^2 - 16 lambda^2 kappa = 16 kappa (root - lambda)(root + lambda)
double gap_squared(const Coefficients& c, double lambda) {
    const double r = discriminant(c, lambda);
    return 16.0 * c.kappa * (c.root - lambda) * (c.root + lambda) / (2.0 * (c.sum_sq + r));
}

double upper_energy(const Coefficients& c, double lambda) {
    return std::sqrt(0.5 * (c.sum_sq + discriminant(c, lambda)));
}

double squeeze(const DickeParams& p, double lambda) {
    const double s = p.omega() * p.omega() + p.omega0() * p.omega0();
    return 0.5 * std::atan(4.0 * lambda * std::sqrt(p.omega() * p.omega0()) / s);
}

// Shortest text that reads back to the same double.
std::string shortest(double x) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, r.ptr};
}

} // namespace

GaussianState GaussianState::from_matrix(const Sym2& a) {
    if (!std::isfinite(a.xx) || !std::isfinite(a.xy) || !std::isfinite(a.yy))
        throw DomainError("Gaussian matrix has non-finite entries");
    if (!(a.xx > 0.0) || !(a.det() > 0.0)) {
        throw DomainError("Gaussian matrix is not positive-definite: [[" + shortest(a.xx) + ", " +
                          shortest(a.xy) + "], [" + shortest(a.xy) + ", " + shortest(a.yy) + "]]");
    }
    return GaussianState(a);
}

GaussianState GaussianState::from_spectrum(const NormalSpectrum& spectrum) {
    const double c = std::cos(spectrum.squeeze_angle);
    const double s = std::sin(spectrum.squeeze_angle);
    const double lo = spectrum.eps_minus;
    const double hi = spectrum.eps_plus;
    return from_matrix({lo * c * c + hi * s * s, (hi - lo) * s * c, lo * s * s + hi * c * c});
}

double lower_gap_squared(const DickeParams& p) {
    return gap_squared(coefficients(p.omega0(), p.omega(), p.variant()), p.lambda());
}

double critical_coupling(const DickeParams& p) {
    const auto c = coefficients(p.omega0(), p.omega(), p.variant());
    double lo = 0.0;
    double hi = 1.0;
    while (gap_squared(c, hi) > 0.0)
        hi *= 2.0;
    // Invariant: gap^2(lo) > 0 >= gap^2(hi).  Stop when no double lies between.
    for (;;) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        (gap_squared(c, mid) > 0.0 ? lo : hi) = mid;
    }
    return hi;
}

NormalSpectrum normal_spectrum(const DickeParams& p) {
    const auto c = coefficients(p.omega0(), p.omega(), p.variant());
    const double g2 = gap_squared(c, p.lambda());
    if (!(g2 > 0.0)) {
        throw PhaseError("normal phase only: lambda = " + shortest(p.lambda()) +
                         " is at or beyond the critical coupling");
    }
    return {std::sqrt(g2), upper_energy(c, p.lambda()), squeeze(p, p.lambda())};
}

GaussianState ground_state(const DickeParams& p) { return GaussianState::from_spectrum(normal_spectrum(p)); }

double gaussian_overlap(const GaussianState& g, const GaussianState& h) {
    const Sym2& a = g.matrix();
    const Sym2& b = h.matrix();
    const double det_a = a.det();
    const double det_b = b.det();
    if (!(a.xx > 0.0 && det_a > 0.0 && b.xx > 0.0 && det_b > 0.0))
        throw DomainError("gaussian_overlap requires positive-definite matrices");
    const Sym2 sum{a.xx + b.xx, a.xy + b.xy, a.yy + b.yy};
    // sqrt(sqrt(d*d)) == sqrt(d) exactly, so identical states give exactly 1.
    const double value = 2.0 * std::sqrt(std::sqrt(det_a * det_b)) / std::sqrt(sum.det());
    return std::min(value, 1.0);
}

std::vector<LambdaOverlap> overlap_vs_lambda(const DickeParams& p, double delta_lambda,
                                             std::span<const double> lambdas) {
    std::vector<LambdaOverlap> out;
    out.reserve(lambdas.size());
    for (const double lambda : lambdas) {
        try {
            const auto g = ground_state(p.with_lambda(lambda));
            const auto h = ground_state(p.with_lambda(lambda + delta_lambda));
            out.push_back({lambda, gaussian_overlap(g, h)});
        } catch (const PhaseError& e) {
            throw PhaseError("grid point lambda = " + shortest(lambda) + " (partner " +
                             shortest(lambda + delta_lambda) + "): " + e.what());
        }
    }
    return out;
}

double critical_trace_limit(const DickeParams& p, double delta_lambda) {
    if (!(delta_lambda > 0.0))
        throw ParameterError("delta_lambda must be positive");
    const double lambda_c = critical_coupling(p);
    if (delta_lambda > lambda_c)
        throw ParameterError("delta_lambda exceeds the critical coupling");
    const auto c = coefficients(p.omega0(), p.omega(), p.variant());

    const double eps_plus_c = upper_energy(c, lambda_c);
    const double angle_c = squeeze(p, lambda_c);
    const auto partner = normal_spectrum(p.with_lambda(lambda_c - delta_lambda));

    const double sc = std::sin(angle_c), cc = std::cos(angle_c);
    const double st = std::sin(partner.squeeze_angle), ct = std::cos(partner.squeeze_angle);
    const double across = sc * ct - cc * st; // sin(angle_c - angle~)
    const double along = sc * st + cc * ct;  // cos(angle_c - angle~)
    return eps_plus_c / (partner.eps_plus * partner.eps_minus) *
           (across * across * partner.eps_plus + along * along * partner.eps_minus);
}

} // namespace gsfid::dicke
