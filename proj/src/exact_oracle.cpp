#include "gsfid/exact_oracle.hpp"

#include "gsfid/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace gsfid::oracle {

using cd = std::complex<double>;

namespace {

Eigen::Matrix2cd pair_hamiltonian(const xy::XYParams& p, std::int64_t k) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p.n_sites());
    const double eps = std::cos(x) - p.lambda();
    const double coupling = p.gamma() * std::sin(x);
    Eigen::Matrix2cd h;
    h << cd(-eps, 0.0), cd(0.0, -coupling),
         cd(0.0, coupling), cd(eps, 0.0);
    return h;
}

// Global phase chosen so the first nonzero component is real and positive.
Eigen::Vector2cd fix_phase(Eigen::Vector2cd v) {
    constexpr double tiny = 4.0 * std::numeric_limits<double>::epsilon();
    const cd lead = std::abs(v(0)) > tiny ? v(0) : v(1);
    return v * (std::abs(lead) / lead);
}

} // namespace

ModeSector mode_sector(const xy::XYParams& p, std::int64_t k) {
    if (k < 1 || k > p.modes())
        throw ParameterError("mode index " + std::to_string(k) + " outside 1.." + std::to_string(p.modes()));
    ModeSector out;
    out.k = k;
    out.hamiltonian = pair_hamiltonian(p, k);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(out.hamiltonian);
    out.energies = {solver.eigenvalues()(0), solver.eigenvalues()(1)};
    out.ground = fix_phase(solver.eigenvectors().col(0).normalized());
    out.degenerate = out.energies[1] - out.energies[0] == 0.0;
    return out;
}

std::optional<double> overlap_oracle(const xy::XYParams& p, const xy::XYParams& q) {
    if (p.n_sites() != q.n_sites())
        throw ParameterError("overlap requires equal n_sites");
    double product = 1.0;
    for (std::int64_t k = 1; k <= p.modes(); ++k) {
        const auto a = mode_sector(p, k);
        const auto b = mode_sector(q, k);
        if (a.degenerate || b.degenerate)
            return std::nullopt;
        product *= std::abs(a.ground.dot(b.ground));
    }
    return product;
}

double mode_return_probability(const xy::XYParams& ham, const xy::XYParams& state, std::int64_t k,
                               double t) {
    const auto evolve = mode_sector(ham, k);
    const auto start = mode_sector(state, k);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(evolve.hamiltonian);
    const Eigen::Matrix2cd& vecs = solver.eigenvectors();
    Eigen::Vector2cd phases;
    for (int i = 0; i < 2; ++i)
        phases(i) = std::exp(cd(0.0, -solver.eigenvalues()(i) * t));
    const Eigen::Matrix2cd propagator = vecs * phases.asDiagonal() * vecs.adjoint();
    return std::norm(start.ground.dot(propagator * start.ground));
}

ExcitationSpectrum projected_dos(const xy::XYParams& p, const xy::XYParams& q) {
    if (p.n_sites() != q.n_sites())
        throw ParameterError("projected_dos requires equal n_sites");
    const std::int64_t m = p.modes();
    if (m > max_enumerated_modes)
        throw ResourceError("projected_dos enumerates 2^M patterns; M = " + std::to_string(m) +
                            " exceeds " + std::to_string(max_enumerated_modes));

    // Per-pair probabilities of staying in / leaving the ground state of H_k(p).
    std::vector<double> gap(m), stay(m), leave(m);
    for (std::int64_t k = 1; k <= m; ++k) {
        const auto a = mode_sector(p, k);
        const auto b = mode_sector(q, k);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(a.hamiltonian);
        const auto i = static_cast<std::size_t>(k - 1);
        gap[i] = a.energies[1] - a.energies[0];
        stay[i] = std::norm(solver.eigenvectors().col(0).dot(b.ground));
        leave[i] = std::norm(solver.eigenvectors().col(1).dot(b.ground));
    }

    ExcitationSpectrum out;
    const std::size_t count = std::size_t{1} << m;
    out.levels.resize(count);
    out.first_excited = std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < count; ++mask) {
        double energy = 0.0;
        double weight = 1.0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
            if (mask & (std::size_t{1} << i)) {
                energy += gap[i];
                weight *= leave[i];
            } else {
                weight *= stay[i];
            }
        }
        out.levels[mask] = {energy, weight};
        if (energy > 0.0 && energy < out.first_excited)
            out.first_excited = energy;
    }
    return out;
}

double gaussian_quadrature_overlap(const dicke::GaussianState& g, const dicke::GaussianState& h) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr double tolerance = 1e-10;
    constexpr unsigned max_depth = 15;

    const auto& a = g.matrix();
    const auto& b = h.matrix();
    const double norm = std::sqrt(std::sqrt(g.determinant() * h.determinant())) / std::numbers::pi;
    const dicke::Sym2 q{a.xx + b.xx, a.xy + b.xy, a.yy + b.yy};

    // Integrate over the square where exp(-<R, Q R>/2) can exceed e^-50.
    const double half_trace = 0.5 * q.trace();
    const double softest = half_trace - std::sqrt(half_trace * half_trace - q.det());
    if (!(softest > 0.0))
        throw NumericError("quadrature integrand is not a decaying Gaussian");
    const double reach = std::sqrt(100.0 / softest);

    double inner_error = 0.0;
    auto inner = [&](double x) {
        auto integrand = [&](double y) {
            return std::exp(-0.5 * (q.xx * x * x + 2.0 * q.xy * x * y + q.yy * y * y));
        };
        double err = 0.0;
        const double v = gauss_kronrod<double, 31>::integrate(integrand, -reach, reach, max_depth, 1e-12, &err);
        inner_error = std::max(inner_error, err);
        return v;
    };
    double outer_error = 0.0;
    const double value =
        norm * gauss_kronrod<double, 31>::integrate(inner, -reach, reach, max_depth, 1e-12, &outer_error);
    const double abs_err = norm * (outer_error + 2.0 * reach * inner_error);
    if (!std::isfinite(value) || abs_err > tolerance) {
        std::ostringstream msg;
        msg << "quadrature did not converge: value " << value << ", error estimate " << abs_err << " > "
            << tolerance << " (integration half-width " << reach << ")";
        throw NumericError(msg.str());
    }
    return value;
}

std::array<double, 2> coupled_oscillator_energies(double omega0, double omega, double lambda) {
    Eigen::Matrix2d v;
    const double c = 2.0 * lambda * std::sqrt(omega * omega0);
    v << omega * omega, c, c, omega0 * omega0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(v);
    const auto e = solver.eigenvalues();
    if (!(e(0) > 0.0))
        throw PhaseError("coupled oscillators are unstable at this coupling");
    return {std::sqrt(e(0)), std::sqrt(e(1))};
}

} // namespace gsfid::oracle
