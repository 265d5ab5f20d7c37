#include "gsfid/verify.hpp"

#include "gsfid/dicke.hpp"
#include "gsfid/dynamics.hpp"
#include "gsfid/exact_oracle.hpp"
#include "gsfid/xy_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gsfid::verify {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::int64_t odd_sites(Rng& rng, std::int64_t max_sites) {
    return 2 * std::uniform_int_distribution<std::int64_t>(1, (max_sites - 1) / 2)(rng) + 1;
}

xy::XYParams random_xy(Rng& rng, std::int64_t n) {
    return {uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5), n};
}

CheckResult xy_overlap(Rng& rng) {
    CheckResult r{"xy overlap: product formula vs per-mode eigenvectors", 0, 0.0, 1e-12};
    while (r.samples < 50) {
        const auto n = odd_sites(rng, 101);
        const auto p = random_xy(rng, n);
        // Half the pairs are close neighbours, half are far apart.
        const auto q = r.samples % 2 ? random_xy(rng, n)
                                     : p.shifted(uniform(rng, -0.05, 0.05), uniform(rng, -0.05, 0.05));
        const auto oracle = oracle::overlap_oracle(p, q);
        if (!oracle)
            continue;
        r.max_deviation = std::max(r.max_deviation, std::abs(xy::ground_state_overlap(p, q).overlap - *oracle));
        ++r.samples;
    }
    return r;
}

CheckResult gradients(Rng& rng) {
    CheckResult r{"d theta / d lambda, d theta / d gamma vs central differences (h = 1e-6)", 0, 0.0, 1e-5};
    constexpr double h = 1e-6;
    auto theta = [](const xy::XYParams& p, std::int64_t k) { return xy::mode_table(p)[static_cast<std::size_t>(k - 1)].theta; };
    while (r.samples < 1000) {
        const auto p = random_xy(rng, odd_sites(rng, 1001));
        const auto k = std::uniform_int_distribution<std::int64_t>(1, p.modes())(rng);
        const auto m = xy::mode_table(p)[static_cast<std::size_t>(k - 1)];
        const double dl = xy::dtheta_dlambda(m, p);
        const double dg = xy::dtheta_dgamma(m, p);
        // Relative error is meaningless at a zero of the derivative.
        if (m.energy < 0.1 || std::abs(dl) < 1e-3 || std::abs(dg) < 1e-3)
            continue;
        const double fd_l = (theta(p.with_lambda(p.lambda() + h), k) - theta(p.with_lambda(p.lambda() - h), k)) / (2 * h);
        const double fd_g = (theta(p.with_gamma(p.gamma() + h), k) - theta(p.with_gamma(p.gamma() - h), k)) / (2 * h);
        r.max_deviation = std::max({r.max_deviation, std::abs(fd_l - dl) / std::abs(dl),
                                    std::abs(std::abs(fd_g) - std::abs(dg)) / std::abs(dg)});
        ++r.samples;
    }
    return r;
}

CheckResult sector_gaps(Rng& rng) {
    CheckResult r{"mode sector gap vs 2 Lambda_k (relative)", 0, 0.0, 1e-10};
    while (r.samples < 1000) {
        const auto p = random_xy(rng, odd_sites(rng, 201));
        const auto k = std::uniform_int_distribution<std::int64_t>(1, p.modes())(rng);
        const auto m = xy::mode_table(p)[static_cast<std::size_t>(k - 1)];
        if (m.energy == 0.0)
            continue;
        const auto s = oracle::mode_sector(p, k);
        r.max_deviation = std::max(r.max_deviation, std::abs(s.energies[1] - s.energies[0] - 2 * m.energy) / (2 * m.energy));
        ++r.samples;
    }
    return r;
}

dicke::GaussianState random_spd(Rng& rng) {
    const double a = uniform(rng, 0.2, 5.0);
    const double b = uniform(rng, 0.2, 5.0);
    const double t = uniform(rng, 0.0, std::numbers::pi);
    const double c = std::cos(t), s = std::sin(t);
    return dicke::GaussianState::from_matrix({a * c * c + b * s * s, (b - a) * s * c, a * s * s + b * c * c});
}

CheckResult gaussian_overlap(Rng& rng) {
    CheckResult r{"gaussian overlap: determinant formula vs 2D quadrature", 0, 0.0, 1e-8};
    for (; r.samples < 100; ++r.samples) {
        const auto g = random_spd(rng);
        const auto h = random_spd(rng);
        r.max_deviation = std::max(r.max_deviation, std::abs(dicke::gaussian_overlap(g, h) -
                                                             oracle::gaussian_quadrature_overlap(g, h)));
    }
    return r;
}

CheckResult dicke_spectrum(Rng& rng) {
    CheckResult r{"dicke spectrum (literature variant) vs coupled-oscillator eigensolve (relative)", 0, 0.0, 1e-12};
    for (; r.samples < 200; ++r.samples) {
        const double w0 = uniform(rng, 0.2, 3.0);
        const double w = uniform(rng, 0.2, 3.0);
        const dicke::DickeParams base(w0, w, 0.0, dicke::Variant::literature);
        const double lambda = uniform(rng, 0.0, 0.95) * dicke::critical_coupling(base);
        const auto s = dicke::normal_spectrum(base.with_lambda(lambda));
        const auto e = oracle::coupled_oscillator_energies(w0, w, lambda);
        r.max_deviation = std::max({r.max_deviation, std::abs(s.eps_minus - e[0]) / e[0],
                                    std::abs(s.eps_plus - e[1]) / e[1]});
    }
    return r;
}

CheckResult dos_identities(Rng& rng) {
    CheckResult r{"projected DOS: completeness and zero-frequency weight = overlap^2", 0, 0.0, 1e-10};
    for (; r.samples < 30; ++r.samples) {
        const auto n = odd_sites(rng, 31);
        const auto p = random_xy(rng, n);
        const auto q = p.shifted(uniform(rng, -0.2, 0.2), uniform(rng, -0.2, 0.2));
        const auto dos = oracle::projected_dos(p, q);
        double total = 0.0;
        for (const auto& l : dos.levels)
            total += l.weight;
        const double ov = xy::ground_state_overlap(p, q).overlap;
        r.max_deviation = std::max({r.max_deviation, std::abs(total - 1.0),
                                    std::abs(dos.levels.front().weight - ov * ov),
                                    std::abs(dynamics::overlap_from_dos(p, q) - ov * ov)});
    }
    return r;
}

CheckResult echo(Rng& rng) {
    CheckResult r{"Loschmidt echo: product form vs DOS Fourier sum and 2x2 evolution", 0, 0.0, 1e-10};
    std::vector<double> times(200);
    for (std::size_t i = 0; i < times.size(); ++i)
        times[i] = 20.0 * static_cast<double>(i) / 199.0;
    for (; r.samples < 10; ++r.samples) {
        const auto p = random_xy(rng, 21);
        const auto q = p.shifted(uniform(rng, -0.05, 0.05), uniform(rng, -0.05, 0.05));
        r.max_deviation = std::max(r.max_deviation, dynamics::echo_dos_consistency(p, q, times));
        const auto series = dynamics::loschmidt_echo(p, q, times);
        for (std::size_t j = 0; j < times.size(); j += 17) {
            double product = 1.0;
            for (std::int64_t k = 1; k <= p.modes(); ++k)
                product *= oracle::mode_return_probability(p, q, k, times[j]);
            r.max_deviation = std::max(r.max_deviation, std::abs(product - series.values[j]));
        }
    }
    return r;
}

} // namespace

std::vector<CheckResult> run_all(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(xy_overlap(rng));
    out.push_back(gradients(rng));
    out.push_back(sector_gaps(rng));
    out.push_back(gaussian_overlap(rng));
    out.push_back(dicke_spectrum(rng));
    out.push_back(dos_identities(rng));
    out.push_back(echo(rng));
    return out;
}

} // namespace gsfid::verify
