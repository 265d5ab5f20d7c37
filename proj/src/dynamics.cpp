#include "gsfid/dynamics.hpp"

#include "gsfid/errors.hpp"
#include "gsfid/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace gsfid::dynamics {

EchoSeries loschmidt_echo(const xy::XYParams& p, const xy::XYParams& q, std::span<const double> times) {
    if (p.n_sites() != q.n_sites())
        throw ParameterError("echo requires equal n_sites");
    const xy::Momenta momenta(p.n_sites());
    const auto modes = xy::mode_table(p, momenta);
    const auto other = xy::angles(q, momenta);

    std::vector<double> energy(modes.size()), mixing(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i].energy == 0.0)
            throw SingularityError("critical mode: Lambda_k = 0 at k = " + std::to_string(modes[i].k),
                                   modes[i].k);
        const double s = std::sin(modes[i].theta - other[i]);
        energy[i] = modes[i].energy;
        mixing[i] = s * s;
    }

    EchoSeries out{{times.begin(), times.end()}, std::vector<double>(times.size())};
    const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const double t = times[static_cast<std::size_t>(j)];
        double value = 1.0;
        for (std::size_t i = 0; i < energy.size(); ++i) {
            const double s = std::sin(energy[i] * t);
            value *= 1.0 - mixing[i] * s * s;
        }
        out.values[static_cast<std::size_t>(j)] = std::clamp(value, 0.0, 1.0);
    }
    return out;
}

double echo_dos_consistency(const xy::XYParams& p, const xy::XYParams& q, std::span<const double> times) {
    const auto dos = oracle::projected_dos(p, q);
    const auto echo = loschmidt_echo(p, q, times);
    double worst = 0.0;
    for (std::size_t j = 0; j < times.size(); ++j) {
        std::complex<double> amplitude{0.0, 0.0};
        for (const auto& level : dos.levels)
            amplitude += level.weight * std::polar(1.0, -level.energy * times[j]);
        worst = std::max(worst, std::abs(std::norm(amplitude) - echo.values[j]));
    }
    return worst;
}

double overlap_from_dos(const xy::XYParams& p, const xy::XYParams& q) {
    const auto dos = oracle::projected_dos(p, q);
    double excited = 0.0;
    for (const auto& level : dos.levels)
        if (level.energy >= dos.first_excited)
            excited += level.weight;
    return std::clamp(1.0 - excited, 0.0, 1.0);
}

} // namespace gsfid::dynamics
