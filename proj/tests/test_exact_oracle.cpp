#include "gsfid/dicke.hpp"
#include "gsfid/errors.hpp"
#include "gsfid/exact_oracle.hpp"
#include "gsfid/xy_chain.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace gsfid;
using xy::XYParams;

TEST_CASE("mode_sector: N = 3 ground vector matches the pair state") {
    const XYParams p(1.0, 0.0, 3);
    const auto sector = oracle::mode_sector(p, 1);
    const double theta = xy::mode_table(p)[0].theta;
    const Eigen::Vector2cd closed(std::cos(theta / 2), std::complex<double>(0, -std::sin(theta / 2)));
    CHECK(std::abs(std::abs(closed.dot(sector.ground)) - 1.0) <= 1e-12);
}

TEST_CASE("mode_sector: diagonal sectors at gamma = 0") {
    // eps_k < 0 at lambda = 2: the |11> component carries the lower energy,
    // matching theta_k = pi in the closed form.
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto s = oracle::mode_sector(XYParams(0.0, 2.0, 11), k);
        CHECK(std::abs(s.ground(0)) <= 1e-15);
        CHECK(std::abs(std::abs(s.ground(1)) - 1.0) <= 1e-15);
    }
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto s = oracle::mode_sector(XYParams(0.0, -2.0, 11), k);
        CHECK(std::abs(s.ground(0) - 1.0) <= 1e-15);
        CHECK(std::abs(s.ground(1)) <= 1e-15);
    }
}

TEST_CASE("mode_sector: invariants on random parameters") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 300; ++i) {
        const XYParams p(u(rng), u(rng), 2 * std::uniform_int_distribution<int>(1, 50)(rng) + 1);
        const auto k = std::uniform_int_distribution<std::int64_t>(1, p.modes())(rng);
        const auto s = oracle::mode_sector(p, k);
        CHECK((s.hamiltonian - s.hamiltonian.adjoint()).norm() == 0.0);
        CHECK(std::abs(s.ground.norm() - 1.0) <= 1e-14);
        const double lam = xy::mode_table(p)[static_cast<std::size_t>(k - 1)].energy;
        CHECK(std::abs((s.energies[1] - s.energies[0]) - 2 * lam) <= 1e-10 * 2 * lam);
        CHECK_FALSE(s.degenerate);
    }
}

TEST_CASE("mode_sector: zero gap is flagged and bad indices rejected") {
    const xy::Momenta momenta(13);
    const auto s = oracle::mode_sector(XYParams(0.0, momenta.cos()[2], 13), 3);
    CHECK(s.degenerate);
    CHECK_THROWS_AS(oracle::mode_sector(XYParams(1.0, 0.0, 13), 0), ParameterError);
    CHECK_THROWS_AS(oracle::mode_sector(XYParams(1.0, 0.0, 13), 7), ParameterError);
}

TEST_CASE("overlap_oracle agrees with the closed-form product") {
    const XYParams p(1.0, 0.0, 3);
    CHECK(oracle::overlap_oracle(p, p).value() == doctest::Approx(1.0).epsilon(1e-15));
    const auto v = oracle::overlap_oracle(p, p.with_lambda(0.1));
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(0.99916).epsilon(1e-5));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        const std::int64_t n = 2 * std::uniform_int_distribution<int>(1, 50)(rng) + 1;
        const XYParams a(u(rng), u(rng), n), b(u(rng), u(rng), n);
        const auto o = oracle::overlap_oracle(a, b);
        REQUIRE(o.has_value());
        worst = std::max(worst, std::abs(*o - xy::ground_state_overlap(a, b).overlap));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("overlap_oracle abstains on degenerate sectors") {
    const xy::Momenta momenta(13);
    const XYParams critical(0.0, momenta.cos()[2], 13);
    CHECK_FALSE(oracle::overlap_oracle(critical, XYParams(1.0, 0.0, 13)).has_value());
    CHECK_FALSE(oracle::overlap_oracle(XYParams(1.0, 0.0, 13), critical).has_value());
}

TEST_CASE("projected_dos: identical points put all weight on the ground level") {
    const XYParams p(0.5, 0.3, 15);
    const auto spec = oracle::projected_dos(p, p);
    REQUIRE(spec.levels.size() == (1u << 7));
    CHECK(spec.levels[0].energy == 0.0);
    CHECK(spec.levels[0].weight == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t i = 1; i < spec.levels.size(); ++i)
        CHECK(spec.levels[i].weight <= 1e-30);
}

TEST_CASE("projected_dos: completeness and the ground weight") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t n = 2 * std::uniform_int_distribution<int>(1, 12)(rng) + 1;
        const XYParams p(u(rng), u(rng), n), q(u(rng), u(rng), n);
        const auto spec = oracle::projected_dos(p, q);
        double total = 0.0, excited = 0.0;
        for (const auto& level : spec.levels) {
            CHECK(level.weight >= 0.0);
            total += level.weight;
            if (level.energy >= spec.first_excited)
                excited += level.weight;
        }
        const double ov = xy::ground_state_overlap(p, q).overlap;
        CHECK(std::abs(total - 1.0) <= 1e-10);
        CHECK(std::abs(spec.levels[0].weight - ov * ov) <= 1e-12);
        CHECK(std::abs(1.0 - ov * ov - excited) <= 1e-10);
        CHECK(spec.first_excited > 0.0);
    }
}

TEST_CASE("projected_dos refuses large chains") {
    CHECK_NOTHROW(oracle::projected_dos(XYParams(1, 0.5, 41), XYParams(1, 0.6, 41)));
    CHECK_THROWS_AS(oracle::projected_dos(XYParams(1, 0.5, 43), XYParams(1, 0.6, 43)), ResourceError);
}

TEST_CASE("gaussian_quadrature_overlap closed cases") {
    const auto g = dicke::GaussianState::from_matrix({1.3, 0.4, 0.8});
    CHECK(std::abs(oracle::gaussian_quadrature_overlap(g, g) - 1.0) <= 1e-9);
    for (double a : {0.25, 1.0, 4.0}) {
        for (double b : {0.5, 2.0}) {
            const auto ga = dicke::GaussianState::from_matrix({a, 0, a});
            const auto gb = dicke::GaussianState::from_matrix({b, 0, b});
            CHECK(std::abs(oracle::gaussian_quadrature_overlap(ga, gb) - 2 * std::sqrt(a * b) / (a + b)) <= 1e-9);
        }
    }
}

TEST_CASE("coupled_oscillator_energies are ascending and reduce to the bare frequencies") {
    const auto e = oracle::coupled_oscillator_energies(0.5, 2.0, 0.0);
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-14));
    const auto f = oracle::coupled_oscillator_energies(1.0, 1.0, 0.3);
    CHECK(f[0] < f[1]);
    CHECK(f[0] * f[0] == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(f[1] * f[1] == doctest::Approx(1.6).epsilon(1e-13));
}
