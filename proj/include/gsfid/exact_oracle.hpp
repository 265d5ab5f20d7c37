#pragma once

// Brute-force cross-checks for the closed forms in xy_chain and dicke.
//
// Nothing here calls the closed-form angle or determinant formulas: the XY
// checks diagonalize each momentum-pair Hamiltonian numerically, the spectral
// decomposition enumerates excitation patterns, and the Gaussian overlap is
// integrated over the plane.

#include "gsfid/dicke.hpp"
#include "gsfid/xy_chain.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace gsfid::oracle {

/// Momentum pair k in the ordered basis {|0_k 0_-k>, |1_k 1_-k>}:
///   H_k = [[-eps_k, -i gamma sin x_k], [i gamma sin x_k, eps_k]]
/// with eigenvalues -Lambda_k, +Lambda_k.
struct ModeSector {
    std::int64_t k;
    Eigen::Matrix2cd hamiltonian;
    Eigen::Vector2cd ground;        ///< first nonzero component real-positive
    std::array<double, 2> energies; ///< ascending
    bool degenerate;                ///< zero gap; ground is then meaningless
};

ModeSector mode_sector(const xy::XYParams& p, std::int64_t k);

/// prod_k |<ground_k(p), ground_k(q)>| from numeric eigenvectors.  Empty when
/// any sector of either point is degenerate.
std::optional<double> overlap_oracle(const xy::XYParams& p, const xy::XYParams& q);

/// |<ground(state)| exp(-i H_k(ham) t) |ground(state)>|^2 for one momentum pair,
/// evolved with the eigen-decomposition of H_k.
double mode_return_probability(const xy::XYParams& ham, const xy::XYParams& state, std::int64_t k,
                               double t);

struct ExcitationLevel {
    double energy; ///< above the ground energy of H(p)
    double weight;
};

/// Decomposition of |g(q)> in the eigenbasis of H(p), one level per subset of
/// excited pairs (2^M entries, the empty subset first).
struct ExcitationSpectrum {
    std::vector<ExcitationLevel> levels;
    double first_excited; ///< E_1, smallest positive level energy
};

inline constexpr std::int64_t max_enumerated_modes = 20;

/// Throws ResourceError when M exceeds max_enumerated_modes.
ExcitationSpectrum projected_dos(const xy::XYParams& p, const xy::XYParams& q);

/// Adaptive Gauss-Kronrod over the plane of g(R) h(R); absolute tolerance 1e-10.
/// Throws NumericError if the error estimate stays above the tolerance.
double gaussian_quadrature_overlap(const dicke::GaussianState& g, const dicke::GaussianState& h);

/// Normal-mode energies of the coupled oscillators
///   H = (p_x^2 + w^2 x^2)/2 + (p_y^2 + w0^2 y^2)/2 + 2 lambda sqrt(w w0) x y
/// from a numeric eigensolve of the potential matrix, ascending.
std::array<double, 2> coupled_oscillator_energies(double omega0, double omega, double lambda);

} // namespace gsfid::oracle
