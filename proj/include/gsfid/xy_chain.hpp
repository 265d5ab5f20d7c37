#pragma once

// Anisotropic XY chain in a transverse field, N = 2M + 1 sites on a ring.
//
// Each momentum pair (k, -k), k = 1..M, is an independent two-level problem
// with energy Lambda_k and Bogoliubov angle theta_k.  The ground state is the
// product over pairs of cos(theta_k/2)|00> - i sin(theta_k/2)|11>, so overlaps
// and their parameter derivatives reduce to sums over k.
//
// All reductions run sequentially in ascending k so a given input always
// produces the same bits.

#include <cstdint>
#include <span>
#include <vector>

namespace gsfid::xy {

/// One XY Hamiltonian: anisotropy gamma, field lambda, odd site count N >= 3.
class XYParams {
public:
    XYParams(double gamma, double lambda, std::int64_t n_sites);

    double gamma() const noexcept { return gamma_; }
    double lambda() const noexcept { return lambda_; }
    std::int64_t n_sites() const noexcept { return n_sites_; }
    /// Number of momentum pairs, M = (N - 1) / 2.
    std::int64_t modes() const noexcept { return (n_sites_ - 1) / 2; }

    XYParams with_gamma(double g) const { return {g, lambda_, n_sites_}; }
    XYParams with_lambda(double l) const { return {gamma_, l, n_sites_}; }
    XYParams shifted(double d_gamma, double d_lambda) const {
        return {gamma_ + d_gamma, lambda_ + d_lambda, n_sites_};
    }

private:
    double gamma_;
    double lambda_;
    std::int64_t n_sites_;
};

/// cos x_k and sin x_k for x_k = 2 pi k / N, k = 1..M.  Depends on N only, so a
/// sweep over (gamma, lambda) at fixed N builds it once.
class Momenta {
public:
    explicit Momenta(std::int64_t n_sites);

    std::int64_t n_sites() const noexcept { return n_sites_; }
    std::size_t size() const noexcept { return cos_.size(); }
    std::span<const double> cos() const noexcept { return cos_; }
    std::span<const double> sin() const noexcept { return sin_; }

    static double momentum(std::int64_t k, std::int64_t n_sites);

private:
    std::int64_t n_sites_;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

struct ModeData {
    std::int64_t k;
    double momentum; ///< x_k = 2 pi k / N
    double eps;      ///< cos x_k - lambda
    double energy;   ///< Lambda_k = sqrt(eps^2 + gamma^2 sin^2 x_k)
    double theta;    ///< Bogoliubov angle; in [0, pi] for gamma >= 0, [-pi, 0] for gamma < 0
};

struct OverlapResult {
    double log_overlap; ///< natural log, <= 0; -inf when degenerate
    double overlap;     ///< in [0, 1]
    bool degenerate;    ///< some factor cos((theta_k - theta~_k)/2) was <= 0
};

enum class Direction { lambda, gamma };

/// theta_k = atan2(gamma sin x_k, eps_k).  A vanishing Lambda_k yields theta_k = 0;
/// derivative operations reject such modes.
double bogoliubov_angle(double gamma_sin_x, double eps);

std::vector<ModeData> mode_table(const XYParams& p);
std::vector<ModeData> mode_table(const XYParams& p, const Momenta& momenta);

/// theta_k for k = 1..M, without the rest of the mode record.
std::vector<double> angles(const XYParams& p, const Momenta& momenta);

/// <g(p)|g(q)> = prod_k cos((theta_k - theta~_k)/2), accumulated as a sum of logs.
/// Angle differences are reduced to [-pi, pi] first; theta and theta + 2 pi label
/// the same pair state up to sign.
OverlapResult ground_state_overlap(const XYParams& p, const XYParams& q);
OverlapResult ground_state_overlap(const XYParams& p, const XYParams& q, const Momenta& momenta);

/// d theta_k / d lambda = gamma sin x_k / Lambda_k^2.
double dtheta_dlambda(const ModeData& m, const XYParams& p);
/// d theta_k / d gamma = -|sin x_k| eps_k / Lambda_k^2, sign convention as printed.
double dtheta_dgamma(const ModeData& m, const XYParams& p);

double s_lambda(const XYParams& p);
double s_lambda(const XYParams& p, const Momenta& momenta);
double s_gamma(const XYParams& p);
double s_gamma(const XYParams& p, const Momenta& momenta);

/// exp(-S^q delta^2 / 8) for q = lambda or gamma.
double overlap_gaussian_approx(const XYParams& p, Direction direction, double delta);

} // namespace gsfid::xy
