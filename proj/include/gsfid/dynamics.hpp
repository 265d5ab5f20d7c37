#pragma once

// Return probability of |g(q)> evolved under H(p) (hbar = 1):
//   L(t) = |<g(q)| exp(-i H(p) t) |g(q)>|^2 = prod_k [1 - sin^2(theta_k - theta~_k) sin^2(Lambda_k t)]
// Each pair contributes |cos^2(d/2) + sin^2(d/2) e^{-2 i Lambda_k t}|^2 with
// d = theta_k - theta~_k, since the pair levels of H_k(p) are split by 2 Lambda_k.

#include "gsfid/xy_chain.hpp"

#include <span>
#include <vector>

namespace gsfid::dynamics {

struct EchoSeries {
    std::vector<double> times;
    std::vector<double> values;
};

/// Throws SingularityError if a mode of p has Lambda_k = 0.
EchoSeries loschmidt_echo(const xy::XYParams& p, const xy::XYParams& q, std::span<const double> times);

/// max_t | |sum_j w_j e^{-i w_j t}|^2 - L(t) | with (w_j, w_j) from the enumerated
/// projected density of states.  M <= 20.
double echo_dos_consistency(const xy::XYParams& p, const xy::XYParams& q, std::span<const double> times);

/// 1 - (spectral weight at energies >= E_1).  M <= 20.
double overlap_from_dos(const xy::XYParams& p, const xy::XYParams& q);

} // namespace gsfid::dynamics
