#pragma once

// Normal phase of the Dicke model in the thermodynamic limit.
//
// After the Holstein-Primakoff map the model is two coupled oscillators; the
// ground state is a two-mode Gaussian g(R) ~ exp(-<R, A R>/2) with A a 2x2
// symmetric positive-definite matrix whose eigenvalues are the collective
// excitation energies eps_-, eps_+.

#include <span>
#include <vector>

namespace gsfid::dicke {

/// Which discriminant the collective spectrum uses.
///   paper:      R^2 = (w^2 - w0^2)^2 + 16 lambda^2 w^2 w0^2
///   literature: R^2 = (w^2 - w0^2)^2 + 16 lambda^2 w w0
enum class Variant { paper, literature };

class DickeParams {
public:
    DickeParams(double omega0, double omega, double lambda, Variant variant = Variant::paper);

    double omega0() const noexcept { return omega0_; }
    double omega() const noexcept { return omega_; }
    double lambda() const noexcept { return lambda_; }
    Variant variant() const noexcept { return variant_; }

    DickeParams with_lambda(double l) const { return {omega0_, omega_, l, variant_}; }

private:
    double omega0_;
    double omega_;
    double lambda_;
    Variant variant_;
};

struct NormalSpectrum {
    double eps_minus;
    double eps_plus;
    double squeeze_angle; ///< radians, principal branch of (1/2) arctan
};

/// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct Sym2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double trace() const noexcept { return xx + yy; }
    double det() const noexcept { return xx * yy - xy * xy; }
};

/// Gaussian wavefunction (det A / pi^2)^{1/4} exp(-<R, A R>/2).
class GaussianState {
public:
    /// Validates positive-definiteness; throws DomainError otherwise.
    static GaussianState from_matrix(const Sym2& a);
    /// A = U^T diag(eps_-, eps_+) U, U = [[c, -s], [s, c]].
    static GaussianState from_spectrum(const NormalSpectrum& spectrum);

    const Sym2& matrix() const noexcept { return a_; }
    double determinant() const noexcept { return a_.det(); }

private:
    explicit GaussianState(Sym2 a) : a_(a) {}
    Sym2 a_;
};

/// eps_-^2 as a signed quantity; <= 0 outside the normal phase.  Uses
/// (S^2 - R^2) / (2 (S + R)) with S^2 - R^2 factored so it does not cancel.
double lower_gap_squared(const DickeParams& p);

/// Smallest coupling at which lower_gap_squared reaches zero, bisected down to
/// adjacent doubles.  Ignores p.lambda().
double critical_coupling(const DickeParams& p);

/// Throws PhaseError unless p is strictly in the normal phase.
NormalSpectrum normal_spectrum(const DickeParams& p);

GaussianState ground_state(const DickeParams& p);

/// 2 (det A det B)^{1/4} / det(A + B)^{1/2}.
double gaussian_overlap(const GaussianState& g, const GaussianState& h);

struct LambdaOverlap {
    double lambda;
    double overlap;
};

/// Overlap between ground states at lambda and lambda + delta_lambda for every
/// grid point.  delta_lambda may be negative.
std::vector<LambdaOverlap> overlap_vs_lambda(const DickeParams& p, double delta_lambda,
                                             std::span<const double> lambdas);

/// Tr(A~_c^{-1} A_c): A_c at the critical coupling (eps_- = 0) and A~_c at
/// lambda_c - delta_lambda, evaluated in closed form from the two spectra.
double critical_trace_limit(const DickeParams& p, double delta_lambda);

} // namespace gsfid::dicke
