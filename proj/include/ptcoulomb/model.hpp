#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptcoulomb/special_functions.hpp"

namespace ptc {

// Parameters of V(x) = (alpha^2 - 1/4) / u^2 + beta / u, where u is the
// contour coordinate built from the shift c. Units hbar = 2m = 1.
class ModelParams {
public:
    // Throws std::invalid_argument unless 0 < alpha < 1, beta != 0, c > 0.
    ModelParams(double alpha, double beta, double c);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double c() const { return c_; }
    // Centrifugal-like core strength G = alpha^2 - 1/4.
    double core_strength() const { return alpha_ * alpha_ - 0.25; }

private:
    double alpha_;
    double beta_;
    double c_;
};

// Quasi-parity q = +/-1 and radial index n >= 0.
class StateLabel {
public:
    StateLabel(int q, int n);

    int q() const { return q_; }
    int n() const { return n_; }

    bool operator==(const StateLabel&) const = default;

private:
    int q_;
    int n_;
};

enum class Admissibility { admissible, flown_away, not_normalizable };

std::string_view to_string(Admissibility a);

class AdmissibilityError : public std::domain_error {
public:
    AdmissibilityError(const StateLabel& label, Admissibility status);

    StateLabel label;
    Admissibility status;
};

struct BoundState {
    StateLabel label;
    double energy;          // E < 0
    double gamma;           // 2 sqrt|E|
    double norm_magnitude;  // |N| = I^{-1/2}
    double phase_nu = 0.0;  // phase of the normalization constant, fixed at 0
};

/// Spectral denominator 2n - 2 q alpha + 1.
double spectral_denominator(const ModelParams& params, const StateLabel& label);

/// FlownAway when the spectral denominator vanishes (|d| <= 1e-12),
/// NotNormalizable when the signed scale -2 beta / d is not positive.
Admissibility admissibility(const ModelParams& params, const StateLabel& label);

/// E = -beta^2 / (2n - 2 q alpha + 1)^2. Throws AdmissibilityError.
double energy(const ModelParams& params, const StateLabel& label);

/// gamma = -2 beta / (2n - 2 q alpha + 1) > 0. Throws AdmissibilityError.
double gamma_scale(const ModelParams& params, const StateLabel& label);

/// u(x) = x - ic for x >= 0 and -x + ic for x < 0. Re u >= 0 and
/// conj(u(-x)) = u(x) for x != 0.
template <class Real>
std::complex<Real> contour_coord(Real x, Real c) {
    return x >= 0 ? std::complex<Real>(x, -c) : std::complex<Real>(-x, c);
}

inline std::complex<double> contour_coord(double x, double c) {
    return contour_coord<double>(x, c);
}

template <class Real>
std::complex<Real> potential(Real alpha, Real beta, Real c, Real x) {
    const auto u = contour_coord<Real>(x, c);
    const Real g = alpha * alpha - Real(0.25);
    return g / (u * u) + beta / u;
}

std::complex<double> potential(const ModelParams& params, double x);

/// Unnormalized eigenfunction with scale gamma evaluated on the
/// principal branch:
///   exp(-gamma u / 2) (gamma u)^{1/2 - q alpha} L_n^{-2 q alpha}(gamma u).
template <class Real>
std::complex<Real> radial_profile(Real alpha, int q, int n, Real gamma, std::complex<Real> u);

/// psi(x) for an admissible state. With normalized = true the result is
/// scaled by |N|; otherwise N = 1. Throws AdmissibilityError.
std::complex<double> wavefunction(const ModelParams& params, const StateLabel& label, double x,
                                  bool normalized = false);

/// Same as wavefunction(..., false) in extended precision; used by the
/// finite-difference residual check.
std::complex<long double> wavefunction_extended(const ModelParams& params,
                                                const StateLabel& label, long double x);

struct ExcludedState {
    StateLabel label;
    Admissibility status;
};

struct Spectrum {
    std::vector<BoundState> states;     // sorted by energy ascending
    std::vector<ExcludedState> excluded;
};

/// All admissible states with n <= n_max over both quasi-parities.
Spectrum list_spectrum(const ModelParams& params, int n_max);

/// Builds the BoundState record (including |N|) for an admissible label.
BoundState bound_state(const ModelParams& params, const StateLabel& label);

// --- template definitions -------------------------------------------------

template <class Real>
std::complex<Real> radial_profile(Real alpha, int q, int n, Real gamma, std::complex<Real> u) {
    const std::complex<Real> z = gamma * u;
    const Real qa = static_cast<Real>(q) * alpha;
    return std::exp(-z / Real(2)) * std::pow(z, Real(0.5) - qa) *
           laguerre<Real>(n, Real(-2) * qa, z);
}

} // namespace ptc

