#include "ptcoulomb/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptcoulomb/pseudonorm.hpp"

namespace ptc {

namespace {

constexpr double kFlownAwayTol = 1e-12;

std::string describe(const StateLabel& label, Admissibility status) {
    return "state (q=" + std::to_string(label.q()) + ", n=" + std::to_string(label.n()) +
           ") is " + std::string(to_string(status));
}

void require_admissible(const ModelParams& params, const StateLabel& label) {
    const auto status = admissibility(params, label);
    if (status != Admissibility::admissible) throw AdmissibilityError(label, status);
}

} // namespace

ModelParams::ModelParams(double alpha, double beta, double c) : alpha_(alpha), beta_(beta), c_(c) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    if (!(beta != 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite and non-zero");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("c must be positive, got " + std::to_string(c));
    }
}

StateLabel::StateLabel(int q, int n) : q_(q), n_(n) {
    if (q != 1 && q != -1) throw std::invalid_argument("quasi-parity q must be +1 or -1");
    if (n < 0) throw std::invalid_argument("radial index n must be >= 0");
}

std::string_view to_string(Admissibility a) {
    switch (a) {
        case Admissibility::admissible: return "admissible";
        case Admissibility::flown_away: return "flown_away";
        case Admissibility::not_normalizable: return "not_normalizable";
    }
    return "unknown";
}

AdmissibilityError::AdmissibilityError(const StateLabel& l, Admissibility s)
    : std::domain_error(describe(l, s)), label(l), status(s) {}

double spectral_denominator(const ModelParams& params, const StateLabel& label) {
    return 2.0 * label.n() - 2.0 * label.q() * params.alpha() + 1.0;
}

Admissibility admissibility(const ModelParams& params, const StateLabel& label) {
    const double d = spectral_denominator(params, label);
    if (std::abs(d) <= kFlownAwayTol) return Admissibility::flown_away;
    const double signed_scale = -2.0 * params.beta() / d;
    if (signed_scale <= 0.0) return Admissibility::not_normalizable;
    return Admissibility::admissible;
}

double energy(const ModelParams& params, const StateLabel& label) {
    require_admissible(params, label);
    const double d = spectral_denominator(params, label);
    return -params.beta() * params.beta() / (d * d);
}

double gamma_scale(const ModelParams& params, const StateLabel& label) {
    require_admissible(params, label);
    return -2.0 * params.beta() / spectral_denominator(params, label);
}

std::complex<double> potential(const ModelParams& params, double x) {
    return potential<double>(params.alpha(), params.beta(), params.c(), x);
}

std::complex<double> wavefunction(const ModelParams& params, const StateLabel& label, double x,
                                  bool normalized) {
    const double g = gamma_scale(params, label);
    const auto u = contour_coord(x, params.c());
    auto psi = radial_profile<double>(params.alpha(), label.q(), label.n(), g, u);
    if (normalized) psi *= normalization_coefficient(params, label);
    return psi;
}

std::complex<long double> wavefunction_extended(const ModelParams& params,
                                                const StateLabel& label, long double x) {
    require_admissible(params, label);
    const long double beta = params.beta();
    const long double d = 2.0L * label.n() - 2.0L * label.q() * params.alpha() + 1.0L;
    const long double g = -2.0L * beta / d;
    const auto u = contour_coord<long double>(x, params.c());
    return radial_profile<long double>(params.alpha(), label.q(), label.n(), g, u);
}

BoundState bound_state(const ModelParams& params, const StateLabel& label) {
    BoundState s{label, energy(params, label), gamma_scale(params, label), 0.0, 0.0};
    s.norm_magnitude = normalization_coefficient(params, label);
    return s;
}

Spectrum list_spectrum(const ModelParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    Spectrum out;
    for (int n = 0; n <= n_max; ++n) {
        for (int q : {1, -1}) {
            const StateLabel label(q, n);
            const auto status = admissibility(params, label);
            if (status == Admissibility::admissible) {
                out.states.push_back(bound_state(params, label));
            } else {
                out.excluded.push_back({label, status});
            }
        }
    }
    std::stable_sort(out.states.begin(), out.states.end(),
                     [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
    return out;
}

} // namespace ptc
