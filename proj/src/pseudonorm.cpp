#include "ptcoulomb/pseudonorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/special_functions.hpp"

namespace ptc {

namespace {

using cplx = std::complex<double>;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void require_admissible(const ModelParams& params, const StateLabel& label) {
    const auto status = admissibility(params, label);
    if (status != Admissibility::admissible) throw AdmissibilityError(label, status);
}

void require_closed_form_domain(const ModelParams& params, const StateLabel& label) {
    const double c_param = 1.0 - 2.0 * label.q() * params.alpha();
    if (is_nonpositive_integer(c_param)) {
        throw DomainError("closed-form pseudo-norm undefined: hypergeometric c-parameter 1 - 2q*alpha = " +
                          std::to_string(c_param));
    }
}

// Integer exponent r for the map t = s^r applied to int_0 t^p h(t) dt with
// h analytic: the mapped integrand r s^{r(p+1)-1} h(s^r) is then analytic in
// s apart from a factor whose first three derivatives are bounded.
int power_map_exponent(double p) {
    return std::max(1, static_cast<int>(std::ceil(4.0 / (p + 1.0))));
}

PseudoNormResult make_result(double value, NormMethod method) {
    PseudoNormResult r;
    r.value = value;
    r.sigma = value < 0.0 ? -1 : 1;
    r.method = method;
    return r;
}

} // namespace

std::string_view to_string(NormMethod m) {
    switch (m) {
        case NormMethod::closed_form: return "closed";
        case NormMethod::half_line_quadrature: return "half-line";
        case NormMethod::real_line_quadrature: return "real-line";
    }
    return "unknown";
}

double truncation_radius(double gamma, int n) { return (40.0 + 10.0 * n) / gamma; }

Jet pseudo_norm_generating_jet(double q_alpha, int n) {
    const int order = n;
    const Jet one_minus_h = Jet::constant(1.0, order) - Jet::variable(order);
    const Jet prefactor = one_minus_h * jet_binomial_power(2.0 * q_alpha - 2.0, order);
    // 4h / (1+h)^2 has zero constant term, as the composition requires.
    const Jet w = 4.0 * (Jet::variable(order) * jet_binomial_power(-2.0, order));
    const Jet f = hyp2f1_jet(1.0 - q_alpha, 1.5 - q_alpha, 1.0 - 2.0 * q_alpha, w);
    return prefactor * f;
}

PseudoNormResult pseudo_norm_series(const ModelParams& params, const StateLabel& label) {
    require_admissible(params, label);
    require_closed_form_domain(params, label);
    const int n = label.n();
    const double qa = label.q() * params.alpha();
    const double g = gamma_scale(params, label);
    const Jet jet = pseudo_norm_generating_jet(qa, n);
    const double value = 2.0 * (1.0 - 2.0 * qa) / g * gamma_function(1.0 - 2.0 * qa + n) /
                         factorial(n) * jet[n];
    return make_result(value, NormMethod::closed_form);
}

PseudoNormResult pseudo_norm_closed(const ModelParams& params, const StateLabel& label) {
    require_admissible(params, label);
    require_closed_form_domain(params, label);
    const double qa = label.q() * params.alpha();
    const double g = gamma_scale(params, label);
    switch (label.n()) {
        case 0: return make_result(2.0 * gamma_function(2.0 - 2.0 * qa) / g, NormMethod::closed_form);
        case 1:
            return make_result(2.0 * (3.0 - 2.0 * qa) * gamma_function(2.0 - 2.0 * qa) / g,
                               NormMethod::closed_form);
        default: return pseudo_norm_series(params, label);
    }
}

PseudoNormResult pseudo_norm_quadrature(const ModelParams& params, const StateLabel& label,
                                        QuadratureMode mode, const QuadratureOptions& opts) {
    require_admissible(params, label);
    const int n = label.n();
    const double qa = label.q() * params.alpha();
    const double m = -2.0 * qa;
    const double p = 1.0 + m;  // power of (gamma t) in the integrand, in (-1, 3)
    const double g = gamma_scale(params, label);
    const double T = truncation_radius(g, n);

    if (mode == QuadratureMode::half_line) {
        // Inner piece in t = s^r: dt t^p = r s^{r(p+1)-1} ds.
        const int pw = power_map_exponent(p);
        const double jac_pow = pw * (p + 1.0) - 1.0;
        const double gp = std::pow(g, p);
        auto inner = [&](double s) {
            const double t = std::pow(s, pw);
            const double lag = laguerre(n, m, cplx(g * t, 0.0)).real();
            return pw * gp * std::pow(s, jac_pow) * std::exp(-g * t) * lag * lag;
        };
        auto outer = [&](double t) {
            const double x = g * t;
            const double lag = laguerre(n, m, cplx(x, 0.0)).real();
            return std::exp(-x) * std::pow(x, p) * lag * lag;
        };
        const double t0 = 1.0 / g;
        const auto a = integrate_adaptive<double>(inner, {0.0, std::pow(t0, 1.0 / pw)}, opts);
        const auto b = integrate_adaptive<double>(outer, {t0, 0.5 * (t0 + T), T}, opts);

        PseudoNormResult r = make_result(2.0 * (a.value + b.value), NormMethod::half_line_quadrature);
        r.error_estimate = 2.0 * (a.error + b.error);
        // Tail beyond T: F(T) / (gamma - (p + 2n)/T) bounds the remaining
        // integral once the exponential dominates the polynomial factor.
        const double decay = g - (p + 2.0 * n) / T;
        r.tail_bound = decay > 0.0 ? 2.0 * outer(T) / decay : outer(T) * T;
        return r;
    }

    auto sq = [&](double x) {
        const cplx psi = wavefunction(params, label, x);
        return psi * psi;
    };
    const double split = std::min(params.c(), 1.0 / g);
    const auto right = integrate_adaptive<cplx>(sq, {0.0, split, 1.0 / g, T}, opts);
    const auto left = integrate_adaptive<cplx>(sq, {-T, -1.0 / g, -split, 0.0}, opts);
    const cplx total = right.value + left.value;

    PseudoNormResult r = make_result(total.real(), NormMethod::real_line_quadrature);
    r.imag_residual = std::abs(total.imag());
    r.error_estimate = right.error + left.error;
    r.tail_bound = 2.0 * std::abs(sq(T)) / g;
    return r;
}

double contour_segment_term(const ModelParams& params, const StateLabel& label,
                            const QuadratureOptions& opts) {
    require_admissible(params, label);
    const int n = label.n();
    const double qa = label.q() * params.alpha();
    const double m = -2.0 * qa;
    const double p = 1.0 + m;
    const double g = gamma_scale(params, label);
    // (iy)^p = y^p e^{i pi p / 2}; with y = s^r, y^p dy = r s^{r(p+1)-1} ds.
    const int pw = power_map_exponent(p);
    const double jac_pow = pw * (p + 1.0) - 1.0;
    const cplx phase = std::polar(1.0, 0.5 * std::numbers::pi * p);
    auto integrand = [&](double s) {
        const cplx z(0.0, std::pow(s, pw));
        const cplx lag = laguerre(n, m, z);
        return pw * std::pow(s, jac_pow) * (std::exp(-z) * phase * lag * lag).imag();
    };
    const double upper = std::pow(g * params.c(), 1.0 / pw);
    const auto seg = integrate_adaptive<double>(integrand, {0.0, upper}, opts);
    return 2.0 / g * seg.value;
}

double normalization_coefficient(const ModelParams& params, const StateLabel& label) {
    double value;
    try {
        value = pseudo_norm_closed(params, label).value;
    } catch (const DomainError&) {
        value = pseudo_norm_quadrature(params, label, QuadratureMode::half_line).value;
    }
    return 1.0 / std::sqrt(value);
}

std::complex<double> pseudo_inner_product(const ModelParams& params, const StateLabel& a,
                                          const StateLabel& b, InnerProductRoute route,
                                          const QuadratureOptions& opts) {
    const double na = normalization_coefficient(params, a);
    const double nb = normalization_coefficient(params, b);
    const double ga = gamma_scale(params, a);
    const double gb = gamma_scale(params, b);
    const double T = std::max(truncation_radius(ga, a.n()), truncation_radius(gb, b.n()));
    const double t0 = 1.0 / std::max(ga, gb);

    if (route == InnerProductRoute::real_line) {
        auto integrand = [&](double x) {
            return std::conj(wavefunction(params, a, -x)) * wavefunction(params, b, x);
        };
        const double split = std::min(params.c(), t0);
        const auto right = integrate_adaptive<cplx>(integrand, {0.0, split, t0, T}, opts);
        const auto left = integrate_adaptive<cplx>(integrand, {-T, -t0, -split, 0.0}, opts);
        return na * nb * (right.value + left.value);
    }

    // phi(t) = e^{-gamma t/2} (gamma t)^s L_n^{-2qa}(gamma t), s = 1/2 - qa.
    const double alpha = params.alpha();
    const double sa = 0.5 - a.q() * alpha;
    const double sb = 0.5 - b.q() * alpha;
    const double p = sa + sb;
    const int pw = power_map_exponent(p);
    const double jac_pow = pw * (p + 1.0) - 1.0;
    auto smooth_part = [&](double t) {
        const double la = laguerre(a.n(), -2.0 * a.q() * alpha, cplx(ga * t, 0.0)).real();
        const double lb = laguerre(b.n(), -2.0 * b.q() * alpha, cplx(gb * t, 0.0)).real();
        return std::exp(-0.5 * (ga + gb) * t) * la * lb;
    };
    const double scale = std::pow(ga, sa) * std::pow(gb, sb);
    auto inner = [&](double s) {
        return pw * scale * std::pow(s, jac_pow) * smooth_part(std::pow(s, pw));
    };
    auto outer = [&](double t) { return scale * std::pow(t, p) * smooth_part(t); };
    const auto i1 = integrate_adaptive<double>(inner, {0.0, std::pow(t0, 1.0 / pw)}, opts);
    const auto i2 = integrate_adaptive<double>(outer, {t0, 0.5 * (t0 + T), T}, opts);
    return {2.0 * na * nb * (i1.value + i2.value), 0.0};
}

} // namespace ptc
