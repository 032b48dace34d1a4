#pragma once

#include <complex>
#include <string_view>

#include "ptcoulomb/jet.hpp"
#include "ptcoulomb/model.hpp"
#include "ptcoulomb/quadrature.hpp"

namespace ptc {

enum class NormMethod { closed_form, half_line_quadrature, real_line_quadrature };

std::string_view to_string(NormMethod m);

// Pseudo-norm I = int psi*(-x) psi(x) dx of the unnormalized state.
struct PseudoNormResult {
    double value = 0.0;
    int sigma = 1;               // sign of value
    NormMethod method = NormMethod::closed_form;
    double imag_residual = 0.0;  // |Im| discarded from the real-line integral
    double error_estimate = 0.0; // quadrature error estimate (0 for closed form)
    double tail_bound = 0.0;     // estimate of the truncated tail beyond T
};

enum class QuadratureMode { half_line, real_line };

/// Exact pseudo-norm. n = 0, 1 use the direct closed forms
///   I_0 = 2 Gamma(2 - 2q alpha) / gamma,
///   I_1 = 2 (3 - 2q alpha) Gamma(2 - 2q alpha) / gamma;
/// larger n go through pseudo_norm_series. Throws DomainError where the
/// hypergeometric c-parameter 1 - 2q alpha is a non-positive integer
/// (alpha = 1/2, q = +1), AdmissibilityError for inadmissible labels.
PseudoNormResult pseudo_norm_closed(const ModelParams& params, const StateLabel& label);

/// The general hypergeometric route for any n:
///   I = [2(1-2qa)/gamma] Gamma(1-2qa+n) / n! * [h^n] g(h),
///   g(h) = (1-h) (1+h)^{2qa-2} 2F1(1-qa, 3/2-qa; 1-2qa; 4h/(1+h)^2),
/// where [h^n] is the n-th jet coefficient.
PseudoNormResult pseudo_norm_series(const ModelParams& params, const StateLabel& label);

/// The jet g(h) above, truncated at order n.
Jet pseudo_norm_generating_jet(double q_alpha, int n);

/// Numerical pseudo-norm.
///
/// half_line: 2 int_0^T e^{-gamma t} (gamma t)^{1-2qa} [L_n^{-2qa}(gamma t)]^2 dt
/// with the integral split at t = 1/gamma. The inner piece is mapped by
/// t = s^{1/(2-2qa)}, which removes the algebraic endpoint factor; the outer
/// piece is truncated at T = (40 + 10 n) / gamma.
///
/// real_line: int_{-T}^{T} psi(x)^2 dx with the piecewise contour
/// coordinate, integrating each half-line separately. The real part is the
/// value and |Im| goes to imag_residual.
PseudoNormResult pseudo_norm_quadrature(const ModelParams& params, const StateLabel& label,
                                        QuadratureMode mode,
                                        const QuadratureOptions& opts = {});

/// Contribution of the vertical segment between -ic and +ic that separates
/// the real-line integral from twice the half-line one:
///   real_line - half_line = (2/gamma) int_0^{gamma c} Im F(i y) dy,
///   F(z) = e^{-z} z^{1-2qa} [L_n^{-2qa}(z)]^2.
double contour_segment_term(const ModelParams& params, const StateLabel& label,
                            const QuadratureOptions& opts = {});

/// |N| = I^{-1/2}, from the closed form when it is defined and from
/// half-line quadrature otherwise.
double normalization_coefficient(const ModelParams& params, const StateLabel& label);

enum class InnerProductRoute { real_line, half_line };

/// Pseudo-inner product <a|b> = int psi_a*(-x) psi_b(x) dx of the
/// normalized states.
///
/// real_line integrates the product along the real axis with the
/// piecewise contour coordinate. half_line uses the contour-collapsed form
/// 2 int_0^inf phi_a(t) phi_b(t) dt of the real radial profiles.
std::complex<double> pseudo_inner_product(const ModelParams& params, const StateLabel& a,
                                          const StateLabel& b,
                                          InnerProductRoute route = InnerProductRoute::real_line,
                                          const QuadratureOptions& opts = {});

/// Truncation radius T = (40 + 10 n) / gamma.
double truncation_radius(double gamma, int n);

} // namespace ptc
