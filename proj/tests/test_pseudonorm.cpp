#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/pseudonorm.hpp"
#include "ptcoulomb/special_functions.hpp"

using namespace ptc;

namespace {

// Independent reference: with m = -2 q alpha the half-line integral is
// (2/gamma) (2n + m + 1) Gamma(n + m + 1) / n!.
double exact_norm(const ModelParams& p, const StateLabel& l) {
    const double m = -2.0 * l.q() * p.alpha();
    double fact = 1.0;
    for (int k = 2; k <= l.n(); ++k) fact *= k;
    return 2.0 / gamma_scale(p, l) * (2.0 * l.n() + m + 1.0) * std::tgamma(l.n() + m + 1.0) / fact;
}

} // namespace

TEST_CASE("closed form at low n") {
    const ModelParams p(0.25, -1.0, 1.0);
    CHECK(pseudo_norm_closed(p, StateLabel(-1, 0)).value == doctest::Approx(1.9940106).epsilon(1e-7));
    CHECK(pseudo_norm_closed(p, StateLabel(-1, 1)).value == doctest::Approx(16.284420).epsilon(1e-7));
    CHECK(pseudo_norm_closed(p, StateLabel(1, 0)).value == doctest::Approx(0.4431135).epsilon(1e-7));
    CHECK(pseudo_norm_closed(p, StateLabel(-1, 0)).sigma == 1);
}

TEST_CASE("closed form matches the exact reference for all n") {
    for (double alpha : {0.1, 0.25, 0.4, 0.6, 0.75, 0.9}) {
        for (double beta : {-1.0, -2.0}) {
            const ModelParams p(alpha, beta, 1.0);
            for (int q : {1, -1}) {
                for (int n = 0; n <= 10; ++n) {
                    const StateLabel l(q, n);
                    if (admissibility(p, l) != Admissibility::admissible) continue;
                    CAPTURE(alpha);
                    CAPTURE(q);
                    CAPTURE(n);
                    // The jet coefficients cancel by about 4^n, which costs digits at large n.
                    const double tol = n <= 6 ? 1e-12 : 1e-9;
                    CHECK(pseudo_norm_closed(p, l).value == doctest::Approx(exact_norm(p, l)).epsilon(tol));
                    CHECK(pseudo_norm_series(p, l).value == doctest::Approx(exact_norm(p, l)).epsilon(tol));
                }
            }
        }
    }
}

TEST_CASE("generating jet coefficient") {
    // [h^n] g(h) = (2n + m + 1) / (m + 1), m = -2 q alpha.
    for (double qa : {-0.4, -0.1, 0.2, 0.45}) {
        const Jet g = pseudo_norm_generating_jet(qa, 9);
        const double m = -2.0 * qa;
        for (int n = 0; n <= 9; ++n) {
            const double tol = n <= 6 ? 1e-12 : 1e-9;
            CHECK(g[n] == doctest::Approx((2.0 * n + m + 1.0) / (m + 1.0)).epsilon(tol));
        }
    }
}

TEST_CASE("closed form is undefined at the flown-away boundary") {
    // alpha = 1/2, q = +1, n >= 1 is admissible but the c-parameter vanishes.
    const ModelParams p(0.5, -1.0, 1.0);
    CHECK_THROWS_AS(pseudo_norm_closed(p, StateLabel(1, 1)), DomainError);
    const auto q = pseudo_norm_quadrature(p, StateLabel(1, 1), QuadratureMode::half_line);
    CHECK(q.value == doctest::Approx(exact_norm(p, StateLabel(1, 1))).epsilon(1e-9));
    CHECK(normalization_coefficient(p, StateLabel(1, 1)) == doctest::Approx(1.0 / std::sqrt(q.value)));
}

TEST_CASE("half-line quadrature") {
    const ModelParams p(0.25, -1.0, 1.0);
    const auto r = pseudo_norm_quadrature(p, StateLabel(-1, 0), QuadratureMode::half_line);
    CHECK(r.value == doctest::Approx(1.9940106).epsilon(1e-7));
    CHECK(r.method == NormMethod::half_line_quadrature);
    CHECK(r.tail_bound < 1e-12 * r.value);

    // Integrable t^{-0.8} endpoint.
    const ModelParams p9(0.9, -1.0, 1.0);
    const auto s = pseudo_norm_quadrature(p9, StateLabel(1, 1), QuadratureMode::half_line);
    CHECK(s.value > 0.0);
    CHECK(s.value == doctest::Approx(exact_norm(p9, StateLabel(1, 1))).epsilon(1e-9));
    QuadratureOptions tight;
    tight.rel_tol = 1e-13;
    const auto t = pseudo_norm_quadrature(p9, StateLabel(1, 1), QuadratureMode::half_line, tight);
    CHECK(t.value == doctest::Approx(s.value).epsilon(1e-8));
}

TEST_CASE("real-line integral differs from the half-line one by the segment term") {
    for (double c : {0.2, 1.0, 3.0}) {
        for (double alpha : {0.25, 0.6}) {
            const ModelParams p(alpha, -1.0, c);
            for (int q : {1, -1}) {
                for (int n = 0; n <= 2; ++n) {
                    const StateLabel l(q, n);
                    if (admissibility(p, l) != Admissibility::admissible) continue;
                    const double half = pseudo_norm_quadrature(p, l, QuadratureMode::half_line).value;
                    const double real = pseudo_norm_quadrature(p, l, QuadratureMode::real_line).value;
                    const double seg = contour_segment_term(p, l);
                    CAPTURE(c);
                    CAPTURE(q);
                    CAPTURE(n);
                    CHECK(std::abs(real - (half + seg)) <= 1e-10 * std::abs(half));
                }
            }
        }
    }
}

TEST_CASE("segment term reference values") {
    // Independent high-precision evaluation of the real-line integral.
    const StateLabel l(-1, 0);
    const double half = 1.9940106257;
    const ModelParams p02(0.25, -1.0, 0.2);
    const ModelParams p1(0.25, -1.0, 1.0);
    const ModelParams p3(0.25, -1.0, 3.0);
    CHECK(half + contour_segment_term(p02, l) == doctest::Approx(2.0122).epsilon(1e-4));
    CHECK(half + contour_segment_term(p1, l) == doctest::Approx(3.1599).epsilon(1e-4));
    CHECK(half + contour_segment_term(p3, l) == doctest::Approx(-5.3839).epsilon(1e-4));
}

TEST_CASE("real-line integrand is PT-even so the imaginary part cancels") {
    const ModelParams p(0.4, -2.0, 0.5);
    const auto r = pseudo_norm_quadrature(p, StateLabel(-1, 2), QuadratureMode::real_line);
    CHECK(r.imag_residual <= 1e-10 * std::abs(r.value));
}

TEST_CASE("half-line Gram matrix is the identity") {
    const ModelParams p(0.25, -1.0, 1.0);
    for (int q : {1, -1}) {
        for (int a = 0; a <= 4; ++a) {
            for (int b = a; b <= 4; ++b) {
                const StateLabel la(q, a);
                const StateLabel lb(q, b);
                if (admissibility(p, la) != Admissibility::admissible ||
                    admissibility(p, lb) != Admissibility::admissible) {
                    continue;
                }
                const auto v = pseudo_inner_product(p, la, lb, InnerProductRoute::half_line);
                CHECK(std::abs(v - std::complex<double>(a == b ? 1.0 : 0.0, 0.0)) < 1e-9);
            }
        }
    }
}

TEST_CASE("real-line inner product of a normalized state") {
    // Along the real axis the diagonal picks up the segment term, so it is
    // 1 + seg / I rather than 1.
    const ModelParams p(0.25, -1.0, 1.0);
    const StateLabel l(-1, 0);
    const auto v = pseudo_inner_product(p, l, l, InnerProductRoute::real_line);
    const double expected = 1.0 + contour_segment_term(p, l) / pseudo_norm_closed(p, l).value;
    CHECK(v.real() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("cross quasi-parity products are finite") {
    const ModelParams p(0.25, -1.0, 1.0);
    const auto v = pseudo_inner_product(p, StateLabel(-1, 0), StateLabel(1, 1));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
}

TEST_CASE("inadmissible labels are rejected") {
    const ModelParams p(0.75, -1.0, 1.0);
    CHECK_THROWS_AS(pseudo_norm_closed(p, StateLabel(1, 0)), AdmissibilityError);
    CHECK_THROWS_AS(pseudo_norm_quadrature(p, StateLabel(1, 0), QuadratureMode::half_line),
                    AdmissibilityError);
}

TEST_CASE("adaptive quadrature on known integrals") {
    const auto r = integrate_adaptive<double>([](double x) { return std::exp(-x); }, {0.0, 1.0, 40.0});
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
    const auto s = integrate_adaptive<double>([](double x) { return std::sin(x); }, {0.0, std::numbers::pi});
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
    QuadratureOptions shallow;
    shallow.max_depth = 2;
    CHECK_THROWS_AS(integrate_adaptive<double>([](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0}, shallow),
                    ConvergenceError);
}
