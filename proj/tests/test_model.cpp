#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "ptcoulomb/model.hpp"
#include "ptcoulomb/pseudonorm.hpp"

using namespace ptc;
using cplx = std::complex<double>;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams(0.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(0.3, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(0.3, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(0.3, std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StateLabel(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(StateLabel(1, -1), std::invalid_argument);
    CHECK_NOTHROW(ModelParams(0.3, 2.0, 0.1));
}

TEST_CASE("admissibility") {
    CHECK(admissibility(ModelParams(0.5, -1, 1), StateLabel(1, 0)) == Admissibility::flown_away);
    CHECK(admissibility(ModelParams(0.25, -1, 1), StateLabel(-1, 0)) == Admissibility::admissible);
    CHECK(admissibility(ModelParams(0.75, -1, 1), StateLabel(1, 0)) == Admissibility::not_normalizable);
    // Repulsive coupling binds nothing.
    CHECK(admissibility(ModelParams(0.25, 1, 1), StateLabel(-1, 0)) == Admissibility::not_normalizable);
    CHECK_THROWS_AS(energy(ModelParams(0.5, -1, 1), StateLabel(1, 0)), AdmissibilityError);
}

TEST_CASE("energies and scales") {
    const ModelParams p(0.25, -1.0, 1.0);
    CHECK(energy(p, StateLabel(-1, 0)) == doctest::Approx(-4.0 / 9.0).epsilon(1e-15));
    CHECK(energy(p, StateLabel(1, 1)) == doctest::Approx(-0.16).epsilon(1e-15));
    CHECK(energy(p, StateLabel(1, 0)) == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(gamma_scale(p, StateLabel(-1, 0)) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(gamma_scale(p, StateLabel(1, 0)) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(gamma_scale(p, StateLabel(-1, 1)) == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("energy and scale are consistent for every admissible state") {
    for (double alpha : {0.1, 0.25, 0.4, 0.6, 0.75, 0.9}) {
        for (double beta : {-1.0, -2.0}) {
            const ModelParams p(alpha, beta, 1.0);
            for (const auto& s : list_spectrum(p, 6).states) {
                CHECK(s.gamma == doctest::Approx(2.0 * std::sqrt(-s.energy)).epsilon(1e-14));
                CHECK(s.energy < 0.0);
            }
        }
    }
}

TEST_CASE("contour coordinate and potential") {
    CHECK(contour_coord(1.0, 0.5) == cplx(1.0, -0.5));
    CHECK(contour_coord(-1.0, 0.5) == cplx(1.0, 0.5));
    CHECK(contour_coord(0.0, 0.5) == cplx(0.0, -0.5));
    const cplx v1 = potential(ModelParams(0.5, -1, 1), 1.0);
    CHECK(std::abs(v1 - cplx(-0.5, -0.5)) < 1e-15);
    const cplx v0 = potential(ModelParams(0.25, -1, 0.5), 0.0);
    CHECK(std::abs(v0 - cplx(0.75, -2.0)) < 1e-15);
}

TEST_CASE("potential is PT-symmetric") {
    for (double alpha : {0.1, 0.5, 0.9}) {
        const ModelParams p(alpha, -1.3, 0.7);
        for (double x : {0.3, 0.7, 1.1, 4.7}) {
            const cplx plus = potential(p, x);
            const cplx minus = potential(p, -x);
            CHECK(std::abs(std::conj(minus) - plus) <= 1e-15);
            CHECK(std::abs(minus.real() - plus.real()) <= 1e-15);
            CHECK(std::abs(minus.imag() + plus.imag()) <= 1e-15);
        }
    }
}

TEST_CASE("ground-state wavefunction matches its explicit form") {
    const ModelParams p(0.25, -1.0, 1.0);
    const StateLabel l(-1, 0);
    const double g = gamma_scale(p, l);
    for (double x : {-3.0, -0.4, 0.2, 1.3, 6.0}) {
        const cplx u = contour_coord(x, 1.0);
        const cplx direct = std::exp(-g * u / 2.0) * std::pow(g * u, 0.75);
        CHECK(std::abs(wavefunction(p, l, x) - direct) < 1e-14);
    }
}

TEST_CASE("wavefunction PT symmetry at a point") {
    const ModelParams p(0.25, -1.0, 1.0);
    const StateLabel l(-1, 0);
    const cplx d = std::conj(wavefunction(p, l, -1.3)) - wavefunction(p, l, 1.3);
    CHECK(std::abs(d) < 1e-13);
}

TEST_CASE("normalized wavefunction scales by |N|") {
    const ModelParams p(0.25, -1.0, 1.0);
    const StateLabel l(1, 0);
    const double nm = normalization_coefficient(p, l);
    CHECK(std::abs(wavefunction(p, l, 0.8, true) - nm * wavefunction(p, l, 0.8)) < 1e-15);
}

TEST_CASE("extended precision wavefunction agrees") {
    const ModelParams p(0.6, -2.0, 0.5);
    const StateLabel l(-1, 3);
    for (double x : {-2.0, 0.3, 5.0}) {
        const auto e = wavefunction_extended(p, l, x);
        const cplx d(static_cast<double>(e.real()), static_cast<double>(e.imag()));
        CHECK(std::abs(d - wavefunction(p, l, x)) < 1e-12 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("spectrum listing") {
    const auto spec = list_spectrum(ModelParams(0.25, -1.0, 1.0), 1);
    REQUIRE(spec.states.size() == 4);
    CHECK(spec.states[0].label == StateLabel(1, 0));
    CHECK(spec.states[0].energy == doctest::Approx(-4.0));
    CHECK(spec.states[1].label == StateLabel(-1, 0));
    CHECK(spec.states[1].energy == doctest::Approx(-0.444444).epsilon(1e-6));
    CHECK(spec.states[2].label == StateLabel(1, 1));
    CHECK(spec.states[2].energy == doctest::Approx(-0.16));
    CHECK(spec.states[3].label == StateLabel(-1, 1));
    CHECK(spec.states[3].energy == doctest::Approx(-0.081633).epsilon(1e-5));
    CHECK(spec.excluded.empty());
    CHECK(spec.states[1].norm_magnitude == doctest::Approx(0.70817).epsilon(1e-5));
    CHECK(spec.states[0].norm_magnitude == doctest::Approx(1.5022511).epsilon(1e-7));

    const auto half = list_spectrum(ModelParams(0.5, -1.0, 1.0), 0);
    REQUIRE(half.states.size() == 1);
    CHECK(half.states[0].energy == doctest::Approx(-0.25));
    REQUIRE(half.excluded.size() == 1);
    CHECK(half.excluded[0].status == Admissibility::flown_away);

    const auto upper = list_spectrum(ModelParams(0.75, -1.0, 1.0), 0);
    REQUIRE(upper.states.size() == 1);
    CHECK(upper.states[0].energy == doctest::Approx(-0.16));
    REQUIRE(upper.excluded.size() == 1);
    CHECK(upper.excluded[0].status == Admissibility::not_normalizable);
}

TEST_CASE("spectrum does not depend on the contour shift") {
    for (double c : {0.1, 1.0, 5.0}) {
        const auto s = list_spectrum(ModelParams(0.4, -1.5, c), 4);
        const auto ref = list_spectrum(ModelParams(0.4, -1.5, 1.0), 4);
        REQUIRE(s.states.size() == ref.states.size());
        for (std::size_t i = 0; i < s.states.size(); ++i) {
            CHECK(s.states[i].energy == ref.states[i].energy);
            CHECK(s.states[i].norm_magnitude == ref.states[i].norm_magnitude);
        }
    }
}
