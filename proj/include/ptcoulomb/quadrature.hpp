#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <vector>

#include "ptcoulomb/errors.hpp"

namespace ptc {

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_floor = 1e-14;
    int max_depth = 20;  // bisection levels below the initial interval
};

template <class Value>
struct QuadratureResult {
    Value value{};
    double error = 0.0;
    int evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class Value>
struct Segment {
    double a;
    double b;
    Value value;
    double error;
    int depth;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class Value, class F>
Segment<Value> gk15(F& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Value fc = f(center);
    Value kronrod = fc * kWgk[7];
    Value gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Value f1 = f(center - dx);
        const Value f2 = f(center + dx);
        const Value sum = f1 + f2;
        kronrod += sum * kWgk[j];
        if (j % 2 == 1) gauss += sum * kWg[j / 2];
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, magnitude(kronrod - gauss), depth};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over the
/// consecutive intervals given by `breakpoints`. The interval with the
/// largest error estimate is bisected until the summed error falls below
/// max(rel_tol * |I|, abs_floor). Throws ConvergenceError (carrying the
/// last two global estimates) when a segment would exceed max_depth.
template <class Value, class F>
QuadratureResult<Value> integrate_adaptive(F&& f, const std::vector<double>& breakpoints,
                                           const QuadratureOptions& opts = {}) {
    std::priority_queue<detail::Segment<Value>> heap;
    Value total{};
    double err = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] == breakpoints[i]) continue;
        auto s = detail::gk15<Value>(f, breakpoints[i], breakpoints[i + 1], 0);
        evals += 15;
        total += s.value;
        err += s.error;
        heap.push(s);
    }
    Value previous = total;
    while (!heap.empty() && err > std::max(opts.rel_tol * detail::magnitude(total), opts.abs_floor)) {
        auto worst = heap.top();
        if (worst.depth >= opts.max_depth) {
            throw ConvergenceError(
                "adaptive quadrature: refinement budget exhausted (error " + std::to_string(err) + ")",
                detail::magnitude(previous), detail::magnitude(total));
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15<Value>(f, worst.a, mid, worst.depth + 1);
        auto right = detail::gk15<Value>(f, mid, worst.b, worst.depth + 1);
        evals += 30;
        previous = total;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of incremental updates.
    Value exact_total{};
    double exact_err = 0.0;
    while (!heap.empty()) {
        exact_total += heap.top().value;
        exact_err += heap.top().error;
        heap.pop();
    }
    return {exact_total, exact_err, evals};
}

} // namespace ptc
