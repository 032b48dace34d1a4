#include "ptcoulomb/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/pseudonorm.hpp"

namespace ptc {

namespace {

void require_nonzero(std::span<const double> xs) {
    for (double x : xs) {
        if (x == 0.0) throw DomainError("PT check: sample points must exclude x = 0");
    }
}

// Regular small-t solution t^s sum_k a_k t^k of t^2 phi'' = (G + beta t - E t^2) phi
// with G = s(s-1): a_0 = 1, a_1 = beta/(2s), and
//   a_k k (2s + k - 1) = beta a_{k-1} - E a_{k-2}.
// Returns phi and t dphi/dt, summed until terms drop below 1e-17.
struct ShootState {
    double phi;
    double dphi_dt;
};

std::pair<double, double> frobenius_start(double beta, double s, double e, double t) {
    double a_prev2 = 0.0;
    double a_prev = 1.0;
    double tk = 1.0;
    double sum = 1.0;
    double dsum = s;
    for (int k = 1; k < 200; ++k) {
        const double a = (beta * a_prev - e * a_prev2) / (k * (2.0 * s + k - 1.0));
        tk *= t;
        const double term = a * tk;
        sum += term;
        dsum += (s + k) * term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) break;
        a_prev2 = a_prev;
        a_prev = a;
    }
    const double ts = std::pow(t, s);
    return {ts * sum, ts * dsum};
}

// Outward RK4 in y = ln t for phi_yy = phi_y + (G + beta t - E t^2) phi.
ShootState integrate_outward(double g_core, double beta, double s, double e, double t_start,
                             double t_match, long steps) {
    const double y0 = std::log(t_start);
    const double h = (std::log(t_match) - y0) / static_cast<double>(steps);
    auto [phi, dphi] = frobenius_start(beta, s, e, t_start);

    auto accel = [&](double y, double f, double df) {
        const double t = std::exp(y);
        return df + (g_core + beta * t - e * t * t) * f;
    };
    double y = y0;
    for (long i = 0; i < steps; ++i) {
        const double k1f = dphi;
        const double k1d = accel(y, phi, dphi);
        const double k2f = dphi + 0.5 * h * k1d;
        const double k2d = accel(y + 0.5 * h, phi + 0.5 * h * k1f, dphi + 0.5 * h * k1d);
        const double k3f = dphi + 0.5 * h * k2d;
        const double k3d = accel(y + 0.5 * h, phi + 0.5 * h * k2f, dphi + 0.5 * h * k2d);
        const double k4f = dphi + h * k3d;
        const double k4d = accel(y + h, phi + h * k3f, dphi + h * k3d);
        phi += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        dphi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        y = y0 + h * static_cast<double>(i + 1);
    }
    return {phi, dphi / t_match};
}

double miss_with_steps(const ModelParams& params, int q, double e, const ShootingConfig& config,
                       long steps) {
    const double s = 0.5 - q * params.alpha();
    const auto st = integrate_outward(params.core_strength(), params.beta(), s, e, config.t_start,
                                      config.t_match, steps);
    const double kappa = std::sqrt(-e);
    return (st.dphi_dt + kappa * st.phi) / std::hypot(st.phi, st.dphi_dt / kappa);
}

constexpr long kInitialSteps = 1024;
constexpr long kMaxSteps = 1L << 22;
constexpr double kStepAgreement = 1e-9;
constexpr double kRootAgreement = 1e-10;

// Doubles the step count until the miss function at both bracket ends
// agrees to kStepAgreement between successive resolutions. Near a root the
// miss function is exponentially sensitive, so only the endpoints are used.
long settled_steps(const ModelParams& params, int q, const ShootingConfig& config) {
    long steps = kInitialSteps;
    const std::array<double, 2> ends = {config.e_bracket.first, config.e_bracket.second};
    std::array<double, 2> coarse{};
    for (std::size_t i = 0; i < 2; ++i) coarse[i] = miss_with_steps(params, q, ends[i], config, steps);
    while (2 * steps <= kMaxSteps) {
        std::array<double, 2> fine{};
        for (std::size_t i = 0; i < 2; ++i) fine[i] = miss_with_steps(params, q, ends[i], config, 2 * steps);
        steps *= 2;
        if (std::abs(fine[0] - coarse[0]) <= kStepAgreement &&
            std::abs(fine[1] - coarse[1]) <= kStepAgreement) {
            return steps;
        }
        coarse = fine;
    }
    throw StepSizeError("shooting: miss function not settled at " + std::to_string(steps) + " steps");
}

double solve_at_resolution(const ModelParams& params, int q, double a, double b,
                           const ShootingConfig& config, long steps) {
    auto miss = [&](double e) { return miss_with_steps(params, q, e, config, steps); };
    double fa = miss(a);
    double fb = miss(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0)) {
        throw BracketError("shooting: miss function has the same sign at E = " + std::to_string(a) +
                           " and E = " + std::to_string(b));
    }
    // Bisection narrows the bracket by ~1e-6, then safeguarded secant.
    for (int i = 0; i < 20; ++i) {
        const double mid = 0.5 * (a + b);
        const double fm = miss(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    // Secant steps that would leave the bracket, or fail to shrink it by
    // half, fall back to bisection.
    for (int i = 0; i < 200 && b - a > config.tolerance * std::abs(0.5 * (a + b)); ++i) {
        const double width = b - a;
        double next = b - fb * (b - a) / (fb - fa);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        const double fn = miss(next);
        if (fn == 0.0) return next;
        if ((fn < 0.0) == (fa < 0.0)) {
            a = next;
            fa = fn;
        } else {
            b = next;
            fb = fn;
        }
        if (b - a > 0.5 * width) {
            const double mid = 0.5 * (a + b);
            const double fm = miss(mid);
            if (fm == 0.0) return mid;
            if ((fm < 0.0) == (fa < 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
                fb = fm;
            }
        }
    }
    return 0.5 * (a + b);
}

void require_regular_start(const ModelParams& params, int q) {
    if (q != 1 && q != -1) throw std::invalid_argument("quasi-parity q must be +1 or -1");
    if (std::abs(0.5 - q * params.alpha()) < 1e-12) {
        throw DomainError("shooting: small-t exponent s = 0 (alpha = 1/2, q = +1) needs a logarithmic start");
    }
}

} // namespace

PTCheckResult check_pt_potential(const ModelParams& params, std::span<const double> xs) {
    require_nonzero(xs);
    PTCheckResult r;
    std::complex<double> overlap{};
    for (double x : xs) {
        const auto v = potential(params, x);
        const auto reflected = std::conj(potential(params, -x));
        r.max_deviation = std::max(r.max_deviation, std::abs(reflected - v));
        overlap += std::conj(v) * reflected;
    }
    r.phase_phi = std::arg(overlap);
    return r;
}

PTCheckResult check_pt_wavefunction(const ModelParams& params, const StateLabel& label,
                                    std::span<const double> xs) {
    require_nonzero(xs);
    const double norm = normalization_coefficient(params, label);
    PTCheckResult r;
    std::complex<double> overlap{};
    for (double x : xs) {
        const auto psi = norm * wavefunction(params, label, x);
        const auto reflected = std::conj(norm * wavefunction(params, label, -x));
        r.max_deviation = std::max(r.max_deviation, std::abs(reflected - psi));
        overlap += std::conj(psi) * reflected;
    }
    r.phase_phi = std::arg(overlap);
    return r;
}

ResidualReport schrodinger_residual(const ModelParams& params, const StateLabel& label,
                                    const ResidualGrid& grid) {
    if (!(grid.step > 0.0) || !(grid.x_max > grid.x_min)) {
        throw std::invalid_argument("residual grid needs x_min < x_max and step > 0");
    }
    const double delta = origin_exclusion(params);
    const bool right = grid.x_min >= delta;
    const bool left = grid.x_max <= -delta;
    if (!right && !left) {
        throw DomainError("residual grid must lie in one half-line with |x| >= " + std::to_string(delta));
    }
    using ld = long double;
    const ld e = energy(params, label);

    auto measure = [&](ld h) {
        const long count = std::lround((grid.x_max - grid.x_min) / static_cast<double>(h));
        ld max_res = 0;
        ld max_psi = 0;
        std::complex<ld> prev = wavefunction_extended(params, label, grid.x_min);
        std::complex<ld> cur = wavefunction_extended(params, label, grid.x_min + h);
        max_psi = std::max(std::abs(prev), std::abs(cur));
        for (long i = 1; i < count; ++i) {
            const ld x = static_cast<ld>(grid.x_min) + h * static_cast<ld>(i);
            const auto next = wavefunction_extended(params, label, x + h);
            const auto d2 = (next - ld(2) * cur + prev) / (h * h);
            const auto v = potential<ld>(params.alpha(), params.beta(), params.c(), x);
            max_res = std::max(max_res, std::abs(d2 + (e - v) * cur));
            max_psi = std::max(max_psi, std::abs(next));
            prev = cur;
            cur = next;
        }
        return static_cast<double>(max_res / max_psi);
    };

    ResidualReport r;
    r.grid_step = grid.step;
    r.residual_norm = measure(static_cast<ld>(grid.step));
    r.refined_residual_norm = measure(static_cast<ld>(grid.step) / 2);
    r.convergence_order = std::log2(r.residual_norm / r.refined_residual_norm);
    return r;
}

double shooting_match_point(const ModelParams& params, double e) {
    const double g = 2.0 * std::sqrt(-e);
    const double nu = std::abs(params.beta()) / g;
    return (25.0 + 10.0 * nu) / g;
}

ShootingConfig default_shooting_config(const ModelParams& params, const StateLabel& label) {
    const double e = energy(params, label);
    const double g = gamma_scale(params, label);
    return {shooting_start_point(g), shooting_match_point(params, e), {1.2 * e, 0.8 * e}, 1e-12};
}

double shooting_miss(const ModelParams& params, int q, double e, const ShootingConfig& config) {
    require_regular_start(params, q);
    if (!(e < 0.0)) throw std::invalid_argument("shooting: trial energy must be negative");
    return miss_with_steps(params, q, e, config, settled_steps(params, q, config));
}

double shooting_eigensolve(const ModelParams& params, int q, std::pair<double, double> e_bracket,
                           const ShootingConfig& config) {
    require_regular_start(params, q);
    if (!(config.t_start > 0.0 && config.t_start < config.t_match)) {
        throw std::invalid_argument("shooting: need 0 < t_start < t_match");
    }
    const double a = std::min(e_bracket.first, e_bracket.second);
    const double b = std::max(e_bracket.first, e_bracket.second);
    if (!(b < 0.0)) throw std::invalid_argument("shooting: bracket must lie below zero");

    ShootingConfig cfg = config;
    cfg.e_bracket = {a, b};
    long steps = settled_steps(params, q, cfg);
    double root = solve_at_resolution(params, q, a, b, cfg, steps);
    while (2 * steps <= kMaxSteps) {
        const double refined = solve_at_resolution(params, q, a, b, cfg, 2 * steps);
        if (std::abs(refined - root) <= kRootAgreement * std::abs(refined)) return refined;
        root = refined;
        steps *= 2;
    }
    throw StepSizeError("shooting: eigenvalue not settled under step refinement");
}

std::vector<double> shooting_scan(const ModelParams& params, int q, double e_deep,
                                  double e_shallow, int points) {
    require_regular_start(params, q);
    if (!(e_deep < e_shallow && e_shallow < 0.0) || points < 2) {
        throw std::invalid_argument("shooting scan: need e_deep < e_shallow < 0 and points >= 2");
    }
    const double lo = std::log(-e_shallow);
    const double hi = std::log(-e_deep);
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = -std::exp(hi + (lo - hi) * i / (points - 1));
    }
    std::vector<double> found;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double e_mid = 0.5 * (grid[i] + grid[i + 1]);
        const double g = 2.0 * std::sqrt(-e_mid);
        const ShootingConfig cfg{shooting_start_point(g), shooting_match_point(params, e_mid), {grid[i], grid[i + 1]},
                                 1e-12};
        const long steps = settled_steps(params, q, cfg);
        const double fa = miss_with_steps(params, q, grid[i], cfg, steps);
        const double fb = miss_with_steps(params, q, grid[i + 1], cfg, steps);
        if ((fa < 0.0) != (fb < 0.0)) {
            found.push_back(shooting_eigensolve(params, q, cfg.e_bracket, cfg));
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

HermitianLimitReport hermitian_limit_check(const ModelParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    HermitianLimitReport r;
    const double ell = params.alpha() - 0.5;
    const double beta = params.beta();
    constexpr std::array<double, 3> shifts = {0.1, 1.0, 5.0};
    for (int n = 0; n <= n_max; ++n) {
        const StateLabel label(-1, n);
        const double e = energy(params, label);
        const double denom = 2.0 * (n + ell + 1.0);
        const double textbook = -beta * beta / (denom * denom);
        r.max_discrepancy = std::max(r.max_discrepancy, std::abs(e - textbook) / std::abs(textbook));
        for (double c : shifts) {
            const ModelParams shifted(params.alpha(), beta, c);
            for (int q : {1, -1}) {
                const StateLabel l(q, n);
                if (admissibility(shifted, l) != Admissibility::admissible) continue;
                const double ref = energy(params, l);
                r.max_c_dependence =
                    std::max(r.max_c_dependence, std::abs(energy(shifted, l) - ref) / std::abs(ref));
            }
        }
        ++r.states_checked;
    }
    return r;
}

std::vector<SweepRow> alpha_sweep(double beta, int q, int n, std::span<const double> alphas) {
    const StateLabel label(q, n);
    std::vector<SweepRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        const ModelParams params(a, beta, 1.0);
        const auto status = admissibility(params, label);
        std::optional<double> e;
        if (status == Admissibility::admissible) e = energy(params, label);
        rows.push_back({a, status, e});
    }
    return rows;
}

} // namespace ptc
