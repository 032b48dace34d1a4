#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ptcoulomb/model.hpp"

namespace ptc {

struct PTCheckResult {
    double max_deviation = 0.0;
    // Phase phi in conj(f(-x)) = e^{i phi} f(x), estimated from the data.
    double phase_phi = 0.0;
};

/// max |conj(V(-x)) - V(x)| over xs. Throws DomainError if xs contains 0.
PTCheckResult check_pt_potential(const ModelParams& params, std::span<const double> xs);

/// max |conj(psi(-x)) - psi(x)| over xs for the normalized state; phi is
/// the argument of sum_x conj(psi(x)) conj(psi(-x)).
PTCheckResult check_pt_wavefunction(const ModelParams& params, const StateLabel& label,
                                    std::span<const double> xs);

/// Half-open exclusion radius around x = 0 for finite-difference grids.
inline double origin_exclusion(const ModelParams& params) { return 1e-3 * params.c(); }

struct ResidualGrid {
    double x_min;
    double x_max;
    double step;
};

struct ResidualReport {
    double grid_step = 0.0;
    double residual_norm = 0.0;          // at grid_step
    double refined_residual_norm = 0.0;  // at grid_step / 2
    double convergence_order = 0.0;      // log2 of the ratio of the two
};

/// Central-difference residual max |psi'' + (E - V) psi| / max |psi| on a
/// grid inside one half-line, repeated at half the step to estimate the
/// order. Throws DomainError when the grid crosses or touches |x| < delta.
ResidualReport schrodinger_residual(const ModelParams& params, const StateLabel& label,
                                    const ResidualGrid& grid);

struct ShootingConfig {
    double t_start;
    double t_match;
    std::pair<double, double> e_bracket;
    double tolerance;  // relative, on E
};

/// Matching radius (25 + 10 nu) / gamma for trial energy E, gamma = 2 sqrt(-E),
/// nu = |beta| / gamma the power in the decaying asymptote t^nu e^{-gamma t/2}.
/// Places the match point past the outer turning point for every n.
double shooting_match_point(const ModelParams& params, double e);

/// Start radius 1e-2 / gamma. The regular solution is the dominant one near
/// t = 0 for q = +1, so every rounding error seeds the recessive one with
/// relative weight eps * t^{-2 alpha}; starting here keeps that below 1e-12.
/// The Frobenius series is entire, so it is still exact to rounding at this t.
inline double shooting_start_point(double gamma) { return 1e-2 / gamma; }

/// t_start = shooting_start_point, t_match = shooting_match_point and a +/-20% bracket
/// around the analytic energy of `label`.
ShootingConfig default_shooting_config(const ModelParams& params, const StateLabel& label);

/// Scale-free log-derivative mismatch at t_match for trial energy E < 0:
///   (phi' + kappa phi) / sqrt(phi^2 + (phi'/kappa)^2),  kappa = sqrt(-E),
/// where phi is integrated outward from t_start, starting from the regular
/// Frobenius series t^s (1 + beta t / (2s) + ...), s = 1/2 - q alpha.
/// Vanishes on bound states.
double shooting_miss(const ModelParams& params, int q, double e, const ShootingConfig& config);

/// Bound-state energy inside config.e_bracket (bracket argument overrides
/// the one in config). Throws BracketError when the miss function has the
/// same sign at both ends, StepSizeError if integration does not settle,
/// DomainError when s = 0 (alpha = 1/2, q = +1).
double shooting_eigensolve(const ModelParams& params, int q, std::pair<double, double> e_bracket,
                           const ShootingConfig& config);

/// Blind search: sign changes of the miss function on a log grid of
/// `points` energies between e_deep and e_shallow (both negative), each
/// refined by shooting_eigensolve. Sorted ascending.
std::vector<double> shooting_scan(const ModelParams& params, int q, double e_deep,
                                  double e_shallow, int points);

struct HermitianLimitReport {
    double max_discrepancy = 0.0;    // relative, vs -beta^2 / (2(n + l + 1))^2
    double max_c_dependence = 0.0;   // relative spread across c in {0.1, 1, 5}
    int states_checked = 0;
};

HermitianLimitReport hermitian_limit_check(const ModelParams& params, int n_max);

struct SweepRow {
    double alpha;
    Admissibility status;
    std::optional<double> energy;
};

std::vector<SweepRow> alpha_sweep(double beta, int q, int n, std::span<const double> alphas);

} // namespace ptc
