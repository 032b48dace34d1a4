#include "ptcoulomb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/model.hpp"
#include "ptcoulomb/pseudonorm.hpp"
#include "ptcoulomb/verification.hpp"

namespace ptc {

namespace {

using Cell = std::variant<std::monostate, double, long long, std::string, bool>;
using json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct CommonOptions {
    double alpha = 0.25;
    double beta = -1.0;
    double c = 1.0;
    std::string format = "json";
};

// Thrown for argument values that parse but are semantically invalid.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// RFC 4180 quoting, only when the text needs it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

Cell opt_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) out << format_double(v);
                    else if constexpr (std::is_same_v<T, long long>) out << v;
                    else if constexpr (std::is_same_v<T, std::string>) out << csv_field(v);
                    else if constexpr (std::is_same_v<T, bool>) out << (v ? "true" : "false");
                },
                row[i]);
        }
        out << '\n';
    }
}

void write_json(const std::string& command, const CommonOptions& opts, const Table& t,
                const json& extra, std::ostream& out) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["params"] = {{"alpha", opts.alpha}, {"beta", opts.beta}, {"c", opts.c}};
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) r[t.columns[i]] = nullptr;
                    else r[t.columns[i]] = v;
                },
                row[i]);
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    for (const auto& [k, v] : extra.items()) doc[k] = v;
    out << doc.dump(2) << '\n';
}

void emit(const std::string& command, const CommonOptions& opts, const Table& t, std::ostream& out,
          const json& extra = json::object()) {
    if (opts.format == "csv") {
        write_csv(t, out);
    } else {
        write_json(command, opts, t, extra, out);
    }
}

void add_common(CLI::App* sub, CommonOptions& opts) {
    sub->add_option("--alpha", opts.alpha, "core parameter alpha, 0 < alpha < 1")->capture_default_str();
    sub->add_option("--beta", opts.beta, "Coulomb coupling beta (attractive < 0)")->capture_default_str();
    sub->add_option("--c", opts.c, "contour shift c > 0")->capture_default_str();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

ModelParams make_params(const CommonOptions& opts) {
    try {
        return ModelParams(opts.alpha, opts.beta, opts.c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

StateLabel make_label(int q, int n) {
    try {
        return StateLabel(q, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_admissible(const ModelParams& params, const StateLabel& label) {
    const auto status = admissibility(params, label);
    if (status != Admissibility::admissible) throw UsageError(AdmissibilityError(label, status).what());
}

// --- spectrum ---------------------------------------------------------------

Table spectrum_table(const ModelParams& params, int n_max) {
    const Spectrum spec = list_spectrum(params, n_max);
    Table t{{"q", "n", "admissibility", "energy", "gamma", "norm_magnitude"}, {}};
    for (const auto& s : spec.states) {
        t.rows.push_back({static_cast<long long>(s.label.q()), static_cast<long long>(s.label.n()),
                          std::string(to_string(Admissibility::admissible)), s.energy, s.gamma,
                          s.norm_magnitude});
    }
    for (const auto& x : spec.excluded) {
        t.rows.push_back({static_cast<long long>(x.label.q()), static_cast<long long>(x.label.n()),
                          std::string(to_string(x.status)), std::monostate{}, std::monostate{},
                          std::monostate{}});
    }
    return t;
}

// --- wavefunc ---------------------------------------------------------------

Table wavefunction_table(const ModelParams& params, const StateLabel& label, double x_min,
                         double x_max, int points, bool normalized) {
    if (points < 2 || !(x_max > x_min)) throw UsageError("wavefunc: need --points >= 2 and x-min < x-max");
    const double scale = normalized ? normalization_coefficient(params, label) : 1.0;
    Table t{{"x", "re_psi", "im_psi", "abs_psi"}, {}};
    for (int i = 0; i < points; ++i) {
        const double x = x_min + (x_max - x_min) * i / (points - 1);
        const auto psi = scale * wavefunction(params, label, x);
        t.rows.push_back({x, psi.real(), psi.imag(), std::abs(psi)});
    }
    return t;
}

// --- norm -------------------------------------------------------------------

Table norm_table(const ModelParams& params, const StateLabel& label, const std::string& method) {
    std::vector<PseudoNormResult> results;
    std::optional<double> segment;
    bool closed_available = true;
    const bool all = method == "all";
    if (all || method == "closed") {
        try {
            results.push_back(pseudo_norm_closed(params, label));
        } catch (const DomainError&) {
            closed_available = false;
            if (!all) throw;
        }
    }
    if (all || method == "half-line") {
        results.push_back(pseudo_norm_quadrature(params, label, QuadratureMode::half_line));
    }
    if (all || method == "real-line") {
        results.push_back(pseudo_norm_quadrature(params, label, QuadratureMode::real_line));
        segment = contour_segment_term(params, label);
    }

    // Reference for cross-method deltas: closed form when defined, else half-line.
    std::optional<double> reference;
    if (closed_available) {
        try {
            reference = pseudo_norm_closed(params, label).value;
        } catch (const DomainError&) {
        }
    }
    if (!reference) reference = pseudo_norm_quadrature(params, label, QuadratureMode::half_line).value;

    Table t{{"method", "value", "sigma", "norm_magnitude", "imag_residual", "error_estimate",
             "rel_delta", "segment_term"},
            {}};
    for (const auto& r : results) {
        const std::optional<double> nm =
            r.value > 0.0 ? std::optional<double>(1.0 / std::sqrt(r.value)) : std::nullopt;
        const std::optional<double> seg =
            r.method == NormMethod::real_line_quadrature ? segment : std::nullopt;
        t.rows.push_back({std::string(to_string(r.method)), r.value, static_cast<long long>(r.sigma),
                          opt_cell(nm), r.imag_residual, r.error_estimate,
                          (r.value - *reference) / *reference, opt_cell(seg)});
    }
    return t;
}

// --- verify -----------------------------------------------------------------

struct Check {
    std::string suite;
    std::string name;
    double measured;
    double threshold;
    bool pass;
};

std::string state_tag(const StateLabel& l) {
    return "q=" + std::string(l.q() > 0 ? "+1" : "-1") + " n=" + std::to_string(l.n());
}

std::vector<StateLabel> admissible_labels(const ModelParams& params, int n_max) {
    std::vector<StateLabel> out;
    for (const auto& s : list_spectrum(params, n_max).states) out.push_back(s.label);
    return out;
}

std::vector<double> symmetric_grid(double half_width, int points) {
    std::vector<double> xs;
    for (int i = 0; i < points; ++i) {
        const double x = -half_width + 2.0 * half_width * i / (points - 1);
        if (x != 0.0 && std::abs(x) > 1e-12 * half_width) xs.push_back(x);
    }
    return xs;
}

void suite_pt(const ModelParams& params, int n_max, std::vector<Check>& checks) {
    const auto xs_v = symmetric_grid(10.0, 201);
    const auto pv = check_pt_potential(params, xs_v);
    checks.push_back({"pt", "potential", pv.max_deviation, 1e-15, pv.max_deviation <= 1e-15});
    for (const auto& label : admissible_labels(params, n_max)) {
        const auto xs = symmetric_grid(10.0 / gamma_scale(params, label), 201);
        const auto r = check_pt_wavefunction(params, label, xs);
        checks.push_back({"pt", "wavefunction " + state_tag(label), r.max_deviation, 1e-12,
                          r.max_deviation <= 1e-12});
        checks.push_back({"pt", "phase " + state_tag(label), std::abs(r.phase_phi), 1e-10,
                          std::abs(r.phase_phi) <= 1e-10});
    }
}

void suite_residual(const ModelParams& params, int n_max, std::vector<Check>& checks) {
    for (const auto& label : admissible_labels(params, n_max)) {
        const double x_lo = std::max(0.1, 2.0 * origin_exclusion(params));
        const double x_hi = std::max(15.0, 20.0 / gamma_scale(params, label));
        for (int side : {1, -1}) {
            const ResidualGrid grid = side > 0 ? ResidualGrid{x_lo, x_hi, 1e-3}
                                               : ResidualGrid{-x_hi, -x_lo, 1e-3};
            const auto r = schrodinger_residual(params, label, grid);
            const bool ok = r.convergence_order >= 1.8 && r.convergence_order <= 2.2;
            checks.push_back({"residual",
                              "order " + state_tag(label) + (side > 0 ? " x>0" : " x<0"),
                              r.convergence_order, 2.0, ok});
        }
    }
}

void suite_shooting(const ModelParams& params, int n_max, std::vector<Check>& checks) {
    std::vector<double> energies_plus;
    std::vector<double> energies_minus;
    for (const auto& label : admissible_labels(params, n_max)) {
        const double exact = energy(params, label);
        (label.q() > 0 ? energies_plus : energies_minus).push_back(exact);
        if (std::abs(0.5 - label.q() * params.alpha()) < 1e-12) continue;  // logarithmic start
        const auto cfg = default_shooting_config(params, label);
        const double e = shooting_eigensolve(params, label.q(), cfg.e_bracket, cfg);
        const double rel = std::abs(e - exact) / std::abs(exact);
        checks.push_back({"shooting", "eigenvalue " + state_tag(label), rel, 1e-6, rel <= 1e-6});
    }
    // Quasi-parity selects the boundary behaviour: a blind scan with one
    // exponent must find its own family and none of the other.
    std::vector<double> all_e = energies_plus;
    all_e.insert(all_e.end(), energies_minus.begin(), energies_minus.end());
    if (all_e.empty()) return;
    const double deep = 1.5 * *std::min_element(all_e.begin(), all_e.end());
    const double shallow = 0.7 * *std::max_element(all_e.begin(), all_e.end());
    for (int q : {1, -1}) {
        if (std::abs(0.5 - q * params.alpha()) < 1e-12) continue;
        const auto found = shooting_scan(params, q, deep, shallow, 400);
        const auto& own = q > 0 ? energies_plus : energies_minus;
        const auto& other = q > 0 ? energies_minus : energies_plus;
        auto near = [](const std::vector<double>& set, double e) {
            return std::any_of(set.begin(), set.end(),
                               [&](double x) { return std::abs(x - e) <= 1e-6 * std::abs(x); });
        };
        std::size_t matched_own = 0;
        std::size_t matched_other = 0;
        for (double e : found) {
            if (near(own, e)) ++matched_own;
            if (near(other, e)) ++matched_other;
        }
        const std::string tag = q > 0 ? "+1" : "-1";
        checks.push_back({"shooting", "selector q=" + tag + " finds own family",
                          static_cast<double>(matched_own), static_cast<double>(own.size()),
                          matched_own == own.size()});
        checks.push_back({"shooting", "selector q=" + tag + " rejects other family",
                          static_cast<double>(matched_other), 0.0, matched_other == 0});
    }
}

void suite_limit(const ModelParams& params, int n_max, std::vector<Check>& checks) {
    const auto h = hermitian_limit_check(params, n_max);
    const double eps_tol = 4.0 * std::numeric_limits<double>::epsilon();
    checks.push_back({"limit", "hermitian coulomb identity", h.max_discrepancy, eps_tol,
                      h.max_discrepancy <= eps_tol});
    checks.push_back({"limit", "c independence", h.max_c_dependence, 0.0, h.max_c_dependence == 0.0});

    const std::vector<double> alphas = {0.4, 0.45, 0.49, 0.499, 0.5};
    const auto rows = alpha_sweep(params.beta(), 1, 0, alphas);
    bool increasing = true;
    for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
        increasing = increasing && rows[i].energy && rows[i + 1].energy &&
                     std::abs(*rows[i + 1].energy) > std::abs(*rows[i].energy);
    }
    const double last = rows[3].energy ? std::abs(*rows[3].energy) : 0.0;
    checks.push_back({"limit", "flown-away divergence q=+1 n=0", last, 0.0, increasing});
    const bool flown = rows[4].status == Admissibility::flown_away;
    checks.push_back({"limit", "flown-away at alpha=1/2", flown ? 1.0 : 0.0, 1.0, flown});
}

Table checks_table(const std::vector<Check>& checks) {
    Table t{{"suite", "check", "measured", "threshold", "pass"}, {}};
    for (const auto& c : checks) t.rows.push_back({c.suite, c.name, c.measured, c.threshold, c.pass});
    return t;
}

// --- sweep ------------------------------------------------------------------

std::vector<double> parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw UsageError("--alpha-grid expects a:b:step");
    }
    auto parse = [&](const std::string& s) {
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw UsageError("--alpha-grid: cannot parse '" + s + "'");
        }
        return v;
    };
    const double a = parse(text.substr(0, first));
    const double b = parse(text.substr(first + 1, second - first - 1));
    const double step = parse(text.substr(second + 1));
    if (!(step > 0.0) || b < a) throw UsageError("--alpha-grid needs a <= b and step > 0");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 1000000) throw UsageError("--alpha-grid has too many points");
    std::vector<double> out;
    for (long i = 0; i < count; ++i) out.push_back(a + step * static_cast<double>(i));
    for (double v : out) {
        if (!(v > 0.0 && v < 1.0)) throw UsageError("--alpha-grid values must lie in (0, 1)");
    }
    return out;
}

Table sweep_table(double beta, int q, int n, const std::vector<double>& alphas) {
    Table t{{"alpha", "admissibility", "energy"}, {}};
    for (const auto& row : alpha_sweep(beta, q, n, alphas)) {
        t.rows.push_back({row.alpha, std::string(to_string(row.status)), opt_cell(row.energy)});
    }
    return t;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"PT-symmetric Coulomb model: spectra, wavefunctions, pseudo-norms, verification",
                 "ptcoulomb"};
    app.require_subcommand(1);

    CommonOptions spectrum_opts, wave_opts, norm_opts, verify_opts, sweep_opts;
    int n_max = 3;
    auto* spectrum = app.add_subcommand("spectrum", "bound-state spectrum for both quasi-parities");
    add_common(spectrum, spectrum_opts);
    spectrum->add_option("--n-max", n_max, "largest radial index")->capture_default_str();

    int wq = 0, wn = 0, points = 201;
    double x_min = -10.0, x_max = 10.0;
    bool unnormalized = false;
    auto* wave = app.add_subcommand("wavefunc", "sample psi(x) on a uniform grid");
    add_common(wave, wave_opts);
    wave->add_option("--q", wq, "quasi-parity +1 or -1")->required();
    wave->add_option("--n", wn, "radial index")->required();
    wave->add_option("--x-min", x_min)->capture_default_str();
    wave->add_option("--x-max", x_max)->capture_default_str();
    wave->add_option("--points", points)->capture_default_str();
    wave->add_flag("--unnormalized", unnormalized, "emit psi with N = 1");

    int nq = 0, nn = 0;
    std::string method = "all";
    auto* norm = app.add_subcommand("norm", "pseudo-norm by closed form and quadrature");
    add_common(norm, norm_opts);
    norm->add_option("--q", nq, "quasi-parity +1 or -1")->required();
    norm->add_option("--n", nn, "radial index")->required();
    norm->add_option("--method", method)
        ->check(CLI::IsMember({"closed", "half-line", "real-line", "all"}))
        ->capture_default_str();

    std::string suite = "all";
    int verify_n_max = 3;
    auto* verify = app.add_subcommand("verify", "run verification suites; exit 0 iff all pass");
    add_common(verify, verify_opts);
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"pt", "residual", "shooting", "limit", "all"}))
        ->capture_default_str();
    verify->add_option("--n-max", verify_n_max, "largest radial index checked")->capture_default_str();

    int sq = 1, sn = 0;
    std::string grid;
    auto* sweep = app.add_subcommand("sweep", "energy (or exclusion flag) across an alpha grid");
    add_common(sweep, sweep_opts);
    sweep->add_option("--q", sq, "quasi-parity +1 or -1")->required();
    sweep->add_option("--n", sn, "radial index")->required();
    sweep->add_option("--alpha-grid", grid, "a:b:step")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*spectrum) {
            if (n_max < 0) throw UsageError("--n-max must be >= 0");
            emit("spectrum", spectrum_opts, spectrum_table(make_params(spectrum_opts), n_max), out);
        } else if (*wave) {
            const auto params = make_params(wave_opts);
            const auto label = make_label(wq, wn);
            require_admissible(params, label);
            emit("wavefunc", wave_opts,
                 wavefunction_table(params, label, x_min, x_max, points, !unnormalized), out);
        } else if (*norm) {
            const auto params = make_params(norm_opts);
            const auto label = make_label(nq, nn);
            require_admissible(params, label);
            emit("norm", norm_opts, norm_table(params, label, method), out);
        } else if (*verify) {
            const auto params = make_params(verify_opts);
            if (verify_n_max < 0) throw UsageError("--n-max must be >= 0");
            std::vector<Check> checks;
            if (suite == "pt" || suite == "all") suite_pt(params, verify_n_max, checks);
            if (suite == "residual" || suite == "all") suite_residual(params, verify_n_max, checks);
            if (suite == "shooting" || suite == "all") suite_shooting(params, verify_n_max, checks);
            if (suite == "limit" || suite == "all") suite_limit(params, verify_n_max, checks);
            const bool all_pass =
                std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
            for (const auto& c : checks) {
                if (!c.pass) {
                    err << "FAIL " << c.suite << ": " << c.name << " (measured "
                        << format_double(c.measured) << ", threshold " << format_double(c.threshold)
                        << ")\n";
                }
            }
            emit("verify", verify_opts, checks_table(checks), out,
                 json{{"suite", suite}, {"all_pass", all_pass}});
            return all_pass ? 0 : 1;
        } else if (*sweep) {
            const auto alphas = parse_grid(grid);
            make_label(sq, sn);
            if (!(sweep_opts.beta != 0.0)) throw UsageError("beta must be non-zero");
            emit("sweep", sweep_opts, sweep_table(sweep_opts.beta, sq, sn, alphas), out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (last estimates " << format_double(e.previous_estimate)
            << ", " << format_double(e.last_estimate) << ")\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ptcoulomb");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace ptc
