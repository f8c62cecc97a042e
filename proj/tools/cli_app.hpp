#pragma once
// landau_delta command-line front end. Kept in a header so the test suite can
// drive run() in-process as well as through the binary.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "landau_delta/landau_delta.hpp"
#include "landau_delta/oracle.hpp"

namespace landau_delta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char* config_env = "LANDAU_DELTA_CONFIG";

using Json = nlohmann::ordered_json;

/// Raised for argument combinations CLI11 cannot express (missing one-of flags, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "csv";
    int precision = 12;
    std::string output;
    std::string config;
};

/// %.{p}g formatting; the only number formatter used for output.
inline std::string fmt(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

/// Value as it appears in CSV at the given precision, so JSON and CSV agree.
inline Json jnum(double v, int precision) {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(fmt(v, precision).c_str(), nullptr);
}

class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add(std::vector<double> row) { rows_.push_back(std::move(row)); }
    std::size_t size() const { return rows_.size(); }

    std::string csv(int precision) const {
        std::string s;
        for (std::size_t i = 0; i < columns_.size(); ++i) s += (i ? "," : "") + columns_[i];
        s += '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + fmt(r[i], precision);
            s += '\n';
        }
        return s;
    }

    // column-wise arrays keep the document flat
    void into(Json& j, int precision) const {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            Json arr = Json::array();
            for (const auto& r : rows_) arr.push_back(jnum(r[c], precision));
            std::string key = columns_[c];
            for (char& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            j[key] = std::move(arr);
        }
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

// ---------------------------------------------------------------------------
// key=value config files

inline std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        for (auto& c : key)
            if (c == '_') c = '-';
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

/// Fill options the command line left unset from the config file.
inline void apply_config(CLI::App& sub, const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (key == "config") continue;
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (!opt) throw UsageError("unknown config key '" + key + "' for " + sub.get_name());
        if (opt->count() > 0) continue;
        try {
            opt->add_result(value);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw UsageError("config key '" + key + "': " + e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommands

struct SpectrumArgs {
    std::optional<double> lambda_over_a, g;
    long cutoff = 1'000'000;
    int levels = 10;
    long window = 1000;
    std::string tail = "corrected";
    double guard = 1e-12;
};

struct Spectrum2dArgs {
    std::optional<double> lam2;
    long cutoff = 1'000'000;
};

struct StateArgs {
    double a = 1.0;
    std::optional<double> l, x0, lambda_over_a;
    long cutoff = 1'000'000;
    std::string decay = "derived";

    boundstate::BoundState state() const {
        if (l) return boundstate::BoundState::from_lengths(a, *l);
        if (x0) return boundstate::BoundState::from_reduced_energy(*x0);
        if (lambda_over_a) {
            spectrum3d::SpectralFunction sf;
            sf.cutoff = cutoff;
            const double g = *lambda_over_a / coupling_denominator;
            return boundstate::BoundState::from_reduced_energy(spectrum3d::solve_ground(g, sf).x);
        }
        return boundstate::BoundState::from_lengths(a, 1.0);
    }
};

struct GridArgs {
    double extent = 3.0;    // transverse half-width, units of a
    double z_extent = 2.0;  // units of l
    int points = 13;
    int z_points = 9;
    std::string gauge = "landau";
};

struct TunnelArgs {
    std::optional<double> eps_ratio;
    double a_over_l = 1.0;
};

struct FigArgs {
    std::string figure;
    long cutoff = 1'000'000;
    int samples = 0;  // 0: per-figure default
    double lambda_over_a = 0.1;
};

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

inline spectrum3d::SpectralFunction spectral_function(long cutoff, long window, const std::string& tail,
                                                      double guard) {
    spectrum3d::SpectralFunction sf;
    sf.cutoff = cutoff;
    sf.window = window;
    sf.tail_mode = tail == "exact" ? spectrum3d::TailMode::exact : spectrum3d::TailMode::integral_corrected;
    sf.guard = guard;
    return sf;
}

inline std::string cmd_spectrum3d(const SpectrumArgs& s, const Common& c) {
    if (s.lambda_over_a.has_value() == s.g.has_value())
        throw UsageError("spectrum3d needs exactly one of --lambda-over-a or --g");
    if (s.levels > s.cutoff) throw UsageError("--levels must not exceed --cutoff");
    const double g = s.g ? *s.g : *s.lambda_over_a / coupling_denominator;
    const auto sf = spectral_function(s.cutoff, s.window, s.tail, s.guard);
    const spectrum3d::SolverOptions opt;
    const auto result = spectrum3d::solve_spectrum(g, sf, s.levels, opt);

    Table t({"n", "x", "residual", "bracket_lo", "bracket_hi"});
    auto row = [&](const spectrum3d::Root& r) {
        t.add({static_cast<double>(r.n), r.x, r.residual, r.bracket_lo, r.bracket_hi});
    };
    row(result.ground);
    for (const auto& r : result.levels) row(r);
    if (c.format == "csv") return t.csv(c.precision);

    Json j;
    const int p = c.precision;
    j["g"] = jnum(g, p);
    if (s.lambda_over_a) j["lambda_over_a"] = jnum(*s.lambda_over_a, p);
    j["cutoff"] = s.cutoff;
    j["window"] = s.window;
    j["tail_mode"] = s.tail;
    j["x_tolerance"] = opt.x_tolerance;
    j["residual_tolerance"] = opt.residual_tolerance;
    j["ground_x"] = jnum(result.ground.x, p);
    j["perturbative_shift"] = jnum(spectrum3d::perturbative_shift(g), p);
    j["published_perturbative_shift"] = jnum(spectrum3d::published_perturbative_shift(g), p);
    t.into(j, p);
    return j.dump(2) + "\n";
}

inline std::string cmd_spectrum2d(const Spectrum2dArgs& s, const Common& c) {
    if (!s.lam2) throw UsageError("spectrum2d needs --lam2");
    const spectrum2d::TwoDSetup setup{*s.lam2, s.cutoff};
    const double b_star = spectrum2d::solve_ground_2d(setup);
    const double b_est = spectrum2d::ground_2d_asymptotic(setup);
    const double gap = std::abs(b_star - b_est) / b_star;
    Table t({"lam2", "cutoff", "b_star", "b_est", "relative_gap"});
    t.add({*s.lam2, static_cast<double>(s.cutoff), b_star, b_est, gap});
    if (c.format == "csv") return t.csv(c.precision);
    const int p = c.precision;
    Json j;
    j["lam2"] = jnum(*s.lam2, p);
    j["cutoff"] = s.cutoff;
    j["b_star"] = jnum(b_star, p);
    j["b_est"] = jnum(b_est, p);
    j["relative_gap"] = jnum(gap, p);
    j["ground_x"] = jnum(-b_star, p);
    return j.dump(2) + "\n";
}

inline boundstate::Gauge parse_gauge(const std::string& s) {
    return s == "symmetric" ? boundstate::Gauge::symmetric : boundstate::Gauge::landau;
}

inline boundstate::DecayConvention parse_decay(const std::string& s) {
    return s == "printed" ? boundstate::DecayConvention::printed : boundstate::DecayConvention::derived;
}

inline Table current_grid(const StateArgs& st, const GridArgs& g, bool with_density) {
    const auto bs = st.state();
    const auto decay = parse_decay(st.decay);
    std::vector<std::string> cols{"x", "y", "z", "Jx", "Jy", "Jz"};
    if (with_density) cols.push_back("density");
    Table t(cols);
    const auto xs = linspace(-g.extent * bs.a, g.extent * bs.a, g.points);
    const auto zs = linspace(-g.z_extent * bs.l, g.z_extent * bs.l, g.z_points);
    for (double z : zs)
        for (double y : xs)
            for (double x : xs) {
                const boundstate::Position p{x, y, z};
                // the gauge formulas only know the derived decay; the printed one is closed-form
                const auto j = (decay == boundstate::DecayConvention::printed || g.gauge == "closed")
                                   ? boundstate::current_closed_form(p, bs, decay).current
                                   : boundstate::current(p, bs, parse_gauge(g.gauge)).current;
                std::vector<double> row{x, y, z, j.x, j.y, j.z};
                if (with_density) row.push_back(boundstate::density(p, bs));
                t.add(std::move(row));
            }
    return t;
}

inline std::string emit_table(const Table& t, const Common& c, Json j = Json::object()) {
    if (c.format == "csv") return t.csv(c.precision);
    t.into(j, c.precision);
    return j.dump(2) + "\n";
}

inline Json state_json(const boundstate::BoundState& bs, int p) {
    Json j;
    j["a"] = jnum(bs.a, p);
    j["l"] = jnum(bs.l, p);
    j["e0"] = jnum(bs.e0, p);
    j["norm"] = jnum(bs.norm, p);
    j["current_amplitude"] = jnum(boundstate::current_amplitude(bs), p);
    return j;
}

inline std::string cmd_field(const StateArgs& st, const GridArgs& g, const Common& c) {
    const auto t = current_grid(st, g, true);
    return emit_table(t, c, c.format == "json" ? state_json(st.state(), c.precision) : Json::object());
}

inline std::string cmd_tunnel(const TunnelArgs& a, const Common& c) {
    if (!a.eps_ratio) throw UsageError("tunnel needs --eps-ratio");
    tunneling::TunnelingInput in{*a.eps_ratio, boundstate::BoundState::from_lengths(a.a_over_l, 1.0)};
    const auto r = tunneling::decay_rate(in);
    Table t({"eps_ratio", "a_over_l", "w", "exponent", "prefactor"});
    t.add({*a.eps_ratio, a.a_over_l, r.w, r.exponent, r.prefactor});
    if (c.format == "csv") return t.csv(c.precision);
    const int p = c.precision;
    Json j;
    j["eps_ratio"] = jnum(*a.eps_ratio, p);
    j["a_over_l"] = jnum(a.a_over_l, p);
    j["w"] = jnum(r.w, p);
    j["exponent"] = jnum(r.exponent, p);
    j["prefactor"] = jnum(r.prefactor, p);
    return j.dump(2) + "\n";
}

inline std::string cmd_figdata(const FigArgs& f, const StateArgs& st, const Common& c) {
    const double g = f.lambda_over_a / coupling_denominator;
    if (f.figure == "f1" || f.figure == "f2") {
        const auto sf = spectral_function(f.cutoff, 1000, "corrected", 1e-12);
        Table t({"x", "f"});
        if (f.figure == "f1") {
            // x in [0, 12], integers skipped; points near them show the divergence
            const int n = f.samples > 0 ? f.samples : 2401;
            for (double x : linspace(0.0, 12.0, n)) {
                if (std::abs(x - std::round(x)) < 1e-9) continue;
                t.add({x, spectrum3d::f3(x, sf)});
            }
        } else {
            const int n = f.samples > 0 ? f.samples : 400;
            for (int i = 0; i < n; ++i) {
                const double x = -2.0 + 2.0 * i / n;  // [−2, 0)
                t.add({x, spectrum3d::f3(x, sf)});
            }
        }
        Json j;
        j["figure"] = f.figure;
        j["cutoff"] = f.cutoff;
        j["inverse_coupling"] = jnum(1.0 / g, c.precision);
        return emit_table(t, c, j);
    }
    if (f.figure == "f3") {
        GridArgs grid;
        if (f.samples > 0) grid.points = grid.z_points = f.samples;
        Json j;
        j["figure"] = f.figure;
        return emit_table(current_grid(st, grid, false), c, j);
    }
    // f4: unit-normalized planar field at z = 0
    const auto bs = st.state();
    const int n = f.samples > 0 ? f.samples : 21;
    const auto xs = linspace(-3.0 * bs.a, 3.0 * bs.a, n);
    double jmax = 0.0;
    for (double y : xs)
        for (double x : xs)
            jmax = std::max(jmax, boundstate::norm(boundstate::current_closed_form({x, y, 0.0}, bs).current));
    Table t({"x", "y", "jx", "jy"});
    for (double y : xs)
        for (double x : xs) {
            const auto j = boundstate::current_closed_form({x, y, 0.0}, bs).current;
            t.add({x, y, j.x / jmax, j.y / jmax});
        }
    Json j;
    j["figure"] = f.figure;
    j["max_current"] = jnum(jmax, c.precision);
    return emit_table(t, c, j);
}

/// Returns the document and whether every identity held.
inline std::pair<std::string, bool> cmd_verify(const Common& c) {
    const auto reports = oracle::verify_suite();
    bool all = true, pi_flag = false;
    for (const auto& r : reports) {
        all = all && r.passed;
        pi_flag = pi_flag || r.printed_form_flagged;
    }
    const int p = c.precision;
    if (c.format == "csv") {
        std::string s = "identity,arguments,numeric_re,numeric_im,closed_re,closed_im,rel_error,passed,printed_form_flagged\n";
        for (const auto& r : reports)
            s += r.identity + "," + r.arguments + "," + fmt(r.numeric.real(), p) + "," +
                 fmt(r.numeric.imag(), p) + "," + fmt(r.closed_form.real(), p) + "," +
                 fmt(r.closed_form.imag(), p) + "," + fmt(r.rel_error, p) + "," + (r.passed ? "1" : "0") +
                 "," + (r.printed_form_flagged ? "1" : "0") + "\n";
        return {s, all};
    }
    Json j;
    j["all_passed"] = all;
    j["missing_pi_flagged"] = pi_flag;
    Json id = Json::array(), args = Json::array(), err = Json::array(), budget = Json::array(),
         passed = Json::array(), flagged = Json::array();
    for (const auto& r : reports) {
        id.push_back(r.identity);
        args.push_back(r.arguments);
        err.push_back(jnum(r.rel_error, p));
        budget.push_back(jnum(r.error_budget, p));
        passed.push_back(r.passed);
        flagged.push_back(r.printed_form_flagged);
    }
    j["identity"] = id;
    j["arguments"] = args;
    j["rel_error"] = err;
    j["error_budget"] = budget;
    j["passed"] = passed;
    j["printed_form_flagged"] = flagged;
    return {j.dump(2) + "\n", all};
}

// ---------------------------------------------------------------------------

inline void add_common(CLI::App& sub, Common& c) {
    sub.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--precision", c.precision, "significant digits")->check(CLI::Range(6, 17));
    sub.add_option("--output,-o", c.output, "output file (default stdout)");
    sub.add_option("--config", c.config, "key=value file; flags override it")->envname(config_env);
}

inline void add_state(CLI::App& sub, StateArgs& st) {
    sub.add_option("--a", st.a, "magnetic length")->check(CLI::PositiveNumber);
    sub.add_option("--l", st.l, "longitudinal length")->check(CLI::PositiveNumber);
    sub.add_option("--x0", st.x0, "reduced ground energy (< 0); sets a = 1");
    sub.add_option("--lambda-over-a", st.lambda_over_a, "solve x0 from this coupling")
        ->check(CLI::PositiveNumber);
    sub.add_option("--cutoff", st.cutoff, "cutoff N when solving x0")->check(CLI::Range(1L, 1'000'000'000L));
    sub.add_option("--decay", st.decay, "derived or printed z-decay")
        ->check(CLI::IsMember({"derived", "printed"}));
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Delta-well bound states in a uniform magnetic field", "landau_delta_cli"};
    app.require_subcommand(1, 1);

    Common common;
    SpectrumArgs s3;
    Spectrum2dArgs s2;
    StateArgs state;
    GridArgs grid;
    TunnelArgs tun;
    FigArgs fig;

    auto* sp3 = app.add_subcommand("spectrum3d", "3D Landau-level roots of g f(x) = 1");
    sp3->add_option("--lambda-over-a", s3.lambda_over_a, "coupling λ/a")->check(CLI::PositiveNumber);
    sp3->add_option("--g", s3.g, "reduced coupling g")->check(CLI::PositiveNumber);
    sp3->add_option("--cutoff", s3.cutoff, "cutoff N")->check(CLI::Range(1L, 1'000'000'000L));
    sp3->add_option("--levels", s3.levels, "levels above the ground state")->check(CLI::Range(0, 100000));
    sp3->add_option("--window", s3.window, "exact-summation half-width")->check(CLI::Range(1L, 1'000'000'000L));
    sp3->add_option("--tail", s3.tail, "exact or corrected")->check(CLI::IsMember({"exact", "corrected"}));
    sp3->add_option("--guard", s3.guard, "singularity guard")->check(CLI::Range(1e-15, 0.25));
    add_common(*sp3, common);

    auto* sp2 = app.add_subcommand("spectrum2d", "2D ground state b*");
    sp2->add_option("--lam2", s2.lam2, "dimensionless 2D coupling")->check(CLI::PositiveNumber);
    sp2->add_option("--cutoff", s2.cutoff, "cutoff N")->check(CLI::Range(1L, 1'000'000'000'000L));
    add_common(*sp2, common);

    auto* fld = app.add_subcommand("field", "current and density on a grid");
    add_state(*fld, state);
    fld->add_option("--extent", grid.extent, "transverse half-width / a")->check(CLI::PositiveNumber);
    fld->add_option("--z-extent", grid.z_extent, "longitudinal half-width / l")->check(CLI::PositiveNumber);
    fld->add_option("--points", grid.points, "points per transverse axis")->check(CLI::Range(1, 1001));
    fld->add_option("--z-points", grid.z_points, "points along z")->check(CLI::Range(1, 1001));
    fld->add_option("--gauge", grid.gauge, "landau, symmetric or closed")
        ->check(CLI::IsMember({"landau", "symmetric", "closed"}));
    add_common(*fld, common);

    auto* tn = app.add_subcommand("tunnel", "weak-field decay rate");
    tn->add_option("--eps-ratio", tun.eps_ratio, "electric field over its atomic scale");
    tn->add_option("--a-over-l", tun.a_over_l, "magnetic over longitudinal length")->check(CLI::PositiveNumber);
    add_common(*tn, common);

    auto* fd = app.add_subcommand("figdata", "plot data for figures f1..f4");
    fd->add_option("figure", fig.figure, "f1, f2, f3 or f4")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}));
    fd->add_option("--samples", fig.samples, "sample count (per axis for grids)")->check(CLI::Range(2, 100000));
    fd->add_option("--lambda-over-a", fig.lambda_over_a, "coupling for the 1/g reference line")
        ->check(CLI::PositiveNumber);
    fd->add_option("--cutoff", fig.cutoff, "cutoff N")->check(CLI::Range(1L, 1'000'000'000L));
    fd->add_option("--a", state.a, "magnetic length")->check(CLI::PositiveNumber);
    fd->add_option("--l", state.l, "longitudinal length")->check(CLI::PositiveNumber);
    add_common(*fd, common);

    auto* vf = app.add_subcommand("verify", "quadrature checks of the closed-form identities");
    add_common(*vf, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        CLI::App* sub = app.get_subcommands().front();
        if (!common.config.empty()) apply_config(*sub, read_config(common.config));

        std::string doc;
        int code = exit_ok;
        if (sub == sp3) {
            doc = cmd_spectrum3d(s3, common);
        } else if (sub == sp2) {
            doc = cmd_spectrum2d(s2, common);
        } else if (sub == fld) {
            doc = cmd_field(state, grid, common);
        } else if (sub == tn) {
            doc = cmd_tunnel(tun, common);
        } else if (sub == fd) {
            doc = cmd_figdata(fig, state, common);
        } else {
            bool all = false;
            std::tie(doc, all) = cmd_verify(common);
            if (!all) code = exit_failure;
        }

        if (common.output.empty()) {
            out << doc;
        } else {
            std::ofstream f(common.output, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + common.output + "'");
            f << doc;
        }
        return code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidParameter& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return exit_usage;
    } catch (const BracketingError& e) {
        err << "error: " << e.what() << " [bracket " << fmt(e.lo(), 17) << ", " << fmt(e.hi(), 17)
            << "; residuals " << fmt(e.f_lo(), 6) << ", " << fmt(e.f_hi(), 6) << "]\n";
        return exit_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace landau_delta::cli
