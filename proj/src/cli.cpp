#include "conjdirac/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "conjdirac/checks.hpp"
#include "conjdirac/spectrum.hpp"
#include "conjdirac/wavefn.hpp"

namespace conjdirac {

namespace {

std::string format_double(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cell_text(const Cell& c, int digits) {
    return std::visit(
        [digits](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v, digits);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

void require_finite(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d)) {
        throw NumericalError("non-finite value in output");
    }
}

void write_csv(const OutputRecord& rec, std::ostream& out) {
    out << "# schema_version=" << kSchemaVersion << '\n';
    out << "# command=" << rec.command << '\n';
    out << "# alpha=" << format_double(rec.alpha, 17) << '\n';
    out << "# rest_energy_eV=" << format_double(rec.rest_energy_ev, 17) << '\n';
    for (const auto& [key, value] : rec.extra_meta) {
        out << "# " << key << '=' << cell_text(value, 17) << '\n';
    }
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(rec.columns[i]);
    }
    out << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(cell_text(row[i], 17));
        }
        out << '\n';
    }
}

void write_json(const OutputRecord& rec, std::ostream& out) {
    nlohmann::ordered_json meta;
    meta["schema_version"] = kSchemaVersion;
    meta["command"] = rec.command;
    meta["alpha"] = rec.alpha;
    meta["rest_energy_eV"] = rec.rest_energy_ev;
    for (const auto& [key, value] : rec.extra_meta) {
        meta[key] = cell_json(value);
    }
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[rec.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_table(const OutputRecord& rec, std::ostream& out) {
    out << "schema_version " << kSchemaVersion << "  alpha " << format_double(rec.alpha, 10) << "  rest_energy_eV "
        << format_double(rec.rest_energy_ev, 10) << '\n';
    for (const auto& [key, value] : rec.extra_meta) {
        out << key << ' ' << cell_text(value, 10) << '\n';
    }
    std::vector<std::size_t> width(rec.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        width[i] = rec.columns[i].size();
    }
    for (const auto& row : rec.rows) {
        auto& line = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i], 10));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        out << '\n';
    };
    emit(rec.columns);
    for (const auto& line : text) {
        emit(line);
    }
}

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"table", OutputFormat::table}};

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        s += (s.empty() ? "" : " ") + a;
    }
    return s;
}

OutputRecord base_record(const std::vector<std::string>& args, const PhysicsConfig& config) {
    OutputRecord rec;
    rec.command = join_args(args);
    rec.alpha = config.alpha();
    rec.rest_energy_ev = config.rest_energy_ev();
    return rec;
}

OutputRecord spectrum_record(const std::vector<std::string>& args, int n_max, const PhysicsConfig& config) {
    auto rec = base_record(args, config);
    rec.columns = {"n", "kappa", "l", "j", "label", "n_r", "E_over_mc2", "lambda", "binding_eV"};
    for (const auto& row : spectrum_table(n_max, config)) {
        rec.rows.push_back({static_cast<long long>(row.n), static_cast<long long>(row.kappa),
                            static_cast<long long>(row.l), row.j.value(), row.label,
                            static_cast<long long>(row.n_r), row.e_over_mc2, row.lambda, row.binding_ev});
    }
    return rec;
}

struct WavefunctionArgs {
    int n = 1;
    int kappa = -1;
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 200;
    std::string which = "all";
    bool normalized = false;
};

OutputRecord wavefunction_record(const std::vector<std::string>& args, const WavefunctionArgs& w,
                                 const PhysicsConfig& config) {
    const auto sol = BoundSolution::make(w.n, w.kappa, HalfInteger{1}, config);
    const double bohr = 1.0 / config.alpha();
    const double r_min = w.r_min > 0.0 ? w.r_min : 1e-3 * bohr;
    const double r_max = w.r_max > 0.0 ? w.r_max : 50.0 * w.n * w.n * bohr;
    if (w.points < 2 || !(r_max > r_min)) {
        throw InvalidArgument("wavefunction needs 0 < r_min < r_max and at least 2 points");
    }
    const auto grid = RadialGrid::log_spaced(r_min, r_max, w.points);

    double norm = 1.0;
    auto rec = base_record(args, config);
    rec.extra_meta.emplace_back("n", static_cast<long long>(sol.state.n));
    rec.extra_meta.emplace_back("kappa", static_cast<long long>(sol.state.kappa));
    rec.extra_meta.emplace_back("label", sol.state.label());
    rec.extra_meta.emplace_back("E_over_mc2", sol.energy.value);
    if (w.normalized) {
        norm = normalize(sol).constant;
        rec.extra_meta.emplace_back("normalization", norm);
    }
    rec.extra_meta.emplace_back("normalized", w.normalized);

    const bool want_phi = w.which == "phi" || w.which == "all";
    const bool want_tilde = w.which == "phi_tilde" || w.which == "all";
    const bool want_psi = w.which == "psi" || w.which == "all";
    rec.columns = {"r_compton", "r_bohr"};
    if (want_phi) rec.columns.emplace_back("phi");
    if (want_tilde) rec.columns.emplace_back("phi_tilde");
    if (want_psi) {
        rec.columns.emplace_back("psi_a");
        rec.columns.emplace_back("psi_b");
    }
    for (double r : grid.radii()) {
        std::vector<Cell> row{r, r * config.alpha()};
        const double g = radial_phi(sol, r);
        const double gt = radial_phi_tilde(sol, r);
        if (want_phi) row.emplace_back(norm * g);
        if (want_tilde) row.emplace_back(norm * gt);
        if (want_psi) {
            const auto psi = bispinor_from_conjugate(g, gt, sol.energy);
            row.emplace_back(norm * psi.psi_a);
            row.emplace_back(norm * psi.psi_b);
        }
        rec.rows.push_back(std::move(row));
    }
    return rec;
}

OutputRecord verify_record(const std::vector<std::string>& args, int n_max, const VerifyOptions& opts,
                           const PhysicsConfig& config, bool& ok) {
    const auto rows = run_verification(n_max, config, opts);
    ok = all_pass(rows);
    auto rec = base_record(args, config);
    rec.extra_meta.emplace_back("tolerance", opts.tolerance);
    rec.extra_meta.emplace_back("fd_tolerance", opts.fd_tolerance);
    rec.extra_meta.emplace_back("all_pass", ok);
    rec.columns = {"check", "n", "kappa", "label", "method", "value", "tolerance", "pass"};
    for (const auto& r : rows) {
        rec.rows.push_back({r.check, static_cast<long long>(r.n), static_cast<long long>(r.kappa), r.label, r.method,
                            r.value, r.tolerance, r.pass});
    }
    return rec;
}

}  // namespace

void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out) {
    for (const auto& [key, value] : record.extra_meta) {
        require_finite(value);
    }
    for (const auto& row : record.rows) {
        if (row.size() != record.columns.size()) {
            throw InvalidArgument("row width does not match the column count");
        }
        std::for_each(row.begin(), row.end(), require_finite);
    }
    if (!std::isfinite(record.alpha) || !std::isfinite(record.rest_energy_ev)) {
        throw NumericalError("non-finite config in output");
    }
    // Buffer so that a failure never leaves a partial payload.
    std::ostringstream buf;
    switch (format) {
        case OutputFormat::csv:
            write_csv(record, buf);
            break;
        case OutputFormat::json:
            write_json(record, buf);
            break;
        case OutputFormat::table:
            write_table(record, buf);
            break;
    }
    out << buf.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic hydrogen spectrum, conjugate-spinor wave functions and residual verification", "conjdirac"};
    app.require_subcommand(1);

    double alpha = kAlphaCodata;
    double rest_energy = kElectronRestEnergyEv;
    OutputFormat format = OutputFormat::csv;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", alpha, "Fine-structure constant")->envname("CONJDIRAC_ALPHA");
        sub->add_option("--rest-energy", rest_energy, "Rest energy m0c^2 in eV");
        sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));
    };

    int n_max = 1;
    auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies for all states with n <= n_max");
    spectrum->add_option("--n-max", n_max, "Largest principal quantum number")->check(CLI::PositiveNumber);
    add_common(spectrum);

    WavefunctionArgs w;
    auto* wave = app.add_subcommand("wavefunction", "Tabulate radial conjugate-spinor and bi-spinor amplitudes");
    wave->add_option("--n", w.n, "Principal quantum number")->required();
    wave->add_option("--kappa", w.kappa, "Relativistic quantum number kappa")->required();
    wave->add_option("--r-min", w.r_min, "Smallest radius in reduced Compton wavelengths (default 1e-3/alpha)");
    wave->add_option("--r-max", w.r_max, "Largest radius in reduced Compton wavelengths (default 50 n^2/alpha)");
    wave->add_option("--points", w.points, "Number of log-spaced radii")->check(CLI::Range(2, 10000000));
    wave->add_option("--which", w.which, "Amplitudes to emit")
        ->check(CLI::IsMember({"phi", "phi_tilde", "psi", "all"}));
    wave->add_flag("--normalized", w.normalized, "Apply the numerical normalization constant");
    add_common(wave);

    VerifyOptions vopts;
    int verify_n_max = 3;
    auto* verify = app.add_subcommand("verify", "Certify the closed-form solutions against every radial equation");
    verify->add_option("--n-max", verify_n_max, "Largest principal quantum number")->check(CLI::PositiveNumber);
    verify->add_option("--tolerance", vopts.tolerance, "Residual tolerance with analytic derivatives")
        ->check(CLI::PositiveNumber);
    verify->add_option("--fd-tolerance", vopts.fd_tolerance, "Residual tolerance with finite differences")
        ->check(CLI::PositiveNumber);
    add_common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const PhysicsConfig config(alpha, rest_energy);
        if (spectrum->parsed()) {
            write_record(spectrum_record(args, n_max, config), format, out);
            return kExitOk;
        }
        if (wave->parsed()) {
            write_record(wavefunction_record(args, w, config), format, out);
            return kExitOk;
        }
        bool ok = false;
        write_record(verify_record(args, verify_n_max, vopts, config, ok), format, out);
        return ok ? kExitOk : kExitVerificationFailed;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace conjdirac
