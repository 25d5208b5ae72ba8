// wmap: point evaluation, claim verification, locus scans and figure-data
// emission for the W-map of the zeta functional equation.
//
// Exit codes: 0 ok, 1 usage/IO error, 2 pole or domain error, 3 claim failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmap/analysis.hpp"
#include "wmap/claims.hpp"
#include "wmap/series.hpp"
#include "wmap/specfun.hpp"
#include "wmap/wmap.hpp"

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

struct output_spec {
    bool json = false;
    std::string path = "-";  // "-" = stdout
    int precision = 15;
};

std::string fmt(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

int write_output(const output_spec& out, const std::string& text) {
    if (out.path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out.path << "\n";
        return 1;
    }
    f << text;
    if (!f) {
        std::cerr << "error: write failed: " << out.path << "\n";
        return 1;
    }
    return 0;
}

std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows, int precision) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += fmt(row[i], precision);
        }
        out += '\n';
    }
    return out;
}

std::string json_table(const std::string& which, const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows) {
    nlohmann::ordered_json j;
    j["which"] = which;
    j["columns"] = columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

const char* kind_name(wmap::w_kind k) {
    switch (k) {
        case wmap::w_kind::regular: return "regular";
        case wmap::w_kind::zero: return "zero";
        case wmap::w_kind::pole: return "pole";
    }
    return "?";
}

std::string complex_text(double re, double im, int precision) {
    const std::string op = std::signbit(im) ? " - " : " + ";
    return fmt(re, precision) + op + fmt(std::abs(im), precision) + "i";
}

int cmd_eval(double sigma, double t, const std::string& what, const output_spec& out,
             const wmap::series_config& cfg) {
    using namespace wmap;
    nlohmann::ordered_json j;
    j["what"] = what;
    j["sigma"] = sigma;
    j["t"] = t;
    std::string text;
    const strip_point s{sigma, t};

    if (what == "W") {
        const w_value w = w_gamma_ratio(s);
        if (w.kind == w_kind::pole)
            throw pole_error("pole of W at s = " + fmt(sigma, 17) + " + " + fmt(t, 17) +
                             "i (lattice s = 2n+1)");
        j["u"] = w.u;
        j["v"] = w.v;
        j["modulus"] = w.modulus;
        j["kind"] = kind_name(w.kind);
        text = complex_text(w.u, w.v, out.precision) + "\n";
    } else if (what == "absW") {
        const double v = w_abs(s);
        if (classify(s) == w_kind::pole)
            throw pole_error("pole of W at s = " + fmt(sigma, 17) + " + " + fmt(t, 17) +
                             "i (lattice s = 2n+1)");
        j["value"] = v;
        text = fmt(v, out.precision) + "\n";
    } else if (what == "zeta") {
        const cxdbl z = specfun::riemann_zeta({sigma, t});
        j["re"] = z.real();
        j["im"] = z.imag();
        text = complex_text(z.real(), z.imag(), out.precision) + "\n";
    } else if (what == "G") {
        const double v = g_function(s);
        j["value"] = v;
        text = fmt(v, out.precision) + "\n";
    } else if (what == "dWdt") {
        const double v = dw_abs_dt(s, cfg);
        j["value"] = v;
        text = fmt(v, out.precision) + "\n";
    } else {  // dWdsigma
        const double v = dw_abs_dsigma(s);
        j["value"] = v;
        text = fmt(v, out.precision) + "\n";
    }
    return write_output(out, out.json ? j.dump(2) + "\n" : text);
}

int cmd_verify(const std::string& registry_path, const std::string& export_path,
               const output_spec& out, const wmap::series_config& cfg) {
    if (!export_path.empty()) {
        output_spec reg_out = out;
        reg_out.path = export_path;
        return write_output(reg_out,
                            wmap::claims::registry_to_json(wmap::claims::builtin_registry()));
    }
    std::vector<wmap::claims::claim_record> registry;
    if (registry_path.empty()) {
        registry = wmap::claims::builtin_registry();
    } else {
        std::ifstream f(registry_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot read registry: " << registry_path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        try {
            registry = wmap::claims::registry_from_json(buf.str());
        } catch (const std::exception& e) {
            std::cerr << "error: bad registry: " << e.what() << "\n";
            return 1;
        }
    }
    const auto report = wmap::claims::run_claims(registry, cfg);
    const std::string text = out.json ? wmap::claims::report_to_json(report)
                                      : wmap::claims::report_to_text(report);
    const int rc = write_output(out, text);
    if (rc != 0) return rc;
    if (out.path != "-") {
        std::cout << report.n_pass << " pass / " << report.n_fail << " fail / "
                  << report.n_inconsistent << " paper-inconsistent\n";
    }
    return report.n_fail > 0 ? 3 : 0;
}

int cmd_figure(const std::string& which, const output_spec& out) {
    using namespace wmap;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    if (which == "fig2") {
        columns = {"sigma", "absW_at_2pi", "absW_at_2.01pi"};
        for (int i = 0; i <= 200; ++i) {
            const double sigma = 0.005 * i;
            rows.push_back({sigma, w_abs({sigma, 2.0 * pi}), w_abs({sigma, 2.01 * pi})});
        }
    } else if (which == "fig3") {
        // 8000 samples with t = 0 on the grid: step 0.025 from -100 up.
        columns = {"t", "u", "v"};
        for (const auto& r : analysis::critical_line_map(-100.0, 100.0 - 0.025, 8000))
            rows.push_back({r[0], r[1], r[2]});
    } else {  // fig4
        columns = {"sigma", "t_star", "abs_zeta_s", "abs_zeta_1ms"};
        std::vector<analysis::locus_point> locus;
        for (int i = 0; i <= 20; ++i) {
            const double sigma = 0.05 * i;
            if (sigma == 0.5) continue;
            locus.push_back(analysis::unit_modulus_crossing(sigma, 6.0, 6.5));
        }
        const auto zrows = analysis::zeta_along_locus(locus);
        for (std::size_t i = 0; i < locus.size(); ++i)
            rows.push_back({zrows[i].sigma, locus[i].t_star, zrows[i].abs_zeta_s,
                            zrows[i].abs_zeta_1ms});
    }
    return write_output(out, out.json ? json_table(which, columns, rows)
                                      : csv_table(columns, rows, out.precision));
}

int cmd_scan(double t_max, double sigma_step, const output_spec& out) {
    using namespace wmap;
    if (!(sigma_step > 0.0 && sigma_step <= 1.0)) {
        std::cerr << "error: --sigma-step must be in (0, 1]\n";
        return 1;
    }
    std::vector<double> grid;
    for (long i = 0;; ++i) {
        double sigma = static_cast<double>(i) * sigma_step;
        if (sigma > 1.0 + 1e-9) break;
        sigma = std::min(sigma, 1.0);
        if (std::abs(sigma - 0.5) < 1e-12) sigma = 0.5;  // snap to the degenerate line
        grid.push_back(sigma);
    }
    const auto report = analysis::boundedness_scan(grid, t_max);

    if (out.json) {
        nlohmann::ordered_json j;
        j["t_max"] = report.t_max;
        j["sigma_step"] = sigma_step;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : report.entries) {
            nlohmann::ordered_json item;
            item["sigma"] = e.sigma;
            nlohmann::ordered_json crossings = nlohmann::ordered_json::array();
            for (const auto& c : e.crossings) {
                crossings.push_back({{"t_star", c.t_star},
                                     {"bracket_lo", c.bracket_lo},
                                     {"bracket_hi", c.bracket_hi},
                                     {"residual", c.residual},
                                     {"in_band", c.t_star > 2.0 * pi && c.t_star < 2.01 * pi}});
            }
            item["crossings"] = std::move(crossings);
            entries.push_back(std::move(item));
        }
        j["entries"] = std::move(entries);
        nlohmann::ordered_json violations = nlohmann::ordered_json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"sigma", v.sigma}, {"kind", v.kind}, {"detail", v.detail}});
        j["violations"] = std::move(violations);
        j["notes"] = report.notes;
        return write_output(out, j.dump(2) + "\n");
    }

    std::string text;
    text += "boundedness scan: t in (0, " + fmt(t_max, 6) + "], band (2 pi, 2.01 pi)\n";
    for (const auto& e : report.entries) {
        text += "sigma = " + fmt(e.sigma, 6) + ": ";
        if (e.crossings.empty()) {
            text += "no |W| = 1 crossing found\n";
            continue;
        }
        for (const auto& c : e.crossings)
            text += "t* = " + fmt(c.t_star, out.precision) +
                    " (residual " + fmt(c.residual, 3) + ") ";
        text += "\n";
    }
    for (const auto& n : report.notes) text += "note: " + n + "\n";
    for (const auto& v : report.violations)
        text += "finding: sigma = " + fmt(v.sigma, 6) + " [" + v.kind + "] " + v.detail + "\n";
    text += report.violations.empty() ? "all crossings inside the band\n"
                                      : std::to_string(report.violations.size()) + " finding(s)\n";
    return write_output(out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"W-map numerics and claim verification for the zeta functional equation"};
    app.require_subcommand(1);

    wmap::series_config cfg;
    output_spec out;
    app.add_option("--rel-tol", cfg.rel_tol, "series relative tolerance")
        ->check(CLI::Range(1e-300, 1e-9));
    app.add_option("--max-terms", cfg.max_terms, "series term cap")
        ->check(CLI::Range(1000L, 2'000'000'000L));
    app.add_option("--precision", out.precision, "printed significant digits")
        ->check(CLI::Range(6, 17));
    app.add_flag("--json", out.json, "emit JSON instead of text/CSV");

    double sigma = 0.0, t = 0.0;
    std::string what;
    auto* eval = app.add_subcommand("eval", "evaluate a quantity at s = sigma + i t");
    eval->add_option("--sigma", sigma, "Re(s)")->required();
    eval->add_option("--t", t, "Im(s)")->required();
    eval->add_option("--what", what, "one of W, absW, zeta, G, dWdt, dWdsigma")
        ->required()
        ->check(CLI::IsMember({"W", "absW", "zeta", "G", "dWdt", "dWdsigma"}));
    eval->add_option("--out", out.path, "output path ('-' = stdout)");

    std::string registry_path, export_path;
    auto* verify = app.add_subcommand("verify", "recompute and audit the claim registry");
    verify->add_option("--registry", registry_path, "claim registry JSON (default: builtin)");
    verify->add_option("--export-registry", export_path,
                       "write the builtin registry as JSON and exit");
    verify->add_option("--out", out.path, "output path ('-' = stdout)");

    std::string which;
    auto* figure = app.add_subcommand("figure", "emit figure data");
    figure->add_option("--which", which, "fig2, fig3 or fig4")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
    figure->add_option("--out", out.path, "output path ('-' = stdout)");

    double t_max = 50.0, sigma_step = 0.05;
    auto* scan = app.add_subcommand("scan", "locus boundedness scan over the strip");
    scan->add_option("--t-max", t_max, "scan ceiling for t (default 50)")
        ->check(CLI::Range(0.03, 1e6));
    scan->add_option("--sigma-step", sigma_step, "sigma grid step (default 0.05)");
    scan->add_option("--out", out.path, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        cfg.validate();
        if (eval->parsed()) return cmd_eval(sigma, t, what, out, cfg);
        if (verify->parsed()) return cmd_verify(registry_path, export_path, out, cfg);
        if (figure->parsed()) return cmd_figure(which, out);
        return cmd_scan(t_max, sigma_step, out);
    } catch (const wmap::pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wmap::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
