#include "wmap/claims.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include <json.hpp>

#include "wmap/analysis.hpp"
#include "wmap/specfun.hpp"
#include "wmap/wmap.hpp"

namespace wmap::claims {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
const double t1 = 2.0 * pi;
const double t2 = 2.01 * pi;

using evaluator = std::function<double(const series_config&)>;

double sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// --- aggregate evaluators used by the property-style registry entries ---

double critical_line_max_dev(const series_config&) {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = -100.0 + 0.2 * i;
        worst = std::max(worst, std::abs(w_abs({0.5, t}) - 1.0));
    }
    return worst;
}

double form_agreement_max_dev(const series_config&) {
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> sig(-3.0, 3.0), tt(0.5, 60.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const strip_point s{sig(rng), tt(rng)};
        const w_value a = w_product(s);
        const w_value b = w_gamma_ratio(s);
        worst = std::max(worst, std::abs(a.value() - b.value()) / a.modulus);
    }
    return worst;
}

double reciprocity_max_dev(const series_config&) {
    std::mt19937 rng(20240602);
    std::uniform_real_distribution<double> sig(0.0, 1.0), tt(0.5, 60.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double sigma = sig(rng), t = tt(rng);
        worst = std::max(worst,
                         std::abs(w_abs({sigma, t}) * w_abs({1.0 - sigma, t}) - 1.0));
    }
    return worst;
}

double functional_equation_max_dev(const series_config&) {
    std::mt19937 rng(20240603);
    std::uniform_real_distribution<double> sig(0.05, 0.95), tt(0.5, 60.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cxdbl s{sig(rng), tt(rng)};
        const cxdbl zs = specfun::riemann_zeta(s);
        const cxdbl rhs = w_gamma_ratio({s.real(), s.imag()}).value() *
                          specfun::riemann_zeta(1.0 - s);
        worst = std::max(worst, std::abs(zs - rhs) / (1.0 + std::abs(zs)));
    }
    return worst;
}

double derivative_fd_max_dev(const series_config& cfg) {
    std::mt19937 rng(20240604);
    std::uniform_real_distribution<double> sig(0.0, 1.0), tt(1.0, 40.0);
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double sigma = sig(rng);
        const double t = tt(rng);
        // FD noise floor ~2.5e-11 t^2 / |sigma - 1/2|: keep comparable points
        if (std::abs(sigma - 0.5) < 2.5e-4 * t * t) continue;
        const double an = dw_abs_dt({sigma, t}, cfg);
        const double fd = (w_abs({sigma, t + h}) - w_abs({sigma, t - h})) / (2.0 * h);
        worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
    }
    return worst;
}

double gamma_derivative_fd_max_dev(const series_config& cfg) {
    std::mt19937 rng(20240605);
    std::uniform_real_distribution<double> sig(0.0, 1.0), tt(1.0, 30.0);
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double sigma = sig(rng), t = tt(rng);
        const double an = d_abs_gamma_half_1ms_dt({sigma, t}, cfg);
        const auto f = [&](double tv) {
            return std::exp(specfun::log_gamma(0.5 * (1.0 - cxdbl{sigma, tv})).real());
        };
        const double fd = (f(t + h) - f(t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
    }
    return worst;
}

double min_even_w_abs(const series_config&) {
    double lo = std::abs(w_even_integer(1));
    for (int n = 2; n <= 10; ++n) lo = std::min(lo, std::abs(w_even_integer(n)));
    return lo;
}

double band_margin_sigma(double sigma) {
    const auto lp = analysis::unit_modulus_crossing(sigma, 6.0, 6.5);
    return std::min(lp.t_star - t1, t2 - lp.t_star);
}

double locus_min_abs_zeta(const series_config&) {
    std::vector<analysis::locus_point> locus;
    for (int i = 0; i <= 20; ++i) {
        const double sigma = 0.05 * i;
        if (sigma == 0.5) continue;
        locus.push_back(analysis::unit_modulus_crossing(sigma, 6.0, 6.5));
    }
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& row : analysis::zeta_along_locus(locus))
        lo = std::min(lo, row.abs_zeta_s);
    return lo;
}

double reflection_dev(double eps, double t) {
    const cxdbl p = reflection_product(eps, t);
    return std::max(std::abs(p.real() - 1.0), std::abs(p.imag()));
}

std::map<std::string, evaluator> named_evaluators() {
    std::map<std::string, evaluator> ev;
    auto cfgless = [&ev](const std::string& id, std::function<double()> f) {
        ev[id] = [f = std::move(f)](const series_config&) { return f(); };
    };

    cfgless("ZETA_AT_0", [] { return specfun::riemann_zeta({0.0, 0.0}).real(); });
    cfgless("ZETA_TRIVIAL_ZERO_M2",
            [] { return std::abs(specfun::riemann_zeta({-2.0, 0.0})); });
    cfgless("W_ZERO_AT_M2", [] { return w_abs({-2.0, 0.0}); });
    cfgless("W_POLE_AT_3",
            [] { return classify({3.0, 0.0}) == w_kind::pole ? 1.0 : 0.0; });
    cfgless("W_ABS_CRITICAL_T1", [] { return w_abs({0.5, t1}); });
    cfgless("W_ABS_T1_SIGMA0", [] { return w_abs({0.0, t1}); });
    cfgless("W_ABS_T1_RECIPROCITY",
            [] { return w_abs({0.0, t1}) * w_abs({1.0, t1}); });
    cfgless("W_ABS_T2_SIGMA0", [] { return w_abs({0.0, t2}); });
    cfgless("W_ABS_T2_SIGMA1", [] { return w_abs({1.0, t2}); });
    cfgless("W_EVEN_N1", [] { return w_gamma_ratio({2.0, 0.0}).u; });
    ev["W_EVEN_MIN_ABS_N1_10"] = min_even_w_abs;
    cfgless("G_HALF_2_01PI", [] { return g_function({0.5, t2}); });
    cfgless("G_0_2PI", [] { return g_function({0.0, t1}); });
    cfgless("G_HALF_2PI", [] { return g_function({0.5, t1}); });

    auto taylor_entry = [&](const std::string& id, double t, bool even, int idx) {
        cfgless(id, [t, even, idx] {
            const auto e = analysis::taylor_coeffs(t, 3);
            return even ? e.even_coeffs[static_cast<std::size_t>(idx)].second
                        : e.coeffs[static_cast<std::size_t>(idx)].second;
        });
    };
    taylor_entry("C1_2_01PI", t2, false, 0);
    taylor_entry("C3_2_01PI", t2, false, 1);
    taylor_entry("C5_2_01PI", t2, false, 2);
    taylor_entry("GP1_2PI", t1, false, 0);
    taylor_entry("GP3_2PI", t1, false, 1);
    taylor_entry("GP5_2PI", t1, false, 2);
    taylor_entry("G0_2PI", t1, true, 0);
    taylor_entry("G2_2PI", t1, true, 1);
    taylor_entry("G4_2PI", t1, true, 2);

    cfgless("TAIL_2_01PI", [] { return analysis::tail_sum(t2, 4, 20); });
    cfgless("TAIL_2PI", [] { return analysis::tail_sum(t1, 4, 20); });
    cfgless("TAIL_DOMINANCE_2_01PI", [] {
        const auto e = analysis::taylor_coeffs(t2, 3);
        return std::abs(e.coeffs[2].second) - analysis::tail_sum(t2, 4, 20);
    });
    cfgless("TAIL_DOMINANCE_2PI", [] {
        const auto e = analysis::taylor_coeffs(t1, 3);
        return std::abs(e.coeffs[2].second) - analysis::tail_sum(t1, 4, 20);
    });
    cfgless("DELTA_PLUS_2PI", [] { return analysis::g_quartic_roots(t1).second; });
    cfgless("D2G_HALF_2_01PI", [] { return analysis::d2g_dsigma2({0.5, t2}); });
    cfgless("D2G_MATCHES_C1", [] {
        const auto e = analysis::taylor_coeffs(t2, 3);
        return analysis::d2g_dsigma2({0.5, t2}) / e.coeffs[0].second;
    });

    ev["DWDT_SIGMA03_T5_POS"] = [](const series_config& cfg) {
        return dw_abs_dt({0.3, 5.0}, cfg);
    };
    ev["DWDT_CRITICAL_ZERO"] = [](const series_config& cfg) {
        return dw_abs_dt({0.5, 3.7}, cfg);
    };
    cfgless("DWDSIGMA_T0_POS", [] { return dw_abs_dsigma({0.3, 0.0}); });
    cfgless("DWDSIGMA_T2_NEG", [] { return dw_abs_dsigma({0.3, t2}); });
    ev["DGAMMA_1MS_NEG_T3"] = [](const series_config& cfg) {
        return d_abs_gamma_half_1ms_dt({0.5, 3.0}, cfg);
    };
    ev["DGAMMA_S_NEG_T3"] = [](const series_config& cfg) {
        return d_abs_gamma_half_s_dt({0.5, 3.0}, cfg);
    };
    cfgless("REFLECTION_EPS02_T3", [] { return reflection_dev(0.2, 3.0); });
    ev["CRITICAL_LINE_MAX_DEV"] = critical_line_max_dev;
    ev["FORM_AGREEMENT_MAX_DEV"] = form_agreement_max_dev;
    ev["RECIPROCITY_MAX_DEV"] = reciprocity_max_dev;
    ev["FE_RESIDUAL_MAX_DEV"] = functional_equation_max_dev;
    ev["DWDT_FD_MAX_DEV"] = derivative_fd_max_dev;
    ev["DGAMMA_FD_MAX_DEV"] = gamma_derivative_fd_max_dev;
    cfgless("BAND_MARGIN_SIGMA0", [] { return band_margin_sigma(0.0); });
    cfgless("BAND_MARGIN_SIGMA025", [] { return band_margin_sigma(0.25); });
    cfgless("BAND_MARGIN_SIGMA1", [] { return band_margin_sigma(1.0); });
    ev["LOCUS_MIN_ABS_ZETA"] = locus_min_abs_zeta;
    cfgless("ZETA_ZERO_1_W_ABS",
            [] { return w_abs({0.5, analysis::find_zeta_zero(14.0, 14.2)}); });
    cfgless("ZETA_ZERO_1_ABS_ZETA", [] {
        return std::abs(specfun::riemann_zeta({0.5, analysis::find_zeta_zero(14.0, 14.2)}));
    });
    return ev;
}

// Parametric ids: "<OP>@<arg1>,<arg2>,...", e.g. "W_ABS@0.5,5".
std::optional<double> evaluate_parametric(const std::string& id,
                                          const series_config& cfg) {
    const auto at = id.find('@');
    if (at == std::string::npos) return std::nullopt;
    const std::string op = id.substr(0, at);
    std::vector<double> args;
    std::size_t pos = at + 1;
    while (pos <= id.size()) {
        std::size_t comma = id.find(',', pos);
        if (comma == std::string::npos) comma = id.size();
        double v = 0.0;
        const char* first = id.data() + pos;
        const char* last = id.data() + comma;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last)
            throw std::invalid_argument("claim id has malformed argument list: " + id);
        args.push_back(v);
        pos = comma + 1;
    }
    const auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("claim id has wrong arity: " + id);
    };
    if (op == "W_ABS") { need(2); return w_abs({args[0], args[1]}); }
    if (op == "W_RE") { need(2); return w_gamma_ratio({args[0], args[1]}).u; }
    if (op == "W_IM") { need(2); return w_gamma_ratio({args[0], args[1]}).v; }
    if (op == "ZETA_ABS") { need(2); return std::abs(specfun::riemann_zeta({args[0], args[1]})); }
    if (op == "ZETA_RE") { need(2); return specfun::riemann_zeta({args[0], args[1]}).real(); }
    if (op == "ZETA_IM") { need(2); return specfun::riemann_zeta({args[0], args[1]}).imag(); }
    if (op == "G") { need(2); return g_function({args[0], args[1]}); }
    if (op == "DG") { need(2); return analysis::dg_dsigma({args[0], args[1]}); }
    if (op == "D2G") { need(2); return analysis::d2g_dsigma2({args[0], args[1]}); }
    if (op == "DWDT") { need(2); return dw_abs_dt({args[0], args[1]}, cfg); }
    if (op == "DWDSIGMA") { need(2); return dw_abs_dsigma({args[0], args[1]}); }
    if (op == "C_COEFF") {
        need(2);
        const int k = static_cast<int>(args[1]);
        return analysis::taylor_coeffs(args[0], std::max(3, k)).coeffs[static_cast<std::size_t>(k - 1)].second;
    }
    if (op == "G_COEFF") {
        need(2);
        const int k = static_cast<int>(args[1]);
        return analysis::taylor_coeffs(args[0], std::max(3, k)).even_coeffs[static_cast<std::size_t>(k)].second;
    }
    if (op == "TAIL") { need(3); return analysis::tail_sum(args[0], static_cast<int>(args[1]), static_cast<int>(args[2])); }
    if (op == "DELTA_PLUS") { need(1); return analysis::g_quartic_roots(args[0]).second; }
    if (op == "W_EVEN") { need(1); return w_even_integer(static_cast<int>(args[0])); }
    if (op == "REFLECTION_DEV") { need(2); return reflection_dev(args[0], args[1]); }
    throw std::invalid_argument("unknown parametric claim op: " + op);
}

claim_record make(std::string id, std::string loc, std::string quote, double expected,
                  double tol, tolerance_kind kind, bool candidate = false) {
    claim_record r;
    r.id = std::move(id);
    r.paper_loc = std::move(loc);
    r.quote = std::move(quote);
    r.expected = expected;
    r.tolerance = tol;
    r.kind = kind;
    r.inconsistent_candidate = candidate;
    return r;
}

void validate_record(const claim_record& r) {
    if (r.id.empty()) throw std::invalid_argument("claim with empty id");
    if (!(r.tolerance > 0.0))
        throw std::invalid_argument("claim " + r.id + ": tolerance must be > 0");
    if (r.kind == tolerance_kind::relative && r.expected == 0.0)
        throw std::invalid_argument("claim " + r.id + ": relative tolerance needs expected != 0");
    if (r.kind == tolerance_kind::sign && r.expected != 1.0 && r.expected != -1.0)
        throw std::invalid_argument("claim " + r.id + ": sign claims need expected = +/-1");
}

std::string format_double(double v, const char* fmt = "%.17g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::vector<claim_record> builtin_registry() {
    using tk = tolerance_kind;
    std::vector<claim_record> reg;
    reg.push_back(make("ZETA_AT_0", "Lemma 1", "zeta(0) = -1/2", -0.5, 1e-10, tk::absolute));
    reg.push_back(make("ZETA_TRIVIAL_ZERO_M2", "Sec. I", "zeta(-2n) = 0", 0.0, 1e-12, tk::absolute));
    reg.push_back(make("W_ZERO_AT_M2", "Sec. 2.2.2", "W(-2n) = 0", 0.0, 1e-15, tk::absolute));
    reg.push_back(make("W_POLE_AT_3", "Sec. 2.2.2", "W(2n+1) = infinity", 1.0, 0.5, tk::absolute));
    reg.push_back(make("W_ABS_CRITICAL_T1", "Sec. 2.2.5 item 5", "|W(1/2 + i t_1)| = 1",
                       1.0, 1e-12, tk::absolute));
    reg.push_back(make("W_ABS_T1_SIGMA0", "Sec. 2.2.5 item 5", "|W(0 + i t_1)| = 0.9999999991",
                       0.9999999991, 1e-9, tk::absolute, true));
    reg.push_back(make("W_ABS_T1_RECIPROCITY", "Sec. 2.2.5 item 5",
                       "|W(1 + i t_1)| = 1 / |W(0 + i t_1)|", 1.0, 1e-9, tk::absolute));
    reg.push_back(make("W_ABS_T2_SIGMA0", "Sec. 2.2.5 item 4", "|W(0 + i t_2)| = 1.0025",
                       1.0025, 5e-4, tk::absolute));
    reg.push_back(make("W_ABS_T2_SIGMA1", "Sec. 2.2.5 item 4", "|W(1 + i t_2)| = 1/1.0025",
                       1.0 / 1.0025, 5e-4, tk::absolute));
    reg.push_back(make("W_EVEN_N1", "Sec. 2.2.3", "W(2n) = (2 pi)^(2n) / (2 (-1)^n (2n-1)!)",
                       -19.739208802178716, 1e-10, tk::relative));
    reg.push_back(make("W_EVEN_MIN_ABS_N1_10", "Sec. 2.2.3", "W(2n) != 0", 1.0, 1.0, tk::sign));
    reg.push_back(make("G_HALF_2_01PI", "Appendix B", "G(1/2, 2.01 pi) = -0.015751728",
                       -0.015751728, 1e-8, tk::absolute));
    reg.push_back(make("G_0_2PI", "Appendix C", "G(0, 2 pi) = -0.008465084",
                       -0.008465084, 1e-8, tk::absolute));
    reg.push_back(make("G_HALF_2PI", "Appendix C", "G(1/2, 2 pi) = 0.004240720",
                       0.004240720, 1e-8, tk::absolute));
    reg.push_back(make("C1_2_01PI", "Appendix B", "c_1 = -1.0095424e-1",
                       -1.0095424e-1, 1e-4, tk::relative));
    reg.push_back(make("C3_2_01PI", "Appendix B", "c_3 = +2.5705715e-3",
                       2.5705715e-3, 1e-4, tk::relative));
    reg.push_back(make("C5_2_01PI", "Appendix B", "c_5 = -6.6264219e-5",
                       -6.6264219e-5, 1e-4, tk::relative));
    reg.push_back(make("GP1_2PI", "Appendix C", "g'_1 = -1.0197290e-1",
                       -1.0197290e-1, 1e-4, tk::relative));
    reg.push_back(make("GP3_2PI", "Appendix C", "g'_3 = +2.6229847e-3",
                       2.6229847e-3, 1e-4, tk::relative));
    reg.push_back(make("GP5_2PI", "Appendix C", "g'_5 = -6.8327078e-5",
                       -6.8327078e-5, 1e-4, tk::relative));
    reg.push_back(make("G0_2PI", "Appendix C", "g_0 = -4.5746788", -4.5746788, 1e-4, tk::relative));
    reg.push_back(make("G2_2PI", "Appendix C", "g_2 = -5.0986449e-2",
                       -5.0986449e-2, 1e-4, tk::relative));
    reg.push_back(make("G4_2PI", "Appendix C", "g_4 = 6.5574618e-4",
                       6.5574618e-4, 1e-4, tk::relative));
    reg.push_back(make("TAIL_2_01PI", "Appendix B", "sum_{k>=4} |c_{2k-1}| -> 1.824122120e-6",
                       1.824122120e-6, 1e-9, tk::absolute));
    reg.push_back(make("TAIL_2PI", "Appendix C", "sum_{k>=4} |g'_{2k-1}| -> 1.904573728e-6",
                       1.904573728e-6, 1e-9, tk::absolute));
    reg.push_back(make("TAIL_DOMINANCE_2_01PI", "Appendix B", "|c_5| > sum_{k=4}^N |c_{2k-1}|",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("TAIL_DOMINANCE_2PI", "Appendix C", "|g'_5| > sum_{k=4}^N |g'_{2k-1}|",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("DELTA_PLUS_2PI", "Appendix C", "delta_{+-} = +-0.2885526325",
                       0.2885526325, 1e-6, tk::absolute));
    reg.push_back(make("D2G_HALF_2_01PI", "Appendix B",
                       "d2G/dsigma2(1/2, 2.01 pi) = -1.009542407 (conflicts with c_1 = -1.0095424e-1)",
                       -1.009542407, 1e-4, tk::relative, true));
    reg.push_back(make("D2G_MATCHES_C1", "Appendix B", "d2G/dsigma2|_{delta=0} = c_1",
                       1.0, 1e-8, tk::relative));
    reg.push_back(make("DWDT_SIGMA03_T5_POS", "Sec. 2.2.4", "sigma < 1/2, t > 0: d|W|/dt > 0",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("DWDT_CRITICAL_ZERO", "Sec. 2.2.4", "sigma = 1/2: d|W|/dt = 0",
                       0.0, 1e-15, tk::absolute));
    reg.push_back(make("DWDSIGMA_T0_POS", "Appendix A", "d|W|/dsigma > 0 at t = 0",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("DWDSIGMA_T2_NEG", "Sec. 2.2.5 item 4", "d|W|/dsigma < 0 at t = t_2",
                       -1.0, 1.0, tk::sign));
    reg.push_back(make("DGAMMA_1MS_NEG_T3", "Lemma 5 / Appendix E",
                       "d|Gamma((1-s)/2)|/dt < 0 for t > 0", -1.0, 1.0, tk::sign));
    reg.push_back(make("DGAMMA_S_NEG_T3", "Lemma 5 / Appendix E",
                       "d|Gamma(s/2)|/dt < 0 for t > 0", -1.0, 1.0, tk::sign));
    reg.push_back(make("REFLECTION_EPS02_T3", "Sec. 2.2.1", "W(s_+) W(s*_-) = 1",
                       0.0, 1e-10, tk::absolute));
    reg.push_back(make("CRITICAL_LINE_MAX_DEV", "Corollary 1", "|W(1/2 + it)| = 1",
                       0.0, 1e-12, tk::absolute));
    reg.push_back(make("FORM_AGREEMENT_MAX_DEV", "Sec. 2.2.1",
                       "2^s pi^(s-1) sin(pi s/2) Gamma(1-s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2)",
                       0.0, 1e-9, tk::absolute));
    reg.push_back(make("RECIPROCITY_MAX_DEV", "Sec. 2.2.5 item 2", "|W(s_+)| |W(s_-)| = 1",
                       0.0, 1e-9, tk::absolute));
    reg.push_back(make("FE_RESIDUAL_MAX_DEV", "Sec. 2", "zeta(s) = W(s) zeta(1-s)",
                       0.0, 1e-8, tk::absolute));
    reg.push_back(make("DWDT_FD_MAX_DEV", "Sec. 2.2.4", "d|W|/dt series vs finite differences",
                       0.0, 1e-6, tk::absolute));
    reg.push_back(make("DGAMMA_FD_MAX_DEV", "Appendix E",
                       "d|Gamma((1-s)/2)|/dt series vs finite differences", 0.0, 1e-6, tk::absolute));
    reg.push_back(make("BAND_MARGIN_SIGMA0", "Sec. 2.2.5", "2 pi < t* < 2.01 pi at sigma = 0",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("BAND_MARGIN_SIGMA025", "Lemma 5", "2 pi < t* < 2.01 pi at sigma = 0.25",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("BAND_MARGIN_SIGMA1", "Sec. 2.2.5", "2 pi < t* < 2.01 pi at sigma = 1",
                       1.0, 1.0, tk::sign));
    reg.push_back(make("LOCUS_MIN_ABS_ZETA", "Lemma 5 item 3",
                       "|zeta(s)| > 0 along the |W| = 1 locus", 1.0, 1.0, tk::sign));
    reg.push_back(make("ZETA_ZERO_1_W_ABS", "Corollary 1", "|W(1/2 + i t_zero)| = 1",
                       1.0, 1e-12, tk::absolute));
    reg.push_back(make("ZETA_ZERO_1_ABS_ZETA", "Corollary 1", "zeta(1/2 + i t_zero) = 0",
                       0.0, 1e-8, tk::absolute));
    return reg;
}

claim_report run_claims(const std::vector<claim_record>& registry,
                        const series_config& cfg) {
    if (registry.empty()) throw std::invalid_argument("run_claims: empty registry");
    cfg.validate();
    for (const auto& r : registry) validate_record(r);

    const auto named = named_evaluators();
    claim_report report;
    report.claims = registry;
    std::sort(report.claims.begin(), report.claims.end(),
              [](const claim_record& a, const claim_record& b) { return a.id < b.id; });

    for (auto& rec : report.claims) {
        try {
            double value = 0.0;
            if (const auto it = named.find(rec.id); it != named.end()) {
                value = it->second(cfg);
            } else if (const auto v = evaluate_parametric(rec.id, cfg)) {
                value = *v;
            } else {
                throw std::invalid_argument("no evaluator for claim id: " + rec.id);
            }
            rec.computed = value;
            bool ok = false;
            switch (rec.kind) {
                case tolerance_kind::absolute:
                    ok = std::abs(value - rec.expected) <= rec.tolerance;
                    break;
                case tolerance_kind::relative:
                    ok = std::abs(value - rec.expected) <= rec.tolerance * std::abs(rec.expected);
                    break;
                case tolerance_kind::sign:
                    ok = sign_of(value) == rec.expected;
                    break;
            }
            if (ok) {
                rec.status = claim_status::pass;
            } else if (rec.inconsistent_candidate) {
                rec.status = claim_status::paper_inconsistent;
                rec.message = "recomputation " + format_double(value) +
                              " contradicts the printed value " + format_double(rec.expected);
            } else {
                rec.status = claim_status::fail;
                rec.message = "computed " + format_double(value) + ", expected " +
                              format_double(rec.expected) + " (" + to_string(rec.kind) +
                              " tolerance " + format_double(rec.tolerance, "%.3g") + ")";
            }
        } catch (const std::exception& e) {
            rec.computed.reset();
            rec.status = claim_status::fail;
            rec.message = std::string("evaluation error: ") + e.what();
        }
        switch (rec.status) {
            case claim_status::pass: ++report.n_pass; break;
            case claim_status::fail: ++report.n_fail; break;
            case claim_status::paper_inconsistent: ++report.n_inconsistent; break;
            case claim_status::pending: break;
        }
    }
    return report;
}

const char* to_string(claim_status s) {
    switch (s) {
        case claim_status::pending: return "pending";
        case claim_status::pass: return "pass";
        case claim_status::fail: return "fail";
        case claim_status::paper_inconsistent: return "paper_inconsistent";
    }
    return "?";
}

const char* to_string(tolerance_kind k) {
    switch (k) {
        case tolerance_kind::absolute: return "absolute";
        case tolerance_kind::relative: return "relative";
        case tolerance_kind::sign: return "sign";
    }
    return "?";
}

namespace {

tolerance_kind kind_from_string(const std::string& s) {
    if (s == "absolute") return tolerance_kind::absolute;
    if (s == "relative") return tolerance_kind::relative;
    if (s == "sign") return tolerance_kind::sign;
    throw std::invalid_argument("unknown tolerance_kind: " + s);
}

}  // namespace

std::vector<claim_record> registry_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_array()) throw std::runtime_error("registry JSON must be an array");
    std::vector<claim_record> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        claim_record r;
        r.id = item.at("id").get<std::string>();
        r.paper_loc = item.value("paper_loc", std::string{});
        r.quote = item.value("quote", std::string{});
        r.expected = item.at("expected").get<double>();
        r.tolerance = item.at("tolerance").get<double>();
        r.kind = kind_from_string(item.value("tolerance_kind", std::string{"absolute"}));
        r.inconsistent_candidate = item.value("inconsistent_candidate", false);
        validate_record(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string registry_to_json(const std::vector<claim_record>& registry) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : registry) {
        nlohmann::ordered_json item;
        item["id"] = r.id;
        item["paper_loc"] = r.paper_loc;
        item["quote"] = r.quote;
        item["expected"] = r.expected;
        item["tolerance"] = r.tolerance;
        item["tolerance_kind"] = to_string(r.kind);
        if (r.inconsistent_candidate) item["inconsistent_candidate"] = true;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::string report_to_json(const claim_report& report) {
    nlohmann::ordered_json j;
    j["summary"] = {{"pass", report.n_pass},
                    {"fail", report.n_fail},
                    {"inconsistent", report.n_inconsistent}};
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const auto& r : report.claims) {
        nlohmann::ordered_json item;
        item["id"] = r.id;
        item["paper_loc"] = r.paper_loc;
        item["quote"] = r.quote;
        item["expected"] = r.expected;
        item["tolerance"] = r.tolerance;
        item["tolerance_kind"] = to_string(r.kind);
        item["inconsistent_candidate"] = r.inconsistent_candidate;
        if (r.computed)
            item["computed"] = *r.computed;
        else
            item["computed"] = nullptr;
        if (r.computed)
            item["delta"] = *r.computed - r.expected;
        else
            item["delta"] = nullptr;
        item["status"] = to_string(r.status);
        item["message"] = r.message;
        claims.push_back(std::move(item));
    }
    j["claims"] = std::move(claims);
    return j.dump(2) + "\n";
}

std::string report_to_text(const claim_report& report) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-18s %22s %22s %12s\n", "id", "status",
                  "expected", "computed", "delta");
    out += line;
    out += std::string(106, '-') + "\n";
    for (const auto& r : report.claims) {
        const std::string computed =
            r.computed ? format_double(*r.computed, "%.15g") : std::string("n/a");
        const std::string delta =
            r.computed ? format_double(*r.computed - r.expected, "%.3g") : std::string("n/a");
        std::snprintf(line, sizeof line, "%-28s %-18s %22.15g %22s %12s\n", r.id.c_str(),
                      to_string(r.status), r.expected, computed.c_str(), delta.c_str());
        out += line;
        if (!r.message.empty()) out += "    note: " + r.message + "\n";
    }
    std::snprintf(line, sizeof line, "%d pass / %d fail / %d paper-inconsistent\n",
                  report.n_pass, report.n_fail, report.n_inconsistent);
    out += std::string(106, '-') + "\n";
    out += line;
    return out;
}

}  // namespace wmap::claims
