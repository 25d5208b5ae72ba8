#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmap/analysis.hpp"
#include "wmap/claims.hpp"
#include "wmap/series.hpp"
#include "wmap/specfun.hpp"
#include "wmap/wmap.hpp"

namespace py = pybind11;

using namespace wmap;

namespace {

strip_point sp(double sigma, double t) { return {sigma, t}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "W-map numerics for the zeta functional equation";

    py::register_exception<pole_error>(m, "PoleError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<truncation_error>(m, "TruncationError");
    py::register_exception<no_bracket_error>(m, "NoBracketError");
    py::register_exception<no_root_error>(m, "NoRootError");
    py::register_exception<degenerate_error>(m, "DegenerateError");

    py::class_<series_config>(m, "SeriesConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &series_config::rel_tol)
        .def_readwrite("max_terms", &series_config::max_terms)
        .def_readwrite("euler_gamma", &series_config::euler_gamma);
    m.attr("EULER_GAMMA") = euler_gamma;

    // special functions
    m.def("gamma", &specfun::complex_gamma, py::arg("z"));
    m.def("log_gamma", &specfun::log_gamma, py::arg("z"));
    m.def("digamma", &specfun::digamma, py::arg("z"));
    m.def("polygamma", &specfun::polygamma, py::arg("n"), py::arg("z"));
    m.def("hurwitz_zeta", &specfun::hurwitz_zeta, py::arg("s"), py::arg("a"));
    m.def("zeta", &specfun::riemann_zeta, py::arg("s"));
    m.def("zeta_alternating", &specfun::zeta_alternating, py::arg("s"));
    m.def("zeta_functional", &specfun::zeta_functional, py::arg("s"));

    // the W map
    py::enum_<w_kind>(m, "WKind")
        .value("regular", w_kind::regular)
        .value("zero", w_kind::zero)
        .value("pole", w_kind::pole);
    py::class_<w_value>(m, "WValue")
        .def_readonly("u", &w_value::u)
        .def_readonly("v", &w_value::v)
        .def_readonly("modulus", &w_value::modulus)
        .def_readonly("kind", &w_value::kind)
        .def("__complex__", [](const w_value& w) { return w.value(); })
        .def("__repr__", [](const w_value& w) {
            return "WValue(u=" + std::to_string(w.u) + ", v=" + std::to_string(w.v) + ")";
        });

    m.def("classify", [](double sigma, double t) { return classify(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("w_product", [](double sigma, double t) { return w_product(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("w_gamma_ratio", [](double sigma, double t) { return w_gamma_ratio(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("w_abs", [](double sigma, double t) { return w_abs(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("dw_abs_dt",
          [](double sigma, double t, const series_config& cfg) {
              return dw_abs_dt(sp(sigma, t), cfg);
          },
          py::arg("sigma"), py::arg("t"), py::arg("config") = series_config{});
    m.def("g_function", [](double sigma, double t) { return g_function(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("dw_abs_dsigma", [](double sigma, double t) { return dw_abs_dsigma(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("d_abs_gamma_half_s_dt",
          [](double sigma, double t, const series_config& cfg) {
              return d_abs_gamma_half_s_dt(sp(sigma, t), cfg);
          },
          py::arg("sigma"), py::arg("t"), py::arg("config") = series_config{});
    m.def("d_abs_gamma_half_1ms_dt",
          [](double sigma, double t, const series_config& cfg) {
              return d_abs_gamma_half_1ms_dt(sp(sigma, t), cfg);
          },
          py::arg("sigma"), py::arg("t"), py::arg("config") = series_config{});
    m.def("w_even_integer", &w_even_integer, py::arg("n"));
    m.def("reflection_product", &reflection_product, py::arg("eps"), py::arg("t"));

    // analysis
    py::class_<analysis::g_expansion>(m, "GExpansion")
        .def_readonly("t", &analysis::g_expansion::t)
        .def_readonly("coeffs", &analysis::g_expansion::coeffs)
        .def_readonly("even_coeffs", &analysis::g_expansion::even_coeffs)
        .def_readonly("tail_bound", &analysis::g_expansion::tail_bound)
        .def_readonly("k_max", &analysis::g_expansion::k_max);
    py::class_<analysis::locus_point>(m, "LocusPoint")
        .def_readonly("sigma", &analysis::locus_point::sigma)
        .def_readonly("t_star", &analysis::locus_point::t_star)
        .def_readonly("bracket_lo", &analysis::locus_point::bracket_lo)
        .def_readonly("bracket_hi", &analysis::locus_point::bracket_hi)
        .def_readonly("residual", &analysis::locus_point::residual);
    py::class_<analysis::scan_violation>(m, "ScanViolation")
        .def_readonly("sigma", &analysis::scan_violation::sigma)
        .def_readonly("kind", &analysis::scan_violation::kind)
        .def_readonly("detail", &analysis::scan_violation::detail);
    py::class_<analysis::sigma_scan_entry>(m, "SigmaScanEntry")
        .def_readonly("sigma", &analysis::sigma_scan_entry::sigma)
        .def_readonly("crossings", &analysis::sigma_scan_entry::crossings);
    py::class_<analysis::scan_report>(m, "ScanReport")
        .def_readonly("t_max", &analysis::scan_report::t_max)
        .def_readonly("entries", &analysis::scan_report::entries)
        .def_readonly("violations", &analysis::scan_report::violations)
        .def_readonly("notes", &analysis::scan_report::notes)
        .def("clean", &analysis::scan_report::clean);
    py::class_<analysis::locus_zeta_row>(m, "LocusZetaRow")
        .def_readonly("sigma", &analysis::locus_zeta_row::sigma)
        .def_readonly("abs_zeta_s", &analysis::locus_zeta_row::abs_zeta_s)
        .def_readonly("abs_zeta_1ms", &analysis::locus_zeta_row::abs_zeta_1ms);

    m.def("taylor_coeffs", &analysis::taylor_coeffs, py::arg("t"), py::arg("k_max") = 8);
    m.def("tail_sum", &analysis::tail_sum, py::arg("t"), py::arg("from_k"), py::arg("to_k"));
    m.def("g_quartic_roots", &analysis::g_quartic_roots, py::arg("t"));
    m.def("unit_modulus_crossing", &analysis::unit_modulus_crossing, py::arg("sigma"),
          py::arg("t_lo"), py::arg("t_hi"));
    m.def("boundedness_scan", &analysis::boundedness_scan, py::arg("sigma_grid"),
          py::arg("t_max"), py::call_guard<py::gil_scoped_release>());
    m.def("critical_line_map", &analysis::critical_line_map, py::arg("t_lo"),
          py::arg("t_hi"), py::arg("n_points"));
    m.def("zeta_along_locus", &analysis::zeta_along_locus, py::arg("locus"));
    m.def("find_zeta_zero", &analysis::find_zeta_zero, py::arg("t_lo"), py::arg("t_hi"));
    m.def("dg_dsigma", [](double sigma, double t) { return analysis::dg_dsigma(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("d2g_dsigma2",
          [](double sigma, double t) { return analysis::d2g_dsigma2(sp(sigma, t)); },
          py::arg("sigma"), py::arg("t"));
    m.def("g_series_eval", &analysis::g_series_eval, py::arg("expansion"), py::arg("delta"));
    m.def("dg_series_eval", &analysis::dg_series_eval, py::arg("expansion"), py::arg("delta"));

    // claims
    py::enum_<claims::claim_status>(m, "ClaimStatus")
        .value("pending", claims::claim_status::pending)
        .value("passed", claims::claim_status::pass)
        .value("failed", claims::claim_status::fail)
        .value("paper_inconsistent", claims::claim_status::paper_inconsistent);
    py::enum_<claims::tolerance_kind>(m, "ToleranceKind")
        .value("absolute", claims::tolerance_kind::absolute)
        .value("relative", claims::tolerance_kind::relative)
        .value("sign", claims::tolerance_kind::sign);
    py::class_<claims::claim_record>(m, "ClaimRecord")
        .def(py::init<>())
        .def_readwrite("id", &claims::claim_record::id)
        .def_readwrite("paper_loc", &claims::claim_record::paper_loc)
        .def_readwrite("quote", &claims::claim_record::quote)
        .def_readwrite("expected", &claims::claim_record::expected)
        .def_readwrite("tolerance", &claims::claim_record::tolerance)
        .def_readwrite("kind", &claims::claim_record::kind)
        .def_readwrite("inconsistent_candidate", &claims::claim_record::inconsistent_candidate)
        .def_readonly("computed", &claims::claim_record::computed)
        .def_readonly("status", &claims::claim_record::status)
        .def_readonly("message", &claims::claim_record::message);
    py::class_<claims::claim_report>(m, "ClaimReport")
        .def_readonly("n_pass", &claims::claim_report::n_pass)
        .def_readonly("n_fail", &claims::claim_report::n_fail)
        .def_readonly("n_inconsistent", &claims::claim_report::n_inconsistent)
        .def_readonly("claims", &claims::claim_report::claims);
    m.def("builtin_registry", &claims::builtin_registry);
    m.def("run_claims", &claims::run_claims, py::arg("registry"),
          py::arg("config") = series_config{}, py::call_guard<py::gil_scoped_release>());
    m.def("registry_from_json", &claims::registry_from_json, py::arg("json_text"));
    m.def("registry_to_json", &claims::registry_to_json, py::arg("registry"));
    m.def("report_to_json", &claims::report_to_json, py::arg("report"));
    m.def("report_to_text", &claims::report_to_text, py::arg("report"));
}
