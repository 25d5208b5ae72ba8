// Acceptance suite: recomputes the manuscript-level checks end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any criterion
// fails. Criterion 2 is expected to fail: the manuscript's printed
// |W(0 + 2 pi i)| = 0.9999999991 is off by 1.78e-9 from the recomputed
// value 0.9999999973247120, which three independent evaluation routes
// (Gamma-ratio form, product form, |zeta(s)/zeta(1-s)|) agree on. The
// criterion is kept as stated rather than widened to match.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wmap/analysis.hpp"
#include "wmap/claims.hpp"
#include "wmap/specfun.hpp"
#include "wmap/wmap.hpp"

using namespace wmap;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
const double t1 = 2.0 * pi;
const double t2 = 2.01 * pi;

int n_pass = 0, n_fail = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail = {}) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
    if (!ok && !detail.empty()) std::printf("      %s\n", detail.c_str());
    (ok ? n_pass : n_fail) += 1;
}

bool close_abs(double got, double want, double tol) { return std::abs(got - want) <= tol; }
bool close_rel(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::abs(want);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

int main() {
    // 1. zeta(0) = -1/2
    {
        const double z0 = specfun::riemann_zeta({0.0, 0.0}).real();
        report(1, "zeta(0) = -1/2 within 1e-10", close_abs(z0, -0.5, 1e-10));
    }

    // 2. |W(0 + 2 pi i)| = 0.9999999991 within 1e-9; |W(1 + 2 pi i)| = its
    //    reciprocal within 1e-9. Expected red: see header comment.
    {
        const double a = w_abs({0.0, t1});
        const double b = w_abs({1.0, t1});
        const bool ok_a = close_abs(a, 0.9999999991, 1e-9);
        const bool ok_b = close_abs(b, 1.0 / 0.9999999991, 1e-9);
        report(2, "|W(0+2pi i)| = 0.9999999991 and |W(1+2pi i)| = 1/0.9999999991, 1e-9 abs",
               ok_a && ok_b,
               "computed |W(0+2pi i)| = " + num(a) + " (reference 0.9999999973247120 from "
               "three independent routes at 120-digit precision; the printed value is off "
               "by 1.78e-9). Reciprocity itself holds: |W0|*|W1| - 1 = " +
                   num(a * b - 1.0));
    }

    // 3. |W(0 + 2.01 pi i)| = 1.0025 within 5e-4
    {
        const double a = w_abs({0.0, t2});
        report(3, "|W(0+2.01pi i)| = 1.0025 within 5e-4", close_abs(a, 1.0025, 5e-4));
    }

    // 4. G(1/2, 2.01 pi)
    report(4, "G(1/2, 2.01pi) = -0.015751728 within 1e-8",
           close_abs(g_function({0.5, t2}), -0.015751728, 1e-8));

    // 5. G(0, 2 pi) and G(1/2, 2 pi)
    report(5, "G(0, 2pi) = -0.008465084 and G(1/2, 2pi) = 0.004240720 within 1e-8",
           close_abs(g_function({0.0, t1}), -0.008465084, 1e-8) &&
               close_abs(g_function({0.5, t1}), 0.004240720, 1e-8));

    // 6. Taylor coefficients at 1e-4 relative
    {
        const auto et2 = analysis::taylor_coeffs(t2, 8);
        const auto et1 = analysis::taylor_coeffs(t1, 8);
        const bool ok = close_rel(et2.coeffs[0].second, -1.0095424e-1, 1e-4) &&
                        close_rel(et2.coeffs[1].second, 2.5705715e-3, 1e-4) &&
                        close_rel(et2.coeffs[2].second, -6.6264219e-5, 1e-4) &&
                        close_rel(et1.coeffs[0].second, -1.0197290e-1, 1e-4) &&
                        close_rel(et1.coeffs[1].second, 2.6229847e-3, 1e-4) &&
                        close_rel(et1.coeffs[2].second, -6.8327078e-5, 1e-4) &&
                        close_rel(et1.even_coeffs[0].second, -4.5746788, 1e-4) &&
                        close_rel(et1.even_coeffs[1].second, -5.0986449e-2, 1e-4) &&
                        close_rel(et1.even_coeffs[2].second, 6.5574618e-4, 1e-4);
        report(6, "c1,c3,c5 (2.01pi) and g'1,g'3,g'5, g0,g2,g4 (2pi) within 1e-4 rel", ok);
    }

    // 7. Tail sums and dominance inequalities
    {
        const double tail_b = analysis::tail_sum(t2, 4, 20);
        const double tail_c = analysis::tail_sum(t1, 4, 20);
        const double c5 = std::abs(analysis::taylor_coeffs(t2, 3).coeffs[2].second);
        const double gp5 = std::abs(analysis::taylor_coeffs(t1, 3).coeffs[2].second);
        report(7, "tails 1.824122120e-6 / 1.904573728e-6 within 1e-9; |c5|, |g'5| dominate",
               close_abs(tail_b, 1.824122120e-6, 1e-9) &&
                   close_abs(tail_c, 1.904573728e-6, 1e-9) && c5 > tail_b && gp5 > tail_c);
    }

    // 8. delta_+- roots
    {
        const auto [dm, dp] = analysis::g_quartic_roots(t1);
        report(8, "delta_+- = +-0.2885526325 within 1e-6",
               close_abs(dp, 0.2885526325, 1e-6) && dm == -dp);
    }

    // 9. d2G/dsigma2 consistency with c1; registry flags the printed value
    {
        const double d2g = analysis::d2g_dsigma2({0.5, t2});
        const double c1 = analysis::taylor_coeffs(t2, 3).coeffs[0].second;
        const auto rep = claims::run_claims(claims::builtin_registry());
        bool registry_ok = false;
        for (const auto& c : rep.claims) {
            if (c.id == "D2G_HALF_2_01PI") {
                registry_ok = c.status == claims::claim_status::paper_inconsistent &&
                              c.computed && close_rel(*c.computed, -0.10095424, 1e-5);
            }
        }
        report(9, "d2G/dsigma2(1/2, 2.01pi) = c1 within 1e-8 rel; printed -1.009542407 flagged",
               close_rel(d2g, c1, 1e-8) && registry_ok,
               "computed d2G = " + num(d2g) + ", c1 = " + num(c1));
    }

    // 10. Reflection property on 10^3 random (eps, t)
    {
        std::mt19937 rng(9001);
        std::uniform_real_distribution<double> ee(-3.0, 3.0), tt(-30.0, 30.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double eps = ee(rng);
            double t = tt(rng);
            if (std::abs(t) < 1e-3) t += 0.5;
            const cxdbl p = reflection_product(eps, t);
            worst = std::max(worst, std::abs(p - cxdbl{1.0, 0.0}));
        }
        report(10, "W(s+) W(conj s-) = 1 within 1e-10 on 1000 random pairs", worst <= 1e-10,
               "worst deviation " + num(worst));
    }

    // 11. Critical line: 8000 figure samples
    {
        double worst = 0.0;
        for (const auto& r : analysis::critical_line_map(-100.0, 100.0 - 0.025, 8000))
            worst = std::max(worst, std::abs(r[1] * r[1] + r[2] * r[2] - 1.0));
        report(11, "max ||W|-1| over 8000 critical-line samples <= 1e-10", worst <= 1e-10,
               "worst " + num(worst));
    }

    // 12. Sign law and finite-difference agreement for d|W|/dt
    {
        std::mt19937 rng(9002);
        std::uniform_real_distribution<double> sig(0.0, 1.0), tt(-40.0, 40.0);
        int violations = 0;
        for (int i = 0; i < 1000; ++i) {
            strip_point s{sig(rng), tt(rng)};
            if (classify(s) != w_kind::regular) s.t += 0.3;
            if (s.sigma == 0.5 || s.t == 0.0) continue;
            const double d = dw_abs_dt(s);
            if ((d > 0.0) != ((0.5 - s.sigma) * s.t > 0.0)) ++violations;
        }
        double worst_fd = 0.0;
        std::uniform_real_distribution<double> tpos(1.0, 40.0);
        for (int i = 0; i < 400; ++i) {
            const double sigma = sig(rng);
            const double t = tpos(rng);
            // skip points where the h = 1e-5 central difference itself drowns
            // in rounding noise (~2.5e-11 t^2 / |sigma - 1/2| relative)
            if (std::abs(sigma - 0.5) < 2.5e-4 * t * t) continue;
            const double an = dw_abs_dt({sigma, t});
            const double h = 1e-5;
            const double fd = (w_abs({sigma, t + h}) - w_abs({sigma, t - h})) / (2.0 * h);
            worst_fd = std::max(worst_fd, std::abs(an - fd) / std::abs(fd));
        }
        report(12, "sign(d|W|/dt) = sign((1/2-sigma)t) with 0 violations; FD match 1e-6 rel",
               violations == 0 && worst_fd <= 1e-6,
               "violations " + std::to_string(violations) + ", worst FD dev " + num(worst_fd));
    }

    // 13. Appendix-E |Gamma| derivatives: FD match and strict negativity
    {
        std::mt19937 rng(9003);
        std::uniform_real_distribution<double> sig(0.0, 1.0), tt(1.0, 25.0);
        double worst = 0.0;
        bool all_negative = true;
        for (int i = 0; i < 100; ++i) {
            const double sigma = sig(rng), t = tt(rng);
            const double h = 1e-5;
            const auto f_s = [sigma](double tv) {
                return std::exp(specfun::log_gamma(0.5 * cxdbl{sigma, tv}).real());
            };
            const auto f_m = [sigma](double tv) {
                return std::exp(specfun::log_gamma(0.5 * (1.0 - cxdbl{sigma, tv})).real());
            };
            const double as = d_abs_gamma_half_s_dt({sigma, t});
            const double am = d_abs_gamma_half_1ms_dt({sigma, t});
            all_negative = all_negative && as < 0.0 && am < 0.0;
            worst = std::max(worst, std::abs(as - (f_s(t + h) - f_s(t - h)) / (2.0 * h)) /
                                        std::abs(as));
            worst = std::max(worst, std::abs(am - (f_m(t + h) - f_m(t - h)) / (2.0 * h)) /
                                        std::abs(am));
        }
        report(13, "d|Gamma|/dt series match FD within 1e-6 rel at 100 points; negative for t>0",
               worst <= 1e-6 && all_negative, "worst FD dev " + num(worst));
    }

    // 14. Boundedness scan over the strip
    analysis::scan_report scan;
    {
        std::vector<double> grid;
        for (int i = 0; i <= 20; ++i) {
            const double sigma = 0.05 * i;
            if (sigma != 0.5) grid.push_back(sigma);
        }
        scan = analysis::boundedness_scan(grid, 50.0);
        bool ok = scan.violations.empty() && scan.entries.size() == 20;
        for (const auto& e : scan.entries) ok = ok && e.crossings.size() == 1;
        std::string detail;
        for (const auto& v : scan.violations)
            detail += "sigma " + num(v.sigma) + " [" + v.kind + "] " + v.detail + "; ";
        report(14, "exactly one |W|=1 crossing per sigma, all inside (2pi, 2.01pi), t <= 50",
               ok, detail);
    }

    // 15. zeta along the locus: stand-in threshold plus frozen regression
    {
        std::vector<analysis::locus_point> locus;
        for (const auto& e : scan.entries)
            if (!e.crossings.empty()) locus.push_back(e.crossings.front());
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& row : analysis::zeta_along_locus(locus))
            lo = std::min(lo, row.abs_zeta_s);
        report(15, "min |zeta(s)| along the locus > 0.1 (frozen scan value 0.9572862517)",
               lo > 0.1 && close_abs(lo, 0.957286251747809, 1e-6), "min " + num(lo));
    }

    // 16. Critical-line zeros: |zeta| vanishes where |W| = 1
    {
        const double z1 = analysis::find_zeta_zero(14.0, 14.2);
        const double z2 = analysis::find_zeta_zero(20.9, 21.1);
        const bool ok = std::abs(specfun::riemann_zeta({0.5, z1})) <= 1e-8 &&
                        std::abs(specfun::riemann_zeta({0.5, z2})) <= 1e-8 &&
                        std::abs(w_abs({0.5, z1}) - 1.0) <= 1e-12 &&
                        std::abs(w_abs({0.5, z2}) - 1.0) <= 1e-12;
        report(16, "zeros near 14.1347 and 21.0220: |zeta| <= 1e-8 and |W| = 1 +- 1e-12", ok,
               "t = " + num(z1) + ", " + num(z2));
    }

    // 17. Functional-equation residual on 10^3 strip samples
    {
        std::mt19937 rng(9004);
        std::uniform_real_distribution<double> sig(0.05, 0.95), tt(0.5, 60.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const cxdbl s{sig(rng), tt(rng) * (i % 2 ? 1.0 : -1.0)};
            const cxdbl zs = specfun::riemann_zeta(s);
            const cxdbl rhs = w_gamma_ratio({s.real(), s.imag()}).value() *
                              specfun::riemann_zeta(1.0 - s);
            worst = std::max(worst, std::abs(zs - rhs) / (1.0 + std::abs(zs)));
        }
        report(17, "|zeta(s) - W(s) zeta(1-s)| <= 1e-8 (1+|zeta|) on 1000 samples",
               worst <= 1e-8, "worst " + num(worst));
    }

    // 18. Product form vs Gamma-ratio form
    {
        std::mt19937 rng(9005);
        std::uniform_real_distribution<double> sig(-3.0, 3.0), tt(-60.0, 60.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            strip_point s{sig(rng), tt(rng)};
            if (classify(s) != w_kind::regular) s.t += 0.25;
            const w_value a = w_product(s);
            const w_value b = w_gamma_ratio(s);
            worst = std::max(worst, std::abs(a.value() - b.value()) / a.modulus);
        }
        report(18, "product and Gamma-ratio forms agree within 1e-9 rel on 1000 samples",
               worst <= 1e-9, "worst " + num(worst));
    }

    // 19. Modulus reciprocity
    {
        std::mt19937 rng(9006);
        std::uniform_real_distribution<double> sig(0.0, 1.0), tt(0.5, 60.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double sigma = sig(rng), t = tt(rng);
            worst = std::max(worst,
                             std::abs(w_abs({sigma, t}) * w_abs({1.0 - sigma, t}) - 1.0));
        }
        report(19, "|W(sigma+it)| |W(1-sigma+it)| = 1 within 1e-9 on 1000 samples",
               worst <= 1e-9, "worst " + num(worst));
    }

    // 20. Claim-verifier determinism
    {
        const auto reg = claims::builtin_registry();
        const std::string a = claims::report_to_json(claims::run_claims(reg));
        const std::string b = claims::report_to_json(claims::run_claims(reg));
        report(20, "two verify runs serialize to byte-identical JSON reports", a == b);
    }

    std::printf("----\n%d/20 criteria passed", n_pass);
    if (n_fail > 0)
        std::printf(" (%d failed; criterion 2 reflects a defect in the audited value, "
                    "see the claim registry's paper-inconsistent entries)",
                    n_fail);
    std::printf("\n");
    return n_fail > 0 ? 1 : 0;
}
