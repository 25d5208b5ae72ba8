#include "wmap/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "wmap/specfun.hpp"

namespace wmap::analysis {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double four_ln_pi = 4.578919543397600696573709405412234847;
constexpr double band_lo = 2.0 * pi;          // t_1
constexpr double band_hi = 2.01 * pi;         // t_2 = kappa

// -[Psi(2k, 1/4 + it/2) + Psi(2k, 1/4 - it/2)]: the conjugate pair sums to
// twice the real part.
double psi_pair(int two_k, double t) {
    const cxdbl arg{0.25, 0.5 * t};
    const cxdbl v = (two_k == 0) ? specfun::digamma(arg) : specfun::polygamma(two_k, arg);
    return -2.0 * v.real();
}

double odd_coeff(int k, double t, double factorial_2km1) {
    return psi_pair(2 * k, t) / (factorial_2km1 * std::pow(2.0, 2 * k - 1));
}

}  // namespace

g_expansion taylor_coeffs(double t, int k_max) {
    if (t == 0.0) throw domain_error("taylor_coeffs requires t != 0");
    if (k_max < 3 || k_max > 12)
        throw domain_error("taylor_coeffs requires k_max in [3, 12]");

    g_expansion out;
    out.t = t;
    out.k_max = k_max;
    out.even_coeffs.emplace_back(0, 2.0 * psi_pair(0, t));  // g0: 2^(0-1), 0! = 1
    double fact_odd = 1.0;   // (2k-1)!
    double fact_even = 1.0;  // (2k)!
    for (int k = 1; k <= k_max; ++k) {
        fact_odd *= (k == 1) ? 1.0 : static_cast<double>((2 * k - 2) * (2 * k - 1));
        fact_even *= static_cast<double>((2 * k - 1) * (2 * k));
        const double pair = psi_pair(2 * k, t);
        const double scale = std::pow(2.0, 2 * k - 1);
        out.coeffs.emplace_back(2 * k - 1, pair / (fact_odd * scale));
        out.even_coeffs.emplace_back(2 * k, pair / (fact_even * scale));
    }

    // Tail bound sum_{k>=4} |c_{2k-1}|, extended until the geometric
    // remainder estimate drops below 1% of the accumulated bound. (The
    // coefficients decay by a fixed ratio ~1/(4|1/4+it/2|^2), so a cutoff
    // relative to the last term alone would never trigger.)
    double fact = 1.0;
    for (int j = 2; j <= 4; ++j) fact *= static_cast<double>(2 * j - 2) * (2 * j - 1);
    double bound = 0.0;
    double prev = 0.0;
    for (int k = 4; k <= 40; ++k) {
        if (k > 4) fact *= static_cast<double>((2 * k - 2) * (2 * k - 1));
        const double ck = std::abs(odd_coeff(k, t, fact));
        bound += ck;
        if (k > 4 && prev > 0.0) {
            const double ratio = ck / prev;
            if (ratio < 1.0 && ck * ratio / (1.0 - ratio) < 0.01 * bound) break;
        }
        prev = ck;
    }
    out.tail_bound = bound;
    return out;
}

double tail_sum(double t, int from_k, int to_k) {
    if (from_k < 4 || from_k > to_k || to_k > 40)
        throw domain_error("tail_sum requires 4 <= from_k <= to_k <= 40");
    double fact = 1.0;  // (2k-1)! built incrementally
    for (int j = 2; j <= from_k; ++j)
        fact *= static_cast<double>((2 * j - 2) * (2 * j - 1));
    double sum = 0.0;
    for (int k = from_k; k <= to_k; ++k) {
        if (k > from_k) fact *= static_cast<double>((2 * k - 2) * (2 * k - 1));
        sum += std::abs(odd_coeff(k, t, fact));
    }
    return sum;
}

std::pair<double, double> g_quartic_roots(double t) {
    const g_expansion exp = taylor_coeffs(t, 3);
    const double g0 = exp.even_coeffs[0].second;
    const double g2 = exp.even_coeffs[1].second;
    const double g4 = exp.even_coeffs[2].second;
    const double c0 = four_ln_pi + g0;

    // g4 y^2 + g2 y + c0 = 0 in y = delta^2, stable quadratic form.
    const double disc = g2 * g2 - 4.0 * g4 * c0;
    if (disc < 0.0) throw no_root_error("g_quartic_roots: complex roots");
    const double q = -0.5 * (g2 + std::copysign(std::sqrt(disc), g2));
    const double roots[2] = {q / g4, c0 / q};
    for (double y : roots) {
        if (y > 0.0 && y <= 0.25) {
            const double residual = std::abs(c0 + g2 * y + g4 * y * y);
            if (residual > 1e-12)
                throw std::logic_error("g_quartic_roots: residual exceeds 1e-12");
            const double delta = std::sqrt(y);
            return {-delta, delta};
        }
    }
    throw no_root_error("g_quartic_roots: no real root with |delta| <= 1/2");
}

locus_point unit_modulus_crossing(double sigma, double t_lo, double t_hi) {
    if (sigma == 0.5)
        throw degenerate_error("unit_modulus_crossing: |W| == 1 identically at sigma = 1/2");
    if (sigma < 0.0 || sigma > 1.0)
        throw domain_error("unit_modulus_crossing requires sigma in [0, 1]");
    if (!(t_lo < t_hi)) throw domain_error("unit_modulus_crossing: empty bracket");

    const auto f = [sigma](double t) { return w_abs({sigma, t}) - 1.0; };
    double flo = f(t_lo), fhi = f(t_hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) == (fhi < 0.0))
        throw no_bracket_error("unit_modulus_crossing: no sign change on bracket");

    // The sign law makes |W| strictly monotone in t, so the crossing is
    // unique; spot-check the derivative sign at 100 interior points.
    const double want = (0.5 - sigma) * (0.5 * (t_lo + t_hi));
    for (int i = 1; i <= 100; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / 101.0;
        const double d = dw_abs_dt({sigma, t});
        if ((d > 0.0) != (want > 0.0))
            throw std::logic_error("unit_modulus_crossing: derivative sign flip in bracket");
    }

    double lo = t_lo, hi = t_hi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = std::nextafter(mid, lo);
            hi = std::nextafter(mid, hi);
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    locus_point out;
    out.sigma = sigma;
    out.t_star = 0.5 * (lo + hi);
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.residual = std::abs(w_abs({sigma, out.t_star}) - 1.0);
    return out;
}

namespace {

sigma_scan_entry scan_one_sigma(double sigma, double t_max) {
    constexpr double t0 = 0.01;
    constexpr double step = 1e-3;
    sigma_scan_entry entry;
    entry.sigma = sigma;
    double prev_t = t0;
    double prev_f = w_abs({sigma, prev_t}) - 1.0;
    const long n_steps = static_cast<long>(std::ceil((t_max - t0) / step));
    for (long i = 1; i <= n_steps; ++i) {
        const double t = std::min(t0 + step * static_cast<double>(i), t_max);
        const double fv = w_abs({sigma, t}) - 1.0;
        if (fv == 0.0) {
            // exact hit on the locus at a grid node
            entry.crossings.push_back(
                {sigma, t, std::nextafter(t, prev_t), std::nextafter(t, t + 1.0), 0.0});
        } else if (prev_f != 0.0 && (fv < 0.0) != (prev_f < 0.0)) {
            entry.crossings.push_back(unit_modulus_crossing(sigma, prev_t, t));
        }
        prev_t = t;
        prev_f = fv;
    }
    return entry;
}

}  // namespace

scan_report boundedness_scan(const std::vector<double>& sigma_grid, double t_max) {
    if (!(t_max > 0.02)) throw domain_error("boundedness_scan: t_max too small");
    scan_report report;
    report.t_max = t_max;

    std::vector<double> grid;
    for (double sigma : sigma_grid) {
        if (sigma == 0.5) {
            report.notes.push_back("sigma = 0.5 skipped: |W| == 1 identically, no isolated crossing");
            continue;
        }
        grid.push_back(sigma);
    }
    std::sort(grid.begin(), grid.end());

    // Worker pool sized to available parallelism; entries are independent
    // pure computations and land in grid order, so the report is
    // deterministic regardless of scheduling.
    std::vector<sigma_scan_entry> results(grid.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t n_workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                       grid.size()));
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < grid.size();) {
                try {
                    results[i] = scan_one_sigma(grid[i], t_max);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    report.entries = std::move(results);

    for (const auto& entry : report.entries) {
        if (entry.crossings.size() != 1) {
            report.violations.push_back(
                {entry.sigma, "crossing-count",
                 "expected exactly 1 crossing, found " + std::to_string(entry.crossings.size())});
        }
        for (const auto& cross : entry.crossings) {
            if (!(cross.t_star > band_lo && cross.t_star < band_hi)) {
                report.violations.push_back(
                    {entry.sigma, "band",
                     "crossing t* = " + std::to_string(cross.t_star) +
                         " outside (2 pi, 2.01 pi)"});
            }
        }
    }
    return report;
}

std::vector<std::array<double, 3>> critical_line_map(double t_lo, double t_hi,
                                                     int n_points) {
    if (n_points < 2) throw domain_error("critical_line_map requires n_points >= 2");
    std::vector<std::array<double, 3>> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                    static_cast<double>(n_points - 1);
        const w_value w = w_gamma_ratio({0.5, t});
        rows.push_back({t, w.u, w.v});
    }
    return rows;
}

std::vector<locus_zeta_row> zeta_along_locus(const std::vector<locus_point>& locus) {
    std::vector<locus_zeta_row> rows;
    rows.reserve(locus.size());
    for (const auto& lp : locus) {
        if (!(lp.residual <= 1e-10))
            throw domain_error("zeta_along_locus: locus point residual exceeds 1e-10");
        const double zs = std::abs(specfun::riemann_zeta({lp.sigma, lp.t_star}));
        const double z1 = std::abs(specfun::riemann_zeta({1.0 - lp.sigma, -lp.t_star}));
        rows.push_back({lp.sigma, zs, z1});
    }
    return rows;
}

namespace {

// Re[zeta(1/2+it) W(1/2+it)^(-1/2)]: real by the functional equation,
// vanishing exactly at the critical-line zeta zeros. A principal-branch
// jump of log W would flip the sign without a zero; the pre-scan demands
// exactly one sign change so such artifacts are rejected loudly.
double hardy_like(double t) {
    const w_value w = w_gamma_ratio({0.5, t});
    const cxdbl half_log_w = 0.5 * std::log(w.value());
    return (specfun::riemann_zeta({0.5, t}) * std::exp(-half_log_w)).real();
}

}  // namespace

double find_zeta_zero(double t_lo, double t_hi) {
    if (!(t_lo < t_hi)) throw domain_error("find_zeta_zero: empty bracket");
    constexpr double step = 1e-3;
    double lo = 0.0, hi = 0.0;
    int changes = 0;
    double prev_t = t_lo;
    double prev_f = hardy_like(prev_t);
    const long n_steps = static_cast<long>(std::ceil((t_hi - t_lo) / step));
    for (long i = 1; i <= n_steps; ++i) {
        const double t = std::min(t_lo + step * static_cast<double>(i), t_hi);
        const double fv = hardy_like(t);
        if ((fv < 0.0) != (prev_f < 0.0)) {
            ++changes;
            lo = prev_t;
            hi = t;
        }
        prev_t = t;
        prev_f = fv;
    }
    if (changes != 1)
        throw no_bracket_error("find_zeta_zero: bracket must contain exactly one sign change, found " +
                               std::to_string(changes));

    double flo = hardy_like(lo);
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = hardy_like(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double t_zero = 0.5 * (lo + hi);
    if (!(std::abs(specfun::riemann_zeta({0.5, t_zero})) <= 1e-8))
        throw no_bracket_error("find_zeta_zero: sign change is not a zeta zero (branch artifact)");
    return t_zero;
}

double dg_dsigma(strip_point s) {
    const cxdbl z = s.value();
    const cxdbl zc = std::conj(z);
    const cxdbl v = -specfun::polygamma(1, 0.5 * z) - specfun::polygamma(1, 0.5 * zc) +
                    specfun::polygamma(1, 0.5 * (1.0 - z)) +
                    specfun::polygamma(1, 0.5 * (1.0 - zc));
    if (!(std::abs(v.imag()) < 1e-10 * (1.0 + std::abs(v.real()))))
        throw std::logic_error("dg_dsigma: imaginary residue exceeds tolerance");
    return 0.5 * v.real();
}

double d2g_dsigma2(strip_point s) {
    const cxdbl z = s.value();
    const cxdbl zc = std::conj(z);
    const cxdbl v = specfun::polygamma(2, 0.5 * z) + specfun::polygamma(2, 0.5 * zc) +
                    specfun::polygamma(2, 0.5 * (1.0 - z)) +
                    specfun::polygamma(2, 0.5 * (1.0 - zc));
    if (!(std::abs(v.imag()) < 1e-10 * (1.0 + std::abs(v.real()))))
        throw std::logic_error("d2g_dsigma2: imaginary residue exceeds tolerance");
    return -0.25 * v.real();
}

double g_series_eval(const g_expansion& exp, double delta) {
    double sum = four_ln_pi;
    for (const auto& [order, g] : exp.even_coeffs) sum += g * std::pow(delta, order);
    return sum;
}

double dg_series_eval(const g_expansion& exp, double delta) {
    double sum = 0.0;
    for (const auto& [order, c] : exp.coeffs) sum += c * std::pow(delta, order);
    return sum;
}

}  // namespace wmap::analysis
