#pragma once

// Taylor machinery of G(sigma, t) about sigma = 1/2, |W| = 1 locus tracing
// and boundedness scanning, the critical-line unit-circle map, and the zeta
// evaluations along the locus.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wmap/series.hpp"
#include "wmap/wmap.hpp"

namespace wmap::analysis {

// Taylor data of G(sigma, t) at fixed t, in delta = sigma - 1/2:
//   G(sigma,t)      = 4 ln pi + sum_k g_{2k} delta^{2k}
//   dG/dsigma       = sum_k c_{2k-1} delta^{2k-1}
// with c_{2k-1} = -[Psi(2k, 1/4+it/2) + Psi(2k, 1/4-it/2)] / ((2k-1)! 2^(2k-1))
// and  g_{2k}   = -[Psi(2k, 1/4+it/2) + Psi(2k, 1/4-it/2)] / ((2k)!   2^(2k-1)).
struct g_expansion {
    double t = 0.0;
    std::vector<std::pair<int, double>> coeffs;       // (order 2k-1, c value)
    std::vector<std::pair<int, double>> even_coeffs;  // (order 2k, g value)
    double tail_bound = 0.0;                          // sum_{k>=4} |c_{2k-1}|
    int k_max = 0;
};

// A refined solution of |W(sigma + i t)| = 1.
struct locus_point {
    double sigma = 0.0;
    double t_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;  // | |W| - 1 | at t_star
};

struct scan_violation {
    double sigma = 0.0;
    std::string kind;    // "crossing-count" | "band"
    std::string detail;
};

struct sigma_scan_entry {
    double sigma = 0.0;
    std::vector<locus_point> crossings;
};

struct scan_report {
    double t_max = 0.0;
    std::vector<sigma_scan_entry> entries;      // ordered by sigma
    std::vector<scan_violation> violations;     // findings, never silently dropped
    std::vector<std::string> notes;

    bool clean() const { return violations.empty(); }
};

struct locus_zeta_row {
    double sigma = 0.0;
    double abs_zeta_s = 0.0;
    double abs_zeta_1ms = 0.0;
};

// Odd and even Taylor coefficients through order 2*k_max, plus the
// k >= 4 tail bound. Requires t != 0 and k_max in [3, 12].
g_expansion taylor_coeffs(double t, int k_max = 8);

// sum_{k=from_k}^{to_k} |c_{2k-1}(t)|, 4 <= from_k <= to_k <= 40.
double tail_sum(double t, int from_k, int to_k);

// Real roots delta_{-} = -delta_{+} of the truncated quartic
// 4 ln pi + g0 + g2 delta^2 + g4 delta^4 = 0, solved exactly in delta^2.
std::pair<double, double> g_quartic_roots(double t);

// Bisection of |W(sigma + i t)| - 1 on [t_lo, t_hi] down to a 1e-12 wide
// bracket. The bracket must straddle a sign change; sigma = 1/2 is
// degenerate (|W| is identically 1 there).
locus_point unit_modulus_crossing(double sigma, double t_lo, double t_hi);

// For every sigma in the grid, enumerate all |W| = 1 crossings with
// t in [0.01, t_max] (pre-scan step 1e-3, then bisection refinement) and
// record a violation whenever the count differs from one or a crossing
// falls outside (2 pi, 2.01 pi). Entries run concurrently; the report is
// assembled in sigma order.
scan_report boundedness_scan(const std::vector<double>& sigma_grid, double t_max);

// W(1/2 + i t) sampled uniformly on [t_lo, t_hi]; rows are (t, u, v).
std::vector<std::array<double, 3>> critical_line_map(double t_lo, double t_hi,
                                                     int n_points);

// |zeta(s)| and |zeta(1-s)| at each locus point (residual <= 1e-10 required).
std::vector<locus_zeta_row> zeta_along_locus(const std::vector<locus_point>& locus);

// Ordinate of a critical-line zeta zero inside [t_lo, t_hi]: bisection on
// the sign of Re[zeta(1/2+it) W(1/2+it)^(-1/2)], requiring exactly one sign
// change at pre-scan step 1e-3. The result satisfies |zeta(1/2+it)| <= 1e-8.
double find_zeta_zero(double t_lo, double t_hi);

// dG/dsigma and d^2G/dsigma^2 through the polygamma formulas
//   dG/dsigma  = [-Psi(1,s/2) - Psi(1,s*/2) + Psi(1,(1-s)/2) + Psi(1,(1-s*)/2)] / 2
//   d2G/dsigma2 = [-Psi(2,s/2) - Psi(2,s*/2) - Psi(2,(1-s)/2) - Psi(2,(1-s*)/2)] / 4
double dg_dsigma(strip_point s);
double d2g_dsigma2(strip_point s);

// Evaluate the stored expansions at delta = sigma - 1/2.
double g_series_eval(const g_expansion& exp, double delta);   // includes 4 ln pi
double dg_series_eval(const g_expansion& exp, double delta);

}  // namespace wmap::analysis
