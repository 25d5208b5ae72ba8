#pragma once

// The meromorphic map W(s) of the zeta functional equation
// zeta(s) = W(s) zeta(1-s), in both closed forms
//
//   W(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s)            (product form)
//   W(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2)           (Gamma-ratio form)
//
// together with its modulus, the analytic formulas for d|W|/dt and d|W|/dsigma,
// and the |Gamma| derivative series they are assembled from.

#include <complex>

#include "wmap/series.hpp"

namespace wmap {

// A point s = sigma + i t of the complex plane (unrestricted; strip scans
// clamp to 0 <= sigma <= 1 themselves).
struct strip_point {
    double sigma = 0.0;
    double t = 0.0;

    cxdbl value() const { return {sigma, t}; }
};

enum class w_kind { regular, zero, pole };

// W(s) as components plus modulus and classification. At a zero u = v =
// modulus = 0; at a pole modulus = +infinity, u = v = 0 and kind is
// authoritative.
struct w_value {
    double u = 0.0;
    double v = 0.0;
    double modulus = 0.0;
    w_kind kind = w_kind::regular;

    cxdbl value() const { return {u, v}; }
};

// Lattice classification: zero iff s = -2n (n >= 0), pole iff s = 2n+1
// (n >= 0), both within 1e-12 of the exact lattice.
w_kind classify(strip_point s);

// Product form 2^s pi^(s-1) sin(pi s/2) Gamma(1-s). Near positive integers
// the sin * Gamma pair is rewritten as pi / (2 Gamma(s) cos(pi s/2)) to
// dodge the 0 * inf degeneracy of the factors.
w_value w_product(strip_point s);

// Gamma-ratio form, evaluated through log Gamma differences.
w_value w_gamma_ratio(strip_point s);

// |W(s)| through log space: exp((sigma-1/2) ln pi + Re lnGamma((1-s)/2)
// - Re lnGamma(s/2)). Returns 0 at zeros and +infinity at poles.
double w_abs(strip_point s);

// d|W|/dt = (1/2 - sigma) t |W(s)| sum_{n>=1} 8(n - 3/4) /
//           (|it+2n+sigma-2|^2 |it+2n-sigma-1|^2).
// The sign equals sign((1/2-sigma) t) exactly; zero at sigma = 1/2 or t = 0.
double dw_abs_dt(strip_point s, const series_config& cfg = {});

// G(sigma,t) = 4 ln pi - Psi(s/2) - Psi(s*/2) - Psi((1-s)/2) - Psi((1-s*)/2).
// Mathematically real; the imaginary residue is asserted < 1e-10 (1+|Re|)
// and dropped.
double g_function(strip_point s);

// d|W|/dsigma = |W(s)| G(sigma,t) / 4.
double dw_abs_dsigma(strip_point s);

// d|Gamma(s/2)|/dt     = -t sum_n |Gamma(s/2)|     / |it+2n+sigma-2|^2
// d|Gamma((1-s)/2)|/dt = -t sum_n |Gamma((1-s)/2)| / |it+2n-sigma-1|^2
double d_abs_gamma_half_s_dt(strip_point s, const series_config& cfg = {});
double d_abs_gamma_half_1ms_dt(strip_point s, const series_config& cfg = {});

// Closed form W(2n) = (2 pi)^(2n) / (2 (-1)^n (2n-1)!), n >= 1.
double w_even_integer(int n);

// W(s_+) W(conj s_-) for s_± = 1/2 ± eps + i t; equals 1 identically.
// Throws degenerate_error if either factor is a zero or a pole.
cxdbl reflection_product(double eps, double t);

namespace detail {

// Series kernels behind the derivative formulas, exposed for testing.
// gamma_abs_dt_series(c, t) = sum_{n>=1} 1 / ((2n+c)^2 + t^2), t != 0.
// dwdt_positive_series(sigma, t) = sum_{n>=1} 8(n-3/4) /
//     (((2n+sigma-2)^2+t^2)((2n-sigma-1)^2+t^2)), t != 0.
// Both use direct summation plus a closed-form Euler-Maclaurin tail.
double gamma_abs_dt_series(double c, double t, const series_config& cfg);
double dwdt_positive_series(double sigma, double t, const series_config& cfg);

}  // namespace detail

}  // namespace wmap
