#include "wmap/wmap.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wmap/specfun.hpp"

namespace wmap {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double ln_pi = 1.144729885849400174143427351353058712;
constexpr double lattice_tol = 1e-12;

}  // namespace

w_kind classify(strip_point s) {
    if (std::abs(s.t) > lattice_tol) return w_kind::regular;
    const double r = std::round(s.sigma);
    if (std::abs(s.sigma - r) > lattice_tol) return w_kind::regular;
    const long n = static_cast<long>(r);
    if (n <= 0 && n % 2 == 0) return w_kind::zero;   // s = -2n
    if (n >= 1 && n % 2 != 0) return w_kind::pole;   // s = 2n+1
    return w_kind::regular;
}

namespace {

w_value zero_value() { return {0.0, 0.0, 0.0, w_kind::zero}; }

w_value pole_value() {
    return {0.0, 0.0, std::numeric_limits<double>::infinity(), w_kind::pole};
}

w_value regular_value(cxdbl w) {
    return {w.real(), w.imag(), std::abs(w), w_kind::regular};
}

bool near_positive_integer(strip_point s) {
    return std::abs(s.t) <= 1e-6 && s.sigma >= 0.5 &&
           std::abs(s.sigma - std::round(s.sigma)) <= 1e-6;
}

}  // namespace

w_value w_product(strip_point s) {
    switch (classify(s)) {
        case w_kind::zero: return zero_value();
        case w_kind::pole: return pole_value();
        case w_kind::regular: break;
    }
    const cxdbl z = s.value();
    if (near_positive_integer(s)) {
        // sin(pi s/2) Gamma(1-s) = pi / (2 Gamma(s) cos(pi s/2)), regular at
        // even integers where the factors degenerate to 0 * inf.
        const cxdbl w = std::exp((z - 1.0) * ln_pi + (z - 1.0) * std::log(2.0)) * pi /
                        (specfun::complex_gamma(z) * std::cos(0.5 * pi * z));
        return regular_value(w);
    }
    const cxdbl w = std::exp(z * std::log(2.0) + (z - 1.0) * ln_pi) *
                    std::sin(0.5 * pi * z) * specfun::complex_gamma(1.0 - z);
    return regular_value(w);
}

w_value w_gamma_ratio(strip_point s) {
    switch (classify(s)) {
        case w_kind::zero: return zero_value();
        case w_kind::pole: return pole_value();
        case w_kind::regular: break;
    }
    const cxdbl z = s.value();
    const cxdbl log_w = (z - 0.5) * ln_pi + specfun::log_gamma(0.5 * (1.0 - z)) -
                        specfun::log_gamma(0.5 * z);
    return regular_value(std::exp(log_w));
}

double w_abs(strip_point s) {
    switch (classify(s)) {
        case w_kind::zero: return 0.0;
        case w_kind::pole: return std::numeric_limits<double>::infinity();
        case w_kind::regular: break;
    }
    const cxdbl z = s.value();
    const double log_abs = (s.sigma - 0.5) * ln_pi +
                           specfun::log_gamma(0.5 * (1.0 - z)).real() -
                           specfun::log_gamma(0.5 * z).real();
    return std::exp(log_abs);
}

namespace detail {

namespace {

// Quadratic A(x) = (2x + c)^2 + t^2 with derivatives A' = 4(2x+c), A'' = 8.
struct quad {
    double c;
    double t2;
    double a(double x) const { const double u = 2.0 * x + c; return u * u + t2; }
    double ap(double x) const { return 4.0 * (2.0 * x + c); }
};

long direct_terms(double scale, const series_config& cfg, const char* who) {
    const long m = std::max<long>(48, static_cast<long>(std::ceil(2.4 * (scale + 8.0))));
    if (m > cfg.max_terms)
        throw truncation_error(std::string(who) + ": series needs more than max_terms terms");
    return m;
}

}  // namespace

double gamma_abs_dt_series(double c, double t, const series_config& cfg) {
    cfg.validate();
    const quad A{c, t * t};
    const double ta = std::abs(t);
    const long m = direct_terms(ta + std::abs(c), cfg, "gamma_abs_dt_series");
    double sum = 0.0;
    for (long n = m; n >= 1; --n) sum += 1.0 / A.a(static_cast<double>(n));

    // Euler-Maclaurin tail from X = m+1: integral + f/2 - f'/12 + f'''/720.
    const double x = static_cast<double>(m + 1);
    const double av = A.a(x), apv = A.ap(x);
    const double lp = apv / av;                                      // (ln A)'
    const double lpp = (8.0 * av - apv * apv) / (av * av);           // (ln A)''
    const double lppp = (2.0 * apv * apv * apv - 24.0 * apv * av) / (av * av * av);
    const double f = 1.0 / av;
    const double fp = -lp * f;
    const double fppp = (3.0 * lp * lpp - lppp - lp * lp * lp) * f;
    const double integral = 0.5 / ta * std::atan(ta / (2.0 * x + c));
    return sum + integral + 0.5 * f - fp / 12.0 + fppp / 720.0;
}

double dwdt_positive_series(double sigma, double t, const series_config& cfg) {
    cfg.validate();
    const double t2 = t * t;
    const quad A{sigma - 2.0, t2};
    const quad B{-sigma - 1.0, t2};
    const long m =
        direct_terms(std::abs(t) + std::abs(sigma), cfg, "dwdt_positive_series");
    double sum = 0.0;
    for (long n = m; n >= 1; --n) {
        const double x = static_cast<double>(n);
        sum += 8.0 * (x - 0.75) / (A.a(x) * B.a(x));
    }

    const double x = static_cast<double>(m + 1);
    const double av = A.a(x), bv = B.a(x);
    const double apv = A.ap(x), bpv = B.ap(x);
    // h = u P with u = 8(x - 3/4), P = 1/(AB); derivatives via r = (ln AB)'.
    const double r = apv / av + bpv / bv;
    const double rp = (8.0 * av - apv * apv) / (av * av) + (8.0 * bv - bpv * bpv) / (bv * bv);
    const double rpp = (2.0 * apv * apv * apv - 24.0 * apv * av) / (av * av * av) +
                       (2.0 * bpv * bpv * bpv - 24.0 * bpv * bv) / (bv * bv * bv);
    const double p0 = 1.0 / (av * bv);
    const double p1 = -r * p0;                          // P'
    const double p2 = (r * r - rp) * p0;                // P''
    const double p3 = (3.0 * r * rp - rpp - r * r * r) * p0;  // P'''
    const double u = 8.0 * (x - 0.75);
    const double h = u * p0;
    const double hp = 8.0 * p0 + u * p1;
    const double hppp = 24.0 * p2 + u * p3;

    // integral of h: partial fractions give (2/(1-2sigma)) (1/A - 1/B), whose
    // primitive is an arctan difference; folded into one atan so the
    // sigma -> 1/2 cancellation never happens.
    const double ua = 2.0 * x + A.c, ub = 2.0 * x + B.c;
    const double eps = 1.0 - 2.0 * sigma;
    const double ta = std::abs(t);
    const double q = ta * eps / (ua * ub + t2);
    const double integral =
        (eps == 0.0) ? 1.0 / (ua * ub + t2) : std::atan(q) / (ta * eps);

    return sum + integral + 0.5 * h - hp / 12.0 + hppp / 720.0;
}

}  // namespace detail

double dw_abs_dt(strip_point s, const series_config& cfg) {
    if (classify(s) != w_kind::regular)
        throw domain_error("dw_abs_dt requires a regular point of W");
    if (s.sigma == 0.5 || s.t == 0.0) return 0.0;
    const double series = detail::dwdt_positive_series(s.sigma, s.t, cfg);
    return (0.5 - s.sigma) * s.t * w_abs(s) * series;
}

double g_function(strip_point s) {
    const cxdbl z = s.value();
    const cxdbl zc = std::conj(z);
    const cxdbl sum4 = specfun::digamma(0.5 * z) + specfun::digamma(0.5 * zc) +
                       specfun::digamma(0.5 * (1.0 - z)) +
                       specfun::digamma(0.5 * (1.0 - zc));
    const cxdbl g = 4.0 * ln_pi - sum4;
    if (!(std::abs(g.imag()) < 1e-10 * (1.0 + std::abs(g.real()))))
        throw std::logic_error("g_function: imaginary residue exceeds tolerance");
    return g.real();
}

double dw_abs_dsigma(strip_point s) {
    const double g = g_function(s);
    return 0.25 * w_abs(s) * g;
}

double d_abs_gamma_half_s_dt(strip_point s, const series_config& cfg) {
    if (s.t == 0.0) {
        // Gamma(sigma/2) pole at sigma = -2n means the derivative target
        // itself is singular; everything else gives 0 by odd symmetry.
        if (classify(s) == w_kind::zero)
            throw pole_error("d|Gamma(s/2)|/dt: Gamma pole at s/2");
        return 0.0;
    }
    const double abs_gamma = std::exp(specfun::log_gamma(0.5 * s.value()).real());
    return -s.t * abs_gamma * detail::gamma_abs_dt_series(s.sigma - 2.0, s.t, cfg);
}

double d_abs_gamma_half_1ms_dt(strip_point s, const series_config& cfg) {
    if (s.t == 0.0) {
        if (classify(s) == w_kind::pole)
            throw pole_error("d|Gamma((1-s)/2)|/dt: Gamma pole at (1-s)/2");
        return 0.0;
    }
    const double abs_gamma =
        std::exp(specfun::log_gamma(0.5 * (1.0 - s.value())).real());
    return -s.t * abs_gamma * detail::gamma_abs_dt_series(-s.sigma - 1.0, s.t, cfg);
}

double w_even_integer(int n) {
    if (n < 1) throw domain_error("w_even_integer requires n >= 1");
    // (2 pi)^(2n) / (2 (-1)^n (2n-1)!) in log space to stay clear of overflow.
    const double log_mag = 2.0 * n * std::log(2.0 * pi) -
                           std::lgamma(2.0 * static_cast<double>(n));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * 0.5 * std::exp(log_mag);
}

cxdbl reflection_product(double eps, double t) {
    const strip_point s_plus{0.5 + eps, t};
    const strip_point s_minus_conj{0.5 - eps, -t};
    const w_value a = w_gamma_ratio(s_plus);
    const w_value b = w_gamma_ratio(s_minus_conj);
    if (a.kind != w_kind::regular || b.kind != w_kind::regular)
        throw degenerate_error("reflection_product: zero/pole pair at eps = " +
                               std::to_string(eps) + ", t = " + std::to_string(t));
    return a.value() * b.value();
}

}  // namespace wmap
