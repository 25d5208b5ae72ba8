#pragma once

// Complex special functions on the full plane: Gamma, log-Gamma, digamma,
// polygamma (through Hurwitz zeta) and the Riemann zeta function. Everything
// is binary64; target kernel accuracy is ~1e-13 relative away from poles,
// which is what the downstream W-map formulas are budgeted against.
//
// All functions are pure and thread-safe. Conjugate symmetry
// f(conj z) = conj f(z) is enforced structurally: arguments in the lower
// half-plane are folded to the upper half-plane and the result conjugated,
// so the symmetry holds bit-exactly.

#include <complex>

#include "wmap/series.hpp"

namespace wmap::specfun {

// Gamma(z) by the Lanczos approximation (g = 7, 9 coefficients), reflection
// formula for Re(z) < 1/2. Throws pole_error at z = 0, -1, -2, ...
cxdbl complex_gamma(cxdbl z);

// Principal branch of log Gamma: analytic continuation from the positive
// real axis, continuous on the plane cut along (-inf, 0]. Not log(Gamma(z))
// modulo 2*pi*i. Throws pole_error at nonpositive integers.
cxdbl log_gamma(cxdbl z);

// Psi(z). Shift-up recurrence into |z| >= 12, Re(z) >= 1, then the
// asymptotic log series. Throws pole_error at nonpositive integers.
cxdbl digamma(cxdbl z);

// Hurwitz zeta(s, a) by Euler-Maclaurin. Requires Re(a) > 0 (domain_error
// otherwise); the shift recurrence zeta(s,a) = zeta(s,a+m) + sum (a+k)^-s
// is applied internally until Re(a+m) >= 10. Throws pole_error at s = 1.
// Relative accuracy is ~1e-13 for real offsets (any Re(s) >= 2,
// |Im s| <= 100) and for real s with complex a (the polygamma route).
// When |Im s| and |arg a| are large together, the direct terms swing like
// e^(Im s * arg(a+k)) and cancellation inflates rounding accordingly.
cxdbl hurwitz_zeta(cxdbl s, cxdbl a);

// Psi(n, z) = (-1)^(n+1) n! zeta(n+1, z), n >= 1; n = 0 falls through to
// digamma. Arguments left of Re(z) = 1/2 are shifted by the polygamma
// recurrence before Hurwitz evaluation, so any z off the pole set works.
cxdbl polygamma(int n, cxdbl z);

// zeta(s) by Borwein's alternating-series (eta) method for Re(s) > 0,
// and through the functional equation zeta(s) = W(s) zeta(1-s) for
// Re(s) <= 0. Throws pole_error at s = 1.
cxdbl riemann_zeta(cxdbl s);

// The two continuation routes, exposed separately so they can be
// cross-checked against each other on the critical strip.
cxdbl zeta_alternating(cxdbl s);  // requires Re(s) > 0, s != 1
cxdbl zeta_functional(cxdbl s);   // requires Re(s) < 1; evaluates W(s) zeta(1-s)

}  // namespace wmap::specfun
