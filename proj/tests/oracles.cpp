#include "oracles.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace oracle {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double euler_gamma = 0.5772156649015328606;

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..50, generated from
// B_{2n} = (-1)^(n+1) 2 (2n)! zeta(2n) / (2 pi)^(2n).
const std::vector<double>& stirling_coeffs() {
    static const std::vector<double> coeffs = [] {
        std::vector<double> out;
        out.reserve(50);
        double fact = 2.0;  // (2n)!
        double twopi_pow = 4.0 * pi * pi;
        for (int n = 1; n <= 50; ++n) {
            // zeta(2n) = sum k^(-2n) + Euler-Maclaurin tail; the tail matters
            // for small n where the sum converges like K^(1-2n).
            const double s = 2.0 * n;
            double zeta_2n = 0.0;
            const int K = 256;
            for (int k = K; k >= 1; --k)
                zeta_2n += std::pow(static_cast<double>(k), -s);
            const double X = K + 1.0;
            const double fX = std::pow(X, -s);
            zeta_2n += fX * X / (s - 1.0) + 0.5 * fX + s * fX / X / 12.0 -
                       s * (s + 1.0) * (s + 2.0) * fX / (X * X * X) / 720.0;
            const double sign = (n % 2 == 1) ? 1.0 : -1.0;
            const double b2n = sign * 2.0 * fact * zeta_2n / twopi_pow;
            out.push_back(b2n / (2.0 * n * (2.0 * n - 1.0)));
            fact *= (2.0 * n + 1.0) * (2.0 * n + 2.0);
            twopi_pow *= 4.0 * pi * pi;
        }
        return out;
    }();
    return coeffs;
}

}  // namespace

cxdbl log_gamma_stirling(cxdbl z) {
    if (z.imag() < 0.0) return std::conj(log_gamma_stirling(std::conj(z)));
    cxdbl shift{0.0, 0.0};
    while (z.real() < 32.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cxdbl tail{0.0, 0.0};
    cxdbl zpow = 1.0 / z;
    const cxdbl z2 = zpow * zpow;
    for (double c : stirling_coeffs()) {
        const cxdbl term = c * zpow;
        tail += term;
        if (std::abs(term) < 1e-20) break;
        zpow *= z2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + tail - shift;
}

cxdbl gamma_stirling(cxdbl z) { return std::exp(log_gamma_stirling(z)); }

cxdbl digamma_series(cxdbl z, long n0) {
    const cxdbl zm1 = z - 1.0;
    std::array<cxdbl, 4> partial{};
    cxdbl sum{0.0, 0.0};
    long n = 0;
    for (int level = 0; level < 4; ++level) {
        const long stop = n0 << level;
        while (n < stop) {
            ++n;
            const double dn = static_cast<double>(n);
            sum += zm1 / (dn * (dn + zm1));
        }
        partial[static_cast<std::size_t>(level)] = -euler_gamma + sum;
    }
    // Richardson on S(N 2^i): tail = a1/N + a2/N^2 + ...
    std::array<cxdbl, 4> r = partial;
    for (int j = 1; j < 4; ++j) {
        const double w = std::pow(2.0, j);
        for (int i = 3; i >= j; --i)
            r[static_cast<std::size_t>(i)] =
                (w * r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i - 1)]) /
                (w - 1.0);
    }
    return r[3];
}

cxdbl hurwitz_direct(cxdbl s, cxdbl a, long k_terms) {
    cxdbl sum{0.0, 0.0};
    for (long k = k_terms - 1; k >= 0; --k)
        sum += std::exp(-s * std::log(a + static_cast<double>(k)));
    const cxdbl q = a + static_cast<double>(k_terms);
    const cxdbl qms = std::exp(-s * std::log(q));
    return sum + qms * q / (s - 1.0) + 0.5 * qms;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
