#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace wmap {

using cxdbl = std::complex<double>;

// Euler-Mascheroni constant, correctly rounded to binary64.
inline constexpr double euler_gamma = 0.5772156649015328606;

// Truncation policy shared by the infinite-series evaluators.
// rel_tol is the target relative error of a truncated sum; max_terms is a
// hard cap after which truncation_error is raised. euler_gamma rides along
// for series that need it and is pinned to the true constant.
struct series_config {
    double rel_tol = 1e-12;
    long max_terms = 1'000'000;
    double euler_gamma = wmap::euler_gamma;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol <= 1e-9))
            throw std::invalid_argument("series_config: rel_tol must be in (0, 1e-9]");
        if (max_terms < 1000)
            throw std::invalid_argument("series_config: max_terms must be >= 1000");
        if (!(std::abs(euler_gamma - 0.5772156649015329) <= 1e-15))
            throw std::invalid_argument("series_config: euler_gamma is off");
    }
};

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

struct no_bracket_error : std::runtime_error {
    explicit no_bracket_error(const std::string& what) : std::runtime_error(what) {}
};

struct no_root_error : std::runtime_error {
    explicit no_root_error(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wmap
