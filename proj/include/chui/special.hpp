#ifndef CHUI_SPECIAL_HPP
#define CHUI_SPECIAL_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chui/quadrature.hpp"

namespace chui::special {

// Riemann zeta for real s > 1 via the alternating (eta) series with
// Cohen-Rodriguez Villegas-Zagier acceleration; ~1.5e-17 relative error
// with n = 40 terms for s >= 1.05.
inline double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: requires s > 1");
    const int n = 48;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, eta = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        eta += c / std::pow(static_cast<double>(k + 1), s);
        b = static_cast<double>((k + n) * (k - n)) * b /
            (static_cast<double>(k) + 0.5) / static_cast<double>(k + 1);
    }
    return (eta / d) / (1.0 - std::pow(2.0, 1.0 - s));
}

inline double gamma_fn(double x) {
    if (x <= 0.0) throw std::domain_error("gamma_fn: requires x > 0");
    return std::exp(std::lgamma(x));
}

// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), computed in log space.
inline double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// Bose integral int_0^inf s^alpha / (e^s - 1) ds, by adaptive quadrature;
// equals Gamma(alpha+1) zeta(alpha+1), used as an independent cross-check.
inline double bose_integral(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("bose_integral: requires alpha > 0");
    quad::Options opt;
    opt.rel_tol = 1e-13;
    // s = x^2 on [0,1] tames the s^{alpha-1} endpoint behavior
    opt.breakpoints = quad::graded_breakpoints(0.0, 0.25, 1e-13);
    const double head = quad::integrate(
        [alpha](double x) {
            if (x < 1e-300) return 0.0;
            return 2.0 * std::pow(x, 2.0 * alpha + 1.0) / std::expm1(x * x);
        },
        0.0, 1.0, opt).value;
    quad::Options opt2;
    opt2.rel_tol = 1e-13;
    opt2.breakpoints = {2.0, 5.0, 10.0, 20.0, 40.0};
    // integrand ~ s^alpha e^{-s}; tail past 80 is < e^{-80}
    const double tail = quad::integrate(
        [alpha](double s) { return std::pow(s, alpha) / std::expm1(s); }, 1.0, 80.0,
        opt2).value;
    return head + tail;
}

}  // namespace chui::special

#endif
