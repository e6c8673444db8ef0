#ifndef CHUI_NORMS_HPP
#define CHUI_NORMS_HPP

#include <cmath>
#include <span>
#include <vector>

#include "chui/fractions.hpp"
#include "chui/weights.hpp"

namespace chui {

enum class NormMethod { GramSeries, TaylorSum, Quadrature2D, Radial1D };

struct NormResult {
    double value_sq = 0.0;
    NormMethod method = NormMethod::GramSeries;
    double error_estimate = 0.0;
};

// ||f||^2 = kappa [ N phi(0) + sum_{j != k} phi(theta_j - theta_k) ].
// An optional interpolant replaces the adaptive-integral phi evaluations.
inline NormResult norm_sq_gram(const PoleConfiguration& c, const Weight& g,
                               const PhiInterpolant* interp = nullptr) {
    if (!check_kernel_integrability(g))
        throw DivergenceError("norm_sq_gram: kernels are not in the space for this weight");
    const std::size_t n = c.size();
    const double phi0 = interp ? interp->phi0() : kernel_integral(g);
    double s = static_cast<double>(n) * phi0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double d = c[j] - c[k];
            s += 2.0 * (interp ? interp->eval_phi(d) : phi(g, d));
        }
    return {g.kappa() * s, NormMethod::GramSeries, 1e-9 * g.kappa() * std::abs(s)};
}

namespace detail {

// Exact angular mean of |f(re^{i th})|^2 at u = 1 - r^2, via the geometric
// series of each kernel pair; used only inside the boundary layer u < u0.
// Off-diagonal part of the angular mean; bounded as u -> 0, unlike the N/u
// diagonal term, so it can be integrated numerically against any weight.
inline double angular_mean_cross(const PoleConfiguration& c, double u) {
    const std::size_t n = c.size();
    const double r2 = 1.0 - u;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const complexd e = std::polar(1.0, c[j] - c[k]);
            s += 2.0 * (e / (1.0 - r2 * e)).real();
        }
    return s;
}

inline double angular_mean_exact(const PoleConfiguration& c, double u) {
    return static_cast<double>(c.size()) / u + angular_mean_cross(c, u);
}

struct Quad2DPass {
    double value = 0.0;
};

inline double quad2d_bulk(const SimplestFraction& f, const Weight& g, double u0,
                          std::size_t angular_base, int gl_order) {
    // Gauss nodes/weights, order 8 and 16 (half tables; symmetric)
    static constexpr std::array<double, 4> x8 = {0.1834346424956498, 0.5255324099163290,
                                                 0.7966664774136267, 0.9602898564975363};
    static constexpr std::array<double, 4> w8 = {0.3626837833783620, 0.3137066458778873,
                                                 0.2223810344533745, 0.1012285362903763};
    static constexpr std::array<double, 8> x16 = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878317, 0.9445750230732326, 0.9894009349916499};
    static constexpr std::array<double, 8> w16 = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

    // geometric shells in u = 1-r^2 from 1 down to u0
    std::vector<std::pair<double, double>> shells;
    double hi = 1.0;
    while (hi > 2.0 * u0) {
        shells.emplace_back(hi / 2.0, hi);
        hi /= 2.0;
    }
    shells.emplace_back(u0, hi);

    double total = 0.0;
    for (auto [a, b] : shells) {
        const double cm = 0.5 * (a + b), rad = 0.5 * (b - a);
        const int half = gl_order / 2;
        for (int i = 0; i < gl_order; ++i) {
            const double xg = gl_order == 8 ? x8[static_cast<std::size_t>(i % half)]
                                            : x16[static_cast<std::size_t>(i % half)];
            const double wg = gl_order == 8 ? w8[static_cast<std::size_t>(i % half)]
                                            : w16[static_cast<std::size_t>(i % half)];
            const double u = i < half ? cm - rad * xg : cm + rad * xg;
            const double r = std::sqrt(1.0 - u);
            const std::size_t nang = std::max({angular_base, 8 * f.size(),
                static_cast<std::size_t>(std::ceil(80.0 / u))});
            const double mean = quad::periodic_mean(
                [&](double s) { return std::norm(f(std::polar(r, two_pi * s))); }, nang);
            total += rad * wg * mean * g(u);
        }
    }
    return total;
}

}  // namespace detail

// 2-D polar quadrature of kappa int |f|^2 g(1-|z|^2) dm2: trapezoid in the
// angle, Gauss nodes on shells graded toward the boundary. The last layer
// u = 1-|z|^2 < u0, where the trapezoid would need O(1/u) nodes, uses the
// per-pair exact angular means integrated radially.
inline NormResult norm_sq_quadrature(const PoleConfiguration& c, const Weight& g,
                                     double u0 = 4e-3, std::size_t angular_base = 256) {
    SimplestFraction f{c};
    const double coarse = detail::quad2d_bulk(f, g, u0, angular_base / 2, 8);
    const double fine = detail::quad2d_bulk(f, g, u0, angular_base, 16);

    quad::Options opt;
    opt.rel_tol = 1e-10;
    opt.breakpoints = quad::graded_breakpoints(0.0, u0 / 2.0, 1e-12);
    for (double t : g.kinks())
        if (t > 0.0 && t < u0) opt.breakpoints.push_back(t);
    // diagonal N int_0^{u0} g(u)/u du analytically (its tail at 0 can decay
    // arbitrarily slowly), the bounded cross terms by adaptive quadrature
    const double layer =
        static_cast<double>(c.size()) * kernel_integral_partial(g, u0) +
        quad::integrate(
            [&](double u) { return detail::angular_mean_cross(c, u) * g(u); }, 0.0, u0, opt)
            .value;

    const double value = g.kappa() * (fine + layer);
    const double err = g.kappa() * std::abs(fine - coarse) + 1e-10 * std::abs(value);
    return {value, NormMethod::Quadrature2D, err};
}

// ||sum a_s z^s||^2 = kappa sum |a_s|^2 c_{g,s}; tail_amp bounds |a_s| past
// the truncation and feeds the certified tail estimate.
inline NormResult norm_sq_taylor(std::span<const complexd> a, const Weight& g,
                                 double tail_amp = 0.0) {
    const long K = static_cast<long>(a.size()) - 1;
    MomentCoefficients mc = MomentCoefficients::compute(g, std::max<long>(K, 0));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i]) * mc.values[i];
    const double tail = tail_amp * tail_amp * g.kappa() * mc.tail_bound;
    return {g.kappa() * s, NormMethod::TaylorSum, tail};
}

inline NormResult norm_sq_taylor(const std::vector<complexd>& a, const Weight& g,
                                 double tail_amp = 0.0) {
    return norm_sq_taylor(std::span<const complexd>(a.data(), a.size()), g, tail_amp);
}

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ||Psi_N||^2 = 2 kappa N^2 int_0^1 r^{2N-1} g(1-r^2) / (1 - r^{2N}) dr,
// evaluated in u = 1 - r^2 with log1p/expm1 for the boundary cancellation.
inline NormResult psi_norm_sq(std::size_t N, const Weight& g) {
    if (N == 0) throw std::domain_error("psi_norm_sq: N >= 1");
    if (N > 1000000) throw CapacityError("psi_norm_sq: N exceeds radial mesh cap");
    const double n = static_cast<double>(N);
    auto integrand = [&](double u) {
        const double lg = std::log1p(-u);  // log(1-u)
        const double num = std::exp((n - 1.0) * lg) * g(u);
        const double den = -std::expm1(n * lg);  // 1 - (1-u)^N
        return num / den;
    };
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.breakpoints = quad::graded_breakpoints(0.0, 0.5, std::min(1e-12, 0.01 / n));
    opt.breakpoints.push_back(std::min(0.5, 1.0 / n));
    for (double t : g.kinks())
        if (t > 0.0 && t < 1.0) opt.breakpoints.push_back(t);
    opt.max_intervals = 8000;
    quad::Result r = quad::integrate(integrand, 0.0, 1.0, opt);
    const double value = g.kappa() * n * n * r.value;
    return {value, NormMethod::Radial1D, g.kappa() * n * n * r.error};
}

}  // namespace chui

#endif
