#ifndef CHUI_MOMENTS_HPP
#define CHUI_MOMENTS_HPP

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "chui/fractions.hpp"
#include "chui/quadrature.hpp"

namespace chui {

// b_k = e^{i angle_k}, the unimodular families of the power-sum bounds.
struct UnimodularFamily {
    std::vector<double> angles;

    std::size_t size() const { return angles.size(); }

    static UnimodularFamily random(std::size_t N, std::mt19937_64& rng) {
        std::uniform_real_distribution<double> U(0.0, two_pi);
        UnimodularFamily f;
        f.angles.resize(N);
        for (double& a : f.angles) a = U(rng);
        return f;
    }

    static UnimodularFamily roots_of_unity(std::size_t N) {
        UnimodularFamily f;
        f.angles = PoleConfiguration::equispaced(N).angles();
        return f;
    }
};

// S_j = sum_k b_k^j for j = 1..J (index j-1), by iterated multiplication.
inline std::vector<complexd> power_sums(const UnimodularFamily& b, std::size_t J) {
    if (J < 1) throw std::domain_error("power_sums: J >= 1");
    std::vector<complexd> S(J, complexd(0.0, 0.0));
    for (double a : b.angles) {
        const complexd w = std::polar(1.0, a);
        complexd p = w;
        for (std::size_t j = 0; j < J; ++j) {
            S[j] += p;
            p *= w;
        }
    }
    return S;
}

// F_{M+1}(x) = (1/(M+1)) (sin((M+1)x/2) / sin(x/2))^2, with the removable
// singularity at x = 0 (mod 2 pi) evaluated by its Taylor limit.
inline double fejer_kernel(std::size_t Mplus1, double x) {
    if (Mplus1 < 1) throw std::domain_error("fejer_kernel: M+1 >= 1");
    const double j = static_cast<double>(Mplus1);
    x = std::remainder(x, two_pi);
    const double s = std::sin(0.5 * x);
    if (std::abs(0.5 * j * x) < 1e-4)
        return j * (1.0 - (j * j - 1.0) * x * x / 12.0);
    return (1.0 / j) * (std::sin(0.5 * j * x) / s) * (std::sin(0.5 * j * x) / s);
}

// Cosine-sum form sum_{|i| <= M} (1 - |i|/(M+1)) e^{i i x}; test oracle.
inline double fejer_cosine_sum(std::size_t Mplus1, double x) {
    const double j = static_cast<double>(Mplus1);
    double s = 1.0;
    for (std::size_t i = 1; i < Mplus1; ++i)
        s += 2.0 * (1.0 - static_cast<double>(i) / j) * std::cos(static_cast<double>(i) * x);
    return s;
}

struct FejerBound {
    double weighted_sum = 0.0;  // sum_{j <= M} (1 - j/(M+1)) |S_j|^2
    double paper_floor = 0.0;   // N (M - N + 1) / 2
    bool pass = false;          // asserted only when M >= N
};

inline FejerBound fejer_weighted_bound(const UnimodularFamily& b, std::size_t M) {
    if (M < 1) throw std::domain_error("fejer_weighted_bound: M >= 1");
    const auto S = power_sums(b, M);
    FejerBound out;
    for (std::size_t j = 1; j <= M; ++j)
        out.weighted_sum +=
            (1.0 - static_cast<double>(j) / static_cast<double>(M + 1)) * std::norm(S[j - 1]);
    const double N = static_cast<double>(b.size());
    out.paper_floor = N * (static_cast<double>(M) - N + 1.0) / 2.0;
    out.pass = M < b.size() || out.weighted_sum >= out.paper_floor - 1e-9;
    return out;
}

struct MomentBound {
    double sum = 0.0;    // sum_{j <= 2N} |S_j|^2
    double floor = 0.0;  // N^2 / 2
    bool pass = false;
};

inline MomentBound moment_lower_bound_check(const UnimodularFamily& b) {
    const std::size_t N = b.size();
    const auto S = power_sums(b, 2 * N);
    MomentBound out;
    for (const complexd& s : S) out.sum += std::norm(s);
    out.floor = 0.5 * static_cast<double>(N) * static_cast<double>(N);
    out.pass = out.sum >= out.floor - 1e-9;
    return out;
}

struct AnnulusEnergy {
    double value = 0.0;         // int over 1/N < 1-|z|^2 < 2/N of |h|^2 dm2
    double taylor_proxy = 0.0;  // band moments of t^s against |S_{s+1}|^2
    double ratio_to_N = 0.0;    // value / N
};

// Energy of the simplest fraction on the critical annulus, computed twice:
// polar quadrature of |h|^2 and the coefficient-side band sum.
inline AnnulusEnergy annulus_energy(const PoleConfiguration& c) {
    const std::size_t N = c.size();
    if (N < 2) throw std::domain_error("annulus_energy: N >= 2");
    const double n = static_cast<double>(N);
    SimplestFraction h{c};

    // polar quadrature in u = 1 - |z|^2 over [1/N, 2/N]: Gauss nodes radially,
    // trapezoid in the angle
    static constexpr std::array<double, 8> x16 = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878317, 0.9445750230732326, 0.9894009349916499};
    static constexpr std::array<double, 8> w16 = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    AnnulusEnergy out;
    const int panels = 8;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = 1.0 / n + static_cast<double>(pnl) / (n * panels);
        const double bb = a + 1.0 / (n * panels);
        const double cm = 0.5 * (a + bb), rad = 0.5 * (bb - a);
        for (int i = 0; i < 16; ++i) {
            const double xg = x16[static_cast<std::size_t>(i % 8)];
            const double wg = w16[static_cast<std::size_t>(i % 8)];
            const double u = i < 8 ? cm - rad * xg : cm + rad * xg;
            const double r = std::sqrt(1.0 - u);
            // aliasing decays like e^{-nang u / 2} with u ~ 1/N on this band
            const std::size_t nang = std::max<std::size_t>(256, 72 * N);
            const double mean = quad::periodic_mean(
                [&](double s) { return std::norm(h(std::polar(r, two_pi * s))); }, nang);
            out.value += rad * wg * mean;
        }
    }

    // coefficient side: int_{t1}^{t2} t^s dt against |S_{s+1}|^2 with
    // t = |z|^2, truncated once t2^{s+1} is negligible
    const double t1 = 1.0 - 2.0 / n, t2 = 1.0 - 1.0 / n;
    const std::size_t smax = static_cast<std::size_t>(std::ceil(45.0 * n)) + 8;
    UnimodularFamily fam{c.angles()};
    const auto S = power_sums(fam, smax + 1);
    double p1 = t1, p2 = t2;
    for (std::size_t s = 0; s <= smax; ++s) {
        // p1 = t1^{s+1}, p2 = t2^{s+1}
        out.taylor_proxy += (p2 - p1) / static_cast<double>(s + 1) * std::norm(S[s]);
        p1 *= t1;
        p2 *= t2;
    }
    out.ratio_to_N = out.value / n;
    return out;
}

}  // namespace chui

#endif
