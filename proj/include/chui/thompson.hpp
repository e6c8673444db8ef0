#ifndef CHUI_THOMPSON_HPP
#define CHUI_THOMPSON_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chui/fractions.hpp"
#include "chui/parallel.hpp"

namespace chui {

struct MonotonicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RefinementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial representative of a bounded analytic function on the disk,
// with a certified sup-norm bound from dense boundary sampling.
class BoundedAnalyticFunction {
public:
    static BoundedAnalyticFunction from_taylor(std::vector<complexd> coeffs) {
        BoundedAnalyticFunction f;
        f.taylor_ = std::move(coeffs);
        while (f.taylor_.size() > 1 && std::abs(f.taylor_.back()) == 0.0) f.taylor_.pop_back();
        if (f.taylor_.empty()) f.taylor_.push_back(complexd(0.0, 0.0));
        // boundary samples; the 1e-3 safety factor covers the sampling gap
        const std::size_t n = std::max<std::size_t>(4096, 16 * f.taylor_.size());
        double m = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            m = std::max(m, std::abs(f(std::polar(1.0, two_pi * static_cast<double>(k) /
                                                            static_cast<double>(n)))));
        f.sup_bound_M_ = m * (1.0 + 1e-3);
        return f;
    }

    static BoundedAnalyticFunction zero() { return from_taylor({complexd(0.0, 0.0)}); }
    static BoundedAnalyticFunction constant(double c) { return from_taylor({complexd(c, 0.0)}); }

    complexd operator()(complexd z) const {
        complexd v = 0.0;
        for (std::size_t d = taylor_.size(); d-- > 0;) v = v * z + taylor_[d];
        return v;
    }

    // z -> f((1-delta) z); shrinks the domain so boundary values are tame.
    BoundedAnalyticFunction dilate(double delta) const {
        if (!(delta > 0.0 && delta < 1.0))
            throw std::domain_error("BoundedAnalyticFunction::dilate: delta in (0,1)");
        std::vector<complexd> c = taylor_;
        double p = 1.0;
        for (std::size_t d = 1; d < c.size(); ++d) {
            p *= 1.0 - delta;
            c[d] *= p;
        }
        return from_taylor(std::move(c));
    }

    const std::vector<complexd>& taylor() const { return taylor_; }
    double sup_bound() const { return sup_bound_M_; }
    bool is_zero() const {
        for (const complexd& a : taylor_)
            if (std::abs(a) != 0.0) return false;
        return true;
    }

private:
    BoundedAnalyticFunction() = default;
    std::vector<complexd> taylor_;
    double sup_bound_M_ = 0.0;
};

// W_N(t) = N t - 2 int_0^t Re(e^{2 pi i u} f(e^{2 pi i u})) du, the pole
// placement function. The integral is a finite sum of closed-form
// antiderivatives of Re(a_d e^{2 pi i (d+1) u}), so W_N(1) = N exactly.
inline double weight_function_W(const BoundedAnalyticFunction& f, std::size_t N, double t) {
    const double M = f.sup_bound();
    if (!(static_cast<double>(N) > 2.0 * M))
        throw MonotonicityError("weight_function_W: need N > 2 sup|f| for monotonicity");
    double s = static_cast<double>(N) * t;
    const auto& a = f.taylor();
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double w = two_pi * static_cast<double>(d + 1);
        // int_0^t Re(a e^{i w u}) du = Re(a (e^{i w t} - 1) / (i w))
        const complexd e = std::polar(1.0, w * t) - complexd(1.0, 0.0);
        s -= 2.0 * (a[d] * e / complexd(0.0, w)).real();
    }
    return s;
}

inline double weight_function_W_prime(const BoundedAnalyticFunction& f, std::size_t N,
                                      double t) {
    const complexd z = std::polar(1.0, two_pi * t);
    return static_cast<double>(N) - 2.0 * (z * f(z)).real();
}

// Poles x_{N,k} = W_N^{-1}(k), k = 0..N-1, by bisection then Newton polish.
inline PoleConfiguration construct_poles(const BoundedAnalyticFunction& f, std::size_t N) {
    const double M = f.sup_bound();
    if (!(static_cast<double>(N) > 2.0 * M))
        throw MonotonicityError("construct_poles: need N > 2 sup|f|");
    std::vector<double> xs(N, 0.0);
    parallel_for(N, [&](std::size_t k) {
        if (k == 0) return;  // W_N(0) = 0 exactly
        const double target = static_cast<double>(k);
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            (weight_function_W(f, N, mid) < target ? lo : hi) = mid;
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 5; ++it) {
            const double r = weight_function_W(f, N, x) - target;
            if (std::abs(r) < 1e-12) break;
            x -= r / weight_function_W_prime(f, N, x);
            x = std::clamp(x, lo - 1e-9, hi + 1e-9);
        }
        if (std::abs(weight_function_W(f, N, x) - target) > 1e-10)
            throw std::runtime_error("construct_poles: root polish failed");
        xs[k] = x;
    });
    std::vector<double> angles(N);
    for (std::size_t k = 0; k < N; ++k) angles[k] = two_pi * xs[k];
    return PoleConfiguration(std::move(angles));
}

inline SimplestFraction thompson_approximant(const BoundedAnalyticFunction& f, std::size_t N) {
    return SimplestFraction{construct_poles(f, N)};
}

struct BoundCheckReport {
    bool pass = false;
    double max_margin = -std::numeric_limits<double>::infinity();  // lhs - rhs, <= 0 passes
    std::size_t samples = 0;
    complexd worst_point;
};

// |h(z)| <= 1/(1-|z|) + C0 M log(e/(1-|z|)) on the sample set.
inline BoundCheckReport check_pointwise_bound(const SimplestFraction& h, double M, double C0,
                                              const std::vector<complexd>& samples) {
    BoundCheckReport rep;
    rep.samples = samples.size();
    for (const complexd& z : samples) {
        const double d = 1.0 - std::abs(z);
        if (!(d > 0.0)) throw std::domain_error("check_pointwise_bound: samples in the open disk");
        const double rhs = 1.0 / d + C0 * M * std::log(std::numbers::e / d);
        const double margin = std::abs(h(z)) - rhs;
        if (margin > rep.max_margin) {
            rep.max_margin = margin;
            rep.worst_point = z;
        }
    }
    rep.pass = rep.max_margin <= 1e-12;
    return rep;
}

// rho(beta) with (x+y)^p <= (1+beta) x^p + rho(beta) y^p for x, y >= 0.
inline double rho(double beta, double p) {
    if (!(beta > 0.0)) throw std::domain_error("rho: beta > 0");
    if (!(p >= 1.0)) throw std::domain_error("rho: p >= 1");
    if (p == 1.0) return 1.0;
    return (1.0 + beta) / std::pow(std::pow(1.0 + beta, 1.0 / (p - 1.0)) - 1.0, p - 1.0);
}

// int_0^1 |h(r e^{2 pi i s})|^p ds by the periodic trapezoid rule, with the
// error estimated by node doubling.
struct CircleMean {
    double value = 0.0;
    double error = 0.0;
};

template <typename H>
double circle_mean_once(const H& h, double r, double p, std::size_t nodes) {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes; ++k)
        s += std::pow(std::abs(h(std::polar(r, two_pi * static_cast<double>(k) /
                                                   static_cast<double>(nodes)))),
                      p);
    return s / static_cast<double>(nodes);
}

template <typename H>
CircleMean circle_mean_p(const H& h, double r, double p, std::size_t nodes) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("circle_mean_p: r in (0,1)");
    nodes = std::max<std::size_t>(nodes, 512);
    double coarse = circle_mean_once(h, r, p, nodes);
    double fine = circle_mean_once(h, r, p, 2 * nodes);
    std::size_t n = 2 * nodes;
    while (std::abs(fine - coarse) > 1e-10 * std::abs(fine) + 1e-13) {
        if (n >= (1u << 22))
            throw RefinementError("circle_mean_p: node budget exhausted (r too close to 1?)");
        coarse = fine;
        n *= 2;
        fine = circle_mean_once(h, r, p, n);
    }
    return {fine, std::abs(fine - coarse)};
}

struct IntegralBoundRow {
    double r = 0.0;
    double lhs = 0.0;      // circle mean of |f - wait: of h_N| at r
    double rhs = 0.0;      // (1+beta) mean of Psi_N + rho C0^p M^p log^p(e/(1-r))
    double margin = 0.0;   // lhs - rhs
    double remark_ratio = 0.0;  // lhs / (N (1-r)^{1-p}), only inside r > 1 - 1/N
};

struct IntegralBoundReport {
    bool pass = false;
    std::vector<IntegralBoundRow> rows;
};

// Circle-mean growth bound for the constructed approximant against the
// equispaced reference plus the calibrated log term.
inline IntegralBoundReport check_integral_bound(const BoundedAnalyticFunction& f, std::size_t N,
                                                double p, double beta, double C0,
                                                const std::vector<double>& radii) {
    SimplestFraction h = thompson_approximant(f, N);
    const double M = f.sup_bound();
    IntegralBoundReport rep;
    rep.pass = true;
    for (double r : radii) {
        const std::size_t nodes = std::max<std::size_t>(
            {512, 16 * N, static_cast<std::size_t>(40.0 / (1.0 - r))});
        IntegralBoundRow row;
        row.r = r;
        row.lhs = circle_mean_p([&](complexd z) { return h(z); }, r, p, nodes).value;
        const double psi_mean =
            circle_mean_p([&](complexd z) { return psi(N, z); }, r, p, nodes).value;
        row.rhs = (1.0 + beta) * psi_mean +
                  rho(beta, p) * std::pow(C0 * M * std::log(std::numbers::e / (1.0 - r)), p);
        row.margin = row.lhs - row.rhs;
        if (r >= 1.0 - 1.0 / static_cast<double>(N) - 1e-12)
            row.remark_ratio =
                row.lhs / (static_cast<double>(N) * std::pow(1.0 - r, 1.0 - p));
        if (row.margin > 1e-9 * std::abs(row.rhs)) rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

inline std::vector<BoundedAnalyticFunction> builtin_corpus() {
    using B = BoundedAnalyticFunction;
    return {B::zero(), B::constant(0.5), B::from_taylor({{0.0, 0.0}, {0.5, 0.0}}),
            B::from_taylor({{1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}}),
            B::from_taylor({{0.0, 0.0}, {0.0, 0.0}, {0.4, 0.0}})};
}

// C0 = 1.1 x the smallest constant that makes both growth bounds hold on the
// calibration grid: the pointwise excess over the pole term, normalized by
// M log(e/(1-|z|)), and the circle-mean excess over (1+beta) times the
// equispaced mean at the standard radii (p = 2, beta = 1).
inline double calibrate_C0(const std::vector<BoundedAnalyticFunction>& corpus,
                           const std::vector<std::size_t>& Ns, std::size_t samples = 10000,
                           std::uint64_t seed = 0) {
    double worst = 0.0;
    const double p = 2.0, beta = 1.0;
    for (const auto& f : corpus) {
        const double M = f.sup_bound();
        if (M <= 0.0) continue;  // the pole term alone covers f = 0
        for (std::size_t N : Ns) {
            SimplestFraction h = thompson_approximant(f, N);
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (N + 1)));
            std::uniform_real_distribution<double> Ur(0.0, 1.0), Ut(0.0, two_pi);
            for (std::size_t i = 0; i < samples; ++i) {
                const double r = 1.0 - std::pow(10.0, -4.0 * Ur(rng));  // graded to the boundary
                const complexd z = std::polar(r, Ut(rng));
                double ah;
                try {
                    ah = std::abs(h(z));
                } catch (const PoleEvaluationError&) {
                    continue;
                }
                const double excess = ah - 1.0 / (1.0 - r);
                if (excess <= 0.0) continue;
                worst = std::max(worst, excess / (M * std::log(std::numbers::e / (1.0 - r))));
            }
            for (double r : {0.5, 0.9, 0.99, 1.0 - 1.0 / static_cast<double>(N)}) {
                const std::size_t nodes = std::max<std::size_t>(
                    {512, 16 * N, static_cast<std::size_t>(40.0 / (1.0 - r))});
                const double lhs =
                    circle_mean_once([&](complexd z) { return h(z); }, r, p, nodes);
                const double psi_mean =
                    circle_mean_once([&](complexd z) { return psi(N, z); }, r, p, nodes);
                const double excess = lhs - (1.0 + beta) * psi_mean;
                if (excess <= 0.0) continue;
                worst = std::max(worst,
                                 std::pow(excess / rho(beta, p), 1.0 / p) /
                                     (M * std::log(std::numbers::e / (1.0 - r))));
            }
        }
    }
    return 1.1 * std::max(worst, 1e-6);
}

}  // namespace chui

#endif
