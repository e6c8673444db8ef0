#ifndef CHUI_WEIGHTS_HPP
#define CHUI_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "chui/quadrature.hpp"
#include "chui/special.hpp"

namespace chui {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WeightFamily { PowerAlpha, LogPower, ExpPower, Tabulated };

// A radial weight g on [0,1]. Immutable after construction.
class Weight {
public:
    static Weight power(double alpha) {
        if (!(alpha > 0.0)) throw std::domain_error("Weight::power: alpha must be > 0");
        Weight w;
        w.family_ = WeightFamily::PowerAlpha;
        w.param_ = alpha;
        w.kappa_ = alpha + 1.0;  // exact: (int_0^1 t^alpha dt)^{-1}
        w.finish();
        return w;
    }

    // g(t) = log^{-q}(2/t); the kernel integral diverges for q <= 1.
    static Weight log_power(double q) {
        if (!(q > 1.0)) throw std::domain_error("Weight::log_power: q must be > 1");
        Weight w;
        w.family_ = WeightFamily::LogPower;
        w.param_ = q;
        w.kappa_ = w.compute_kappa();
        w.finish();
        return w;
    }

    // g(t) = exp(-t^{-q})
    static Weight exp_power(double q) {
        if (!(q > 0.0)) throw std::domain_error("Weight::exp_power: q must be > 0");
        Weight w;
        w.family_ = WeightFamily::ExpPower;
        w.param_ = q;
        w.kappa_ = w.compute_kappa();
        w.finish();
        return w;
    }

    // Piecewise-linear interpolation of (t_i, g_i) samples.
    static Weight tabulated(std::vector<double> ts, std::vector<double> gs) {
        if (ts.size() != gs.size() || ts.size() < 2)
            throw std::domain_error("Weight::tabulated: need >= 2 samples");
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            if (!(ts[i] < ts[i + 1])) throw std::domain_error("Weight::tabulated: t grid must increase");
        if (ts.front() != 0.0 || ts.back() != 1.0)
            throw std::domain_error("Weight::tabulated: grid must span [0,1]");
        for (double v : gs)
            if (v < 0.0) throw std::domain_error("Weight::tabulated: g must be >= 0");
        Weight w;
        w.family_ = WeightFamily::Tabulated;
        w.ts_ = std::move(ts);
        w.gs_ = std::move(gs);
        w.kappa_ = w.compute_kappa();
        w.finish();
        return w;
    }

    // g_delta(t) = min(delta, t); piecewise-linear, so tabulation is exact.
    static Weight min_ramp(double delta) {
        if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("Weight::min_ramp: delta in (0,1)");
        return tabulated({0.0, delta, 1.0}, {0.0, delta, delta});
    }

    double operator()(double t) const {
        switch (family_) {
            case WeightFamily::PowerAlpha:
                return std::pow(t, param_);
            case WeightFamily::LogPower:
                return t <= 0.0 ? 0.0 : std::pow(std::log(2.0 / t), -param_);
            case WeightFamily::ExpPower:
                return t <= 0.0 ? 0.0 : std::exp(-std::pow(t, -param_));
            case WeightFamily::Tabulated: {
                if (t <= 0.0) return gs_.front();
                if (t >= 1.0) return gs_.back();
                auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
                std::size_t i = static_cast<std::size_t>(it - ts_.begin()) - 1;
                double u = (t - ts_[i]) / (ts_[i + 1] - ts_[i]);
                return gs_[i] + u * (gs_[i + 1] - gs_[i]);
            }
        }
        return 0.0;
    }

    // g'(t), a.e.; piecewise constant for tabulated weights.
    double derivative(double t) const {
        switch (family_) {
            case WeightFamily::PowerAlpha:
                return t <= 0.0 ? (param_ < 1.0 ? std::numeric_limits<double>::infinity()
                                                : (param_ == 1.0 ? 1.0 : 0.0))
                                : param_ * std::pow(t, param_ - 1.0);
            case WeightFamily::LogPower: {
                if (t <= 0.0) return 0.0;
                double L = std::log(2.0 / t);
                return param_ * std::pow(L, -param_ - 1.0) / t;
            }
            case WeightFamily::ExpPower: {
                if (t <= 0.0) return 0.0;
                return param_ * std::pow(t, -param_ - 1.0) * std::exp(-std::pow(t, -param_));
            }
            case WeightFamily::Tabulated: {
                double tc = std::clamp(t, 0.0, 1.0);
                auto it = std::upper_bound(ts_.begin(), ts_.end(), tc);
                std::size_t i = std::min(static_cast<std::size_t>(it - ts_.begin()),
                                         ts_.size() - 1) - 1;
                return (gs_[i + 1] - gs_[i]) / (ts_[i + 1] - ts_[i]);
            }
        }
        return 0.0;
    }

    WeightFamily family() const { return family_; }
    double param() const { return param_; }
    double kappa() const { return kappa_; }
    bool is_concave_nondecreasing() const { return concave_nondecreasing_; }

    // Kinks of g in the t variable (used as quadrature breakpoints).
    const std::vector<double>& kinks() const { return ts_; }

    std::string describe() const {
        switch (family_) {
            case WeightFamily::PowerAlpha: return "alpha:" + std::to_string(param_);
            case WeightFamily::LogPower: return "logpow:" + std::to_string(param_);
            case WeightFamily::ExpPower: return "exppow:" + std::to_string(param_);
            case WeightFamily::Tabulated: return "table[" + std::to_string(ts_.size()) + "]";
        }
        return "?";
    }

private:
    Weight() = default;

    double compute_kappa() const {
        quad::Options opt;
        opt.rel_tol = 1e-12;
        opt.breakpoints = ts_;
        auto tail = quad::graded_breakpoints(0.0, 0.25, 1e-12);
        opt.breakpoints.insert(opt.breakpoints.end(), tail.begin(), tail.end());
        double I = quad::integrate([this](double t) { return (*this)(t); }, 0.0, 1.0, opt).value;
        if (!(I > 0.0)) throw std::domain_error("Weight: g integrates to 0");
        return 1.0 / I;
    }

    void finish() { concave_nondecreasing_ = scan_concave_nondecreasing(); }

    bool scan_concave_nondecreasing() const {
        if (family_ == WeightFamily::PowerAlpha) return param_ <= 1.0;
        if (family_ == WeightFamily::Tabulated) {
            if (gs_.front() > 1e-14) return false;
            double prev_slope = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i + 1 < ts_.size(); ++i) {
                double s = (gs_[i + 1] - gs_[i]) / (ts_[i + 1] - ts_[i]);
                if (s < -1e-12 || s > prev_slope + 1e-12) return false;
                prev_slope = s;
            }
            return true;
        }
        // sampled check for the analytic families
        const int n = 4096;
        if ((*this)(1e-12) > 1e-10) return false;
        double prev = (*this)(0.0), prev_slope = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= n; ++i) {
            double t = static_cast<double>(i) / n;
            double v = (*this)(t);
            double s = (v - prev) * n;
            if (v < prev - 1e-13 || s > prev_slope * (1.0 + 1e-9) + 1e-13) return false;
            prev = v;
            prev_slope = s;
        }
        return true;
    }

    WeightFamily family_ = WeightFamily::PowerAlpha;
    double param_ = 1.0;
    std::vector<double> ts_, gs_;
    double kappa_ = 2.0;
    bool concave_nondecreasing_ = true;
};

// int_0^{1/2} g(s)/s ds < infinity  (membership condition for single kernels).
// Analytic answers for the built-in families; dyadic-shell decay test otherwise.
inline bool check_kernel_integrability(const Weight& g) {
    switch (g.family()) {
        case WeightFamily::PowerAlpha: return g.param() > 0.0;
        case WeightFamily::LogPower: return g.param() > 1.0;
        case WeightFamily::ExpPower: return true;
        case WeightFamily::Tabulated: {
            // shells [2^{-m-1}, 2^{-m}]: integral converges iff shell sums decay summably;
            // for piecewise-linear g that means g(0) = 0.
            double prev = std::numeric_limits<double>::infinity();
            double total = 0.0;
            for (int m = 1; m <= 40; ++m) {
                double hi = std::pow(2.0, -m), lo = hi / 2.0;
                double shell = quad::integrate([&](double s) { return g(s) / s; }, lo, hi).value;
                total += shell;
                if (m > 20 && shell > 0.9 * prev && shell > 1e-15 * (1.0 + total)) return false;
                prev = shell;
            }
            return true;
        }
    }
    return false;
}

// phi_g(0) = int_0^1 g(s)/s ds; throws DivergenceError when (the kernel
// integrability condition) fails.
inline double kernel_integral(const Weight& g) {
    if (!check_kernel_integrability(g))
        throw DivergenceError("kernel integral diverges: single Cauchy kernel not in the space");
    if (g.family() == WeightFamily::PowerAlpha) return 1.0 / g.param();
    if (g.family() == WeightFamily::LogPower) {
        // int_0^1 ds/(s log^q(2/s)) = log^{1-q}(2) / (q-1); the numeric tail
        // at 0 decays only like 1/log, so the closed form is mandatory here.
        const double q = g.param();
        return std::pow(std::log(2.0), 1.0 - q) / (q - 1.0);
    }
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.breakpoints = quad::graded_breakpoints(0.0, 0.5, 1e-13);
    for (double k : g.kinks()) opt.breakpoints.push_back(k);
    return quad::integrate([&](double s) { return g(s) / s; }, 0.0, 1.0, opt).value;
}

// int_0^{u0} g(s)/s ds, with closed forms where the numeric tail at 0 is slow.
inline double kernel_integral_partial(const Weight& g, double u0) {
    if (!check_kernel_integrability(g))
        throw DivergenceError("kernel integral diverges");
    switch (g.family()) {
        case WeightFamily::PowerAlpha:
            return std::pow(u0, g.param()) / g.param();
        case WeightFamily::LogPower:
            return std::pow(std::log(2.0 / u0), 1.0 - g.param()) / (g.param() - 1.0);
        default: {
            quad::Options opt;
            opt.rel_tol = 1e-12;
            opt.breakpoints = quad::graded_breakpoints(0.0, u0 / 2.0, 1e-13 * u0);
            for (double k : g.kinks())
                if (k > 0.0 && k < u0) opt.breakpoints.push_back(k);
            double bulk = quad::integrate([&](double s) { return g(s) / s; },
                                          0.0, u0, opt).value;
            return bulk;  // remaining sliver below 1e-13*u0 is O(slope * sliver)
        }
    }
}

// c_{g,k} = int_0^1 t^k g(1-t) dt
inline double moment_coefficient(const Weight& g, long k) {
    if (k < 0) throw std::domain_error("moment_coefficient: k >= 0");
    if (g.family() == WeightFamily::PowerAlpha)
        return special::beta_fn(static_cast<double>(k) + 1.0, g.param() + 1.0);
    quad::Options opt;
    opt.rel_tol = 1e-10;
    double scale = 1.0 / (static_cast<double>(k) + 1.0);
    opt.breakpoints = quad::graded_breakpoints(1.0, 0.5, std::min(1e-8, 0.05 * scale));
    for (double t : g.kinks()) opt.breakpoints.push_back(1.0 - t);
    quad::Result r = quad::integrate([&](double t) {
        return std::pow(t, static_cast<double>(k)) * g(1.0 - t); }, 0.0, 1.0, opt);
    if (!r.converged)
        throw quad::QuadratureError("moment_coefficient: quadrature did not converge", r.error);
    return r.value;
}

// Precomputed moments c_{g,0..K} with a certified bound on the discarded
// positive tail sum_{k>K} c_{g,k} = int_0^1 t^{K+1} g(1-t)/(1-t) dt.
class MomentCoefficients {
public:
    Weight g;
    std::vector<double> values;
    long truncation_K = 0;
    double tail_bound = 0.0;

    static MomentCoefficients compute(const Weight& g, long K) {
        MomentCoefficients mc{g};
        mc.truncation_K = K;
        mc.values.resize(static_cast<std::size_t>(K) + 1);
        if (g.family() == WeightFamily::PowerAlpha) {
            const double a = g.param();
            double c = 1.0 / (a + 1.0);
            for (long k = 0; k <= K; ++k) {
                mc.values[static_cast<std::size_t>(k)] = c;
                c *= (static_cast<double>(k) + 1.0) / (static_cast<double>(k) + 2.0 + a);
            }
        } else {
            batch_moments(g, mc.values);
        }
        mc.tail_bound = tail_sum(g, K);
        return mc;
    }

    // sum_{k>K} c_{g,k}, evaluated as int_0^1 t^{K+1} g(1-t)/(1-t) dt.
    static double tail_sum(const Weight& g, long K) {
        if (!check_kernel_integrability(g)) return std::numeric_limits<double>::infinity();
        if (g.family() == WeightFamily::PowerAlpha)
            return special::beta_fn(static_cast<double>(K) + 2.0, g.param());
        const double h = 1e-10;  // boundary sliver handled by a family bound below
        quad::Options opt;
        opt.rel_tol = 1e-8;
        double scale = 1.0 / (static_cast<double>(K) + 2.0);
        opt.breakpoints = quad::graded_breakpoints(1.0, 0.5, std::min(h, 0.02 * scale));
        double bulk = quad::integrate([&](double t) {
            return std::exp((static_cast<double>(K) + 1.0) * std::log(t)) * g(1.0 - t) / (1.0 - t);
        }, 0.0, 1.0 - h, opt).value;
        // bound int_{1-h}^1 t^{K+1} g(1-t)/(1-t) dt <= int_0^h g(u)/u du
        double sliver = 0.0;
        switch (g.family()) {
            case WeightFamily::LogPower:
                sliver = std::pow(std::log(2.0 / h), 1.0 - g.param()) / (g.param() - 1.0);
                break;
            case WeightFamily::ExpPower:
                sliver = g(h);  // g superlinear at 0, so g(u)/u <= g(h)/h on (0,h]
                break;
            default:
                sliver = g.derivative(h / 2.0) * h;  // piecewise-linear through 0
                break;
        }
        return bulk + sliver;
    }

private:
    explicit MomentCoefficients(const Weight& w) : g(w) {}

    // All moments at once on a mesh graded toward t=1 (16-pt Gauss per shell).
    static void batch_moments(const Weight& g, std::vector<double>& out) {
        static constexpr std::array<double, 8> xs = {
            0.0950125098376374401853193, 0.2816035507792589132304605,
            0.4580167776572273863424194, 0.6178762444026437484466718,
            0.7554044083550030338951012, 0.8656312023878317438804679,
            0.9445750230732325760779884, 0.9894009349916499325961542};
        static constexpr std::array<double, 8> ws = {
            0.1894506104550684962853967, 0.1826034150449235888667637,
            0.1691565193950025381893121, 0.1495959888165767320815017,
            0.1246289712555338720524763, 0.0951585116824927848099251,
            0.0622535239386478928628438, 0.0271524594117540948517806};
        std::fill(out.begin(), out.end(), 0.0);
        std::vector<std::pair<double, double>> panels;
        panels.emplace_back(0.0, 0.5);
        double h = 0.5;
        while (h > 1e-11) {
            panels.emplace_back(1.0 - h, 1.0 - h / 2.0);
            h /= 2.0;
        }
        panels.emplace_back(1.0 - h, 1.0);
        for (auto [a, b] : panels) {
            const double c = 0.5 * (a + b), r = 0.5 * (b - a);
            for (int i = 0; i < 16; ++i) {
                const double t = i < 8 ? c - r * xs[static_cast<std::size_t>(i)]
                                       : c + r * xs[static_cast<std::size_t>(i - 8)];
                const double w = r * ws[static_cast<std::size_t>(i % 8)] * g(1.0 - t);
                if (w == 0.0) continue;
                double p = w;
                for (double& v : out) {
                    v += p;
                    p *= t;
                    if (p < 1e-320) break;
                }
            }
        }
    }
};

// Truncated cosine series sum_{k<=K} c_{g,k} cos((k+1)t), summed with a
// rotation recurrence; resynced periodically to curb drift.
inline double phi_series(const MomentCoefficients& mc, double t) {
    t = std::remainder(t, two_pi);
    const std::complex<double> rot(std::cos(t), std::sin(t));
    std::complex<double> e = rot;
    double s = 0.0;
    const std::size_t n = mc.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        s += mc.values[k] * e.real();
        e *= rot;
        if ((k & 0xFFFF) == 0xFFFF)
            e = std::polar(1.0, t * static_cast<double>(k + 2));
    }
    return s;
}

// Dirichlet-test bound on the series truncation error, valid for t away from 0.
inline double phi_series_tail(const MomentCoefficients& mc, double t) {
    double st = std::abs(std::sin(0.5 * std::remainder(t, two_pi)));
    if (st < 1e-12) return mc.tail_bound;
    return mc.values.back() / st;
}

namespace detail {

inline quad::Options phi_quad_options(const Weight& g, double peak_scale) {
    quad::Options opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-13;
    opt.breakpoints = quad::graded_breakpoints(1.0, 0.5, std::min(1e-12, 0.01 * peak_scale));
    for (double t : g.kinks())
        if (t > 0.0 && t < 1.0) opt.breakpoints.push_back(1.0 - t);
    return opt;
}

}  // namespace detail

// phi_g(t) = int_0^1 (cos t - s) / (1 + s^2 - 2 s cos t) g(1-s) ds  for t in (0,2pi),
// with phi_g(0) = int_0^1 g(s)/s ds (finite iff the kernel is integrable).
inline double phi(const Weight& g, double t) {
    t = std::abs(std::remainder(t, two_pi));  // even and 2pi-periodic
    if (t < 1e-9) return kernel_integral(g);
    const double ct = std::cos(t);
    auto opt = detail::phi_quad_options(g, 2.0 * std::abs(std::sin(0.5 * t)));
    return quad::integrate([&](double s) {
        const double u = 1.0 - s;
        if (u <= 0.0) return 0.0;
        const double denom = 1.0 + s * s - 2.0 * s * ct;
        return (ct - s) / denom * g(u);
    }, 0.0, 1.0, opt).value;
}

// phi_g'(t) = -int_0^1 s sin t / (1 + s^2 - 2 s cos t) g'(1-s) ds, odd in t.
inline double phi_prime(const Weight& g, double t) {
    double tr = std::remainder(t, two_pi);
    if (std::abs(tr) < 1e-12) return 0.0;
    const double ct = std::cos(tr), st = std::sin(tr);
    auto opt = detail::phi_quad_options(g, 2.0 * std::abs(std::sin(0.5 * tr)));
    return -quad::integrate([&](double s) {
        const double u = 1.0 - s;
        if (u <= 0.0) return 0.0;
        const double denom = 1.0 + s * s - 2.0 * s * ct;
        return s * st / denom * g.derivative(u);
    }, 0.0, 1.0, opt).value;
}

// phi_g''(t) = int_0^1 s (2s - (1+s^2) cos t) / (1 + s^2 - 2 s cos t)^2 g'(1-s) ds.
inline double phi_second(const Weight& g, double t) {
    t = std::abs(std::remainder(t, two_pi));
    if (t <= 0.0 || t >= two_pi) throw std::domain_error("phi_second: t in (0,2pi)");
    const double ct = std::cos(t);
    auto opt = detail::phi_quad_options(g, 2.0 * std::abs(std::sin(0.5 * t)));
    return quad::integrate([&](double s) {
        const double u = 1.0 - s;
        if (u <= 0.0) return 0.0;
        const double denom = 1.0 + s * s - 2.0 * s * ct;
        return s * (2.0 * s - (1.0 + s * s) * ct) / (denom * denom) * g.derivative(u);
    }, 0.0, 1.0, opt).value;
}

struct ConvexityReport {
    double min_value = 0.0;
    double argmin = 0.0;
    bool all_positive = false;
};

// Scan phi_g'' over a uniform grid of (0, 2pi).
inline ConvexityReport check_strict_convexity(const Weight& g, std::size_t grid_size) {
    if (grid_size < 100) throw std::domain_error("check_strict_convexity: grid_size >= 100");
    ConvexityReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= grid_size; ++i) {
        // evenness: phi''(t) = phi''(2pi - t), so (0, pi] covers the full grid
        double t = two_pi * static_cast<double>(i) / (2.0 * static_cast<double>(grid_size + 1));
        if (t > std::numbers::pi) break;
        double v = phi_second(g, t);
        if (v < rep.min_value) {
            rep.min_value = v;
            rep.argmin = t;
        }
    }
    rep.all_positive = rep.min_value > 0.0;
    return rep;
}

// Piecewise-Chebyshev tables of phi and phi' on (0, pi], dyadically refined
// toward 0. Evaluation is ~100x cheaper than the adaptive integrals, which
// matters inside the optimizer's inner loop.
class PhiInterpolant {
public:
    explicit PhiInterpolant(const Weight& g, int levels = 42, int degree = 24)
        : g_(g), levels_(levels), degree_(degree) {
        phi0_ = kernel_integral(g);
        coef_phi_.resize(static_cast<std::size_t>(levels_));
        coef_dphi_.resize(static_cast<std::size_t>(levels_));
        for (int m = 0; m < levels_; ++m) {
            const double b = std::numbers::pi * std::pow(2.0, -m);
            const double a = 0.5 * b;
            coef_phi_[static_cast<std::size_t>(m)] =
                cheb_fit([&](double t) { return phi(g_, t); }, a, b);
            coef_dphi_[static_cast<std::size_t>(m)] =
                cheb_fit([&](double t) { return phi_prime(g_, t); }, a, b);
        }
        t_min_ = std::numbers::pi * std::pow(2.0, -levels_);
    }

    double phi0() const { return phi0_; }

    double eval_phi(double t) const {
        t = std::abs(std::remainder(t, two_pi));
        if (t > std::numbers::pi) t = two_pi - t;
        if (t < t_min_) return phi0_;  // phi continuous at 0 under (g1)
        return eval(coef_phi_, t);
    }

    // odd in t
    double eval_phi_prime(double t) const {
        double tr = std::remainder(t, two_pi);
        double sign = tr < 0.0 ? -1.0 : 1.0;
        tr = std::abs(tr);
        if (tr > std::numbers::pi) {
            tr = two_pi - tr;
            sign = -sign;
        }
        if (tr < t_min_) return 0.0;
        return sign * eval(coef_dphi_, tr);
    }

private:
    struct Panel {
        double a, b;
        std::vector<double> c;
    };

    template <class F>
    Panel cheb_fit(const F& f, double a, double b) const {
        const int n = degree_ + 1;
        std::vector<double> fv(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            double x = std::cos(std::numbers::pi * (j + 0.5) / n);
            fv[static_cast<std::size_t>(j)] = f(0.5 * (a + b) + 0.5 * (b - a) * x);
        }
        Panel p{a, b, std::vector<double>(static_cast<std::size_t>(n))};
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int j = 0; j < n; ++j)
                s += fv[static_cast<std::size_t>(j)] *
                     std::cos(std::numbers::pi * k * (j + 0.5) / n);
            p.c[static_cast<std::size_t>(k)] = 2.0 * s / n;
        }
        p.c[0] *= 0.5;
        return p;
    }

    double eval(const std::vector<Panel>& panels, double t) const {
        int m = std::clamp(static_cast<int>(std::floor(
                    std::log2(std::numbers::pi / t))), 0, levels_ - 1);
        const Panel& p = panels[static_cast<std::size_t>(m)];
        if (t < p.a) ++m;  // rounding at panel edges
        const Panel& q = panels[static_cast<std::size_t>(std::min(m, levels_ - 1))];
        const double x = std::clamp(2.0 * (t - q.a) / (q.b - q.a) - 1.0, -1.0, 1.0);
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t k = q.c.size(); k-- > 1;) {
            double b0 = 2.0 * x * b1 - b2 + q.c[k];
            b2 = b1;
            b1 = b0;
        }
        return x * b1 - b2 + q.c[0];
    }

    Weight g_;
    int levels_, degree_;
    double phi0_ = 0.0, t_min_ = 0.0;
    std::vector<Panel> coef_phi_, coef_dphi_;
};

}  // namespace chui

#endif
