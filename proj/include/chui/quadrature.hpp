#ifndef CHUI_QUADRATURE_HPP
#define CHUI_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace chui::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;     // estimated absolute error
    bool converged = false;
    std::size_t evals = 0;
};

struct QuadratureError : std::runtime_error {
    double achieved;
    explicit QuadratureError(const std::string& msg, double ach)
        : std::runtime_error(msg), achieved(ach) {}
};

namespace detail {

// 15-point Gauss-Kronrod pair on [-1,1]; nodes are interior, so integrable
// endpoint singularities never get sampled.
inline constexpr std::array<double, 8> gk_nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gk_wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double x = h * gk_nodes[static_cast<std::size_t>(i)];
        const double fv = f(c - x) + f(c + x);
        resk += gk_wk[static_cast<std::size_t>(i)] * fv;
        if (i % 2 == 1) resg += gk_wg[static_cast<std::size_t>(i / 2)] * fv;
    }
    const double fc = f(c);
    resk += gk_wk[7] * fc;
    resg += gk_wg[3] * fc;
    result = resk * h;
    err = std::abs(resk - resg) * std::abs(h);
    // Sharpen the raw Gauss/Kronrod difference the way QUADPACK does.
    if (err > 0.0) err = std::pow(200.0 * err, 1.5) < err ? std::pow(200.0 * err, 1.5) : err;
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace detail

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_intervals = 4000;
    std::vector<double> breakpoints;  // interior split hints
};

// Globally adaptive Gauss-Kronrod integration of f over [a,b].
template <class F>
inline Result integrate(const F& f, double a, double b, const Options& opt = {}) {
    Result out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<detail::Interval> heap;
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : opt.breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double total = 0.0, toterr = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        detail::Interval iv{pts[i], pts[i + 1], 0.0, 0.0};
        detail::gk15(f, iv.a, iv.b, iv.value, iv.error);
        out.evals += 15;
        total += iv.value;
        toterr += iv.error;
        heap.push(iv);
    }

    while (toterr > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           heap.size() < opt.max_intervals) {
        detail::Interval worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.error;
        const double m = 0.5 * (worst.a + worst.b);
        for (auto [lo, hi] : {std::pair{worst.a, m}, std::pair{m, worst.b}}) {
            detail::Interval iv{lo, hi, 0.0, 0.0};
            detail::gk15(f, iv.a, iv.b, iv.value, iv.error);
            out.evals += 15;
            total += iv.value;
            toterr += iv.error;
            heap.push(iv);
        }
        if (worst.b - worst.a < 1e-15 * (b - a)) break;
    }

    out.value = total;
    out.error = toterr;
    out.converged = toterr <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) * 1.0001 ||
                    toterr <= opt.abs_tol;
    return out;
}

template <class F>
inline double integrate_or_throw(const F& f, double a, double b, const Options& opt = {}) {
    Result r = integrate(f, a, b, opt);
    if (!r.converged && r.error > 1e-6 * (std::abs(r.value) + 1.0))
        throw QuadratureError("adaptive quadrature failed to converge", r.error);
    return r.value;
}

// Geometric breakpoints accumulating toward `edge` from distance `span`
// down to `floor`; used for endpoint singularities / boundary layers.
inline std::vector<double> graded_breakpoints(double edge, double span, double floor_dist,
                                              double ratio = 0.5) {
    std::vector<double> pts;
    double d = span;
    while (d > floor_dist) {
        pts.push_back(edge > 0 ? edge - d : edge + d);
        d *= ratio;
    }
    return pts;
}

// Mean of a 1-periodic function via the n-point trapezoid (= midpoint) rule.
template <class F>
inline double periodic_mean(const F& f, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += f((static_cast<double>(k) + 0.5) / static_cast<double>(n));
    return s / static_cast<double>(n);
}

// Composite fixed-grid Simpson rule; independent low-tech oracle for tests.
template <class F>
inline double simpson(const F& f, double a, double b, std::size_t n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) s += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace chui::quad

#endif
