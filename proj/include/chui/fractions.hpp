#ifndef CHUI_FRACTIONS_HPP
#define CHUI_FRACTIONS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chui/weights.hpp"

namespace chui {

using complexd = std::complex<double>;

struct PoleEvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

// N pole angles on the unit circle, radians in [0, 2pi).
class PoleConfiguration {
public:
    explicit PoleConfiguration(std::vector<double> angles) : angles_(std::move(angles)) {
        if (angles_.empty()) throw std::domain_error("PoleConfiguration: N >= 1");
        for (double& a : angles_) a = wrap_angle(a);
    }

    static PoleConfiguration equispaced(std::size_t n) {
        std::vector<double> a(n);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = two_pi * static_cast<double>(k) / static_cast<double>(n);
        return PoleConfiguration(std::move(a));
    }

    std::size_t size() const { return angles_.size(); }
    const std::vector<double>& angles() const { return angles_; }
    double operator[](std::size_t i) const { return angles_[i]; }

    PoleConfiguration rotated(double theta) const {
        std::vector<double> a = angles_;
        for (double& x : a) x = wrap_angle(x + theta);
        return PoleConfiguration(std::move(a));
    }

    // Sorted, then rotated so the first angle is 0.
    PoleConfiguration canonical() const {
        std::vector<double> a = angles_;
        std::sort(a.begin(), a.end());
        const double base = a.front();
        for (double& x : a) x = wrap_angle(x - base);
        std::sort(a.begin(), a.end());
        return PoleConfiguration(std::move(a));
    }

private:
    std::vector<double> angles_;
};

// Distance between configurations modulo rotation and cyclic relabeling:
// min over alignments of the max angular deviation.
inline double gauge_distance(const PoleConfiguration& x, const PoleConfiguration& y) {
    if (x.size() != y.size())
        throw std::domain_error("gauge_distance: configurations differ in size");
    const std::size_t n = x.size();
    std::vector<double> a = x.angles(), b = y.angles();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t off = 0; off < n; ++off) {
        // deviations on a common branch, then the optimal rotation is the midrange
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        const double d0 = std::remainder(a[off] - b[0], two_pi);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            double d = d0 + std::remainder(a[(i + off) % n] - b[i] - d0, two_pi);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            if (hi - lo >= 2.0 * best) { ok = false; break; }
        }
        if (ok) best = std::min(best, 0.5 * (hi - lo));
    }
    return best;
}

// Sum of Cauchy kernels with unit masses at e^{i theta_k}.
class SimplestFraction {
public:
    explicit SimplestFraction(PoleConfiguration poles) : poles_(std::move(poles)) {
        pole_points_.reserve(poles_.size());
        for (double t : poles_.angles()) pole_points_.push_back(std::polar(1.0, t));
    }

    const PoleConfiguration& poles() const { return poles_; }
    std::size_t size() const { return poles_.size(); }

    complexd operator()(complexd z) const {
        complexd s = 0.0;
        for (const complexd& a : pole_points_) {
            const complexd d = z - a;
            if (std::abs(d) < 1e-14)
                throw PoleEvaluationError("SimplestFraction: z coincides with a pole");
            s += 1.0 / d;
        }
        return s;
    }

    // a_s = -sum_k exp(-i (s+1) theta_k), s = 0..M
    std::vector<complexd> taylor_coefficients(std::size_t M) const {
        std::vector<complexd> a(M + 1, complexd(0.0, 0.0));
        for (double t : poles_.angles()) {
            const complexd w = std::polar(1.0, -t);
            complexd p = w;
            for (std::size_t s = 0; s <= M; ++s) {
                a[s] -= p;
                p *= w;
            }
        }
        return a;
    }

private:
    PoleConfiguration poles_;
    std::vector<complexd> pole_points_;
};

// Psi_N(z) = N z^{N-1} / (z^N - 1), the equispaced-pole fraction.
inline complexd int_pow(complexd z, std::size_t k) {
    complexd p = 1.0;
    while (k) {
        if (k & 1) p *= z;
        z *= z;
        k >>= 1;
    }
    return p;
}

inline complexd psi(std::size_t N, complexd z) {
    if (N == 0) throw std::domain_error("psi: N >= 1");
    const complexd zn1 = int_pow(z, N - 1);
    const complexd denom = zn1 * z - 1.0;
    if (std::abs(denom) < 1e-14 * static_cast<double>(N))
        throw PoleEvaluationError("psi: z is (numerically) an N-th root of unity");
    return static_cast<double>(N) * zn1 / denom;
}

}  // namespace chui

#endif
