#ifndef CHUI_ASYMPTOTICS_HPP
#define CHUI_ASYMPTOTICS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chui/norms.hpp"
#include "chui/parallel.hpp"
#include "chui/special.hpp"
#include "chui/weights.hpp"

namespace chui {

// Gamma(alpha+2) zeta(alpha+1), the limit of N^{alpha-1} ||Psi_N||^2_alpha.
inline double limit_constant(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("limit_constant: alpha > 0");
    return special::gamma_fn(alpha + 2.0) * special::riemann_zeta(alpha + 1.0);
}

struct RateReport {
    std::vector<std::size_t> Ns;
    std::vector<double> values;
    std::vector<double> reference;  // one entry per N
    std::vector<double> ratios;     // values / reference
    bool monotone_increasing = false;
    double band_ratio = 0.0;  // max/min of values, the comparability band
};

namespace detail {

inline void finish_report(RateReport& rep) {
    rep.ratios.resize(rep.values.size());
    for (std::size_t i = 0; i < rep.values.size(); ++i)
        rep.ratios[i] = rep.values[i] / rep.reference[i];
    rep.monotone_increasing = true;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        if (i > 0 && rep.values[i] <= rep.values[i - 1]) rep.monotone_increasing = false;
        lo = std::min(lo, rep.values[i]);
        hi = std::max(hi, rep.values[i]);
    }
    rep.band_ratio = hi / lo;
}

}  // namespace detail

// N^{alpha-1} ||Psi_N||^2_alpha along Ns, with ratios to the Gamma-zeta limit.
inline RateReport scaled_norm_sequence(double alpha, const std::vector<std::size_t>& Ns) {
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1])
            throw std::domain_error("scaled_norm_sequence: Ns strictly increasing");
    const Weight g = Weight::power(alpha);
    const double limit = limit_constant(alpha);
    RateReport rep;
    rep.Ns = Ns;
    rep.values.resize(Ns.size());
    rep.reference.assign(Ns.size(), limit);
    parallel_for(Ns.size(), [&](std::size_t i) {
        rep.values[i] = std::pow(static_cast<double>(Ns[i]), alpha - 1.0) *
                        psi_norm_sq(Ns[i], g).value_sq;
    });
    detail::finish_report(rep);
    return rep;
}

struct PropositionBounds {
    double head = 0.0;     // N int_0^{1/N} g(t)/t dt
    double tail = 0.0;     // N^2 int_{1/N}^1 (1-t)^N g(t) dt
    double bracket = 0.0;  // head + tail
    double norm_sq = 0.0;
    double ratio = 0.0;  // norm_sq / bracket; comparable means a stable band
};

inline PropositionBounds proposition_bounds(const Weight& g, std::size_t N) {
    if (N < 1) throw std::domain_error("proposition_bounds: N >= 1");
    const double n = static_cast<double>(N);
    PropositionBounds b;
    b.head = n * kernel_integral_partial(g, 1.0 / n);
    quad::Options opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 0.0;
    opt.max_intervals = 8000;
    for (double m = 2.0; m / n < 1.0; m *= 2.0) opt.breakpoints.push_back(m / n);
    for (double t : g.kinks())
        if (t > 1.0 / n && t < 1.0) opt.breakpoints.push_back(t);
    b.tail = n * n *
             quad::integrate([&](double t) { return std::exp(n * std::log1p(-t)) * g(t); },
                             1.0 / n, 1.0, opt)
                 .value;
    b.bracket = b.head + b.tail;
    b.norm_sq = psi_norm_sq(N, g).value_sq;
    b.ratio = b.norm_sq / b.bracket;
    return b;
}

enum class RateCase { A, B, C, D };

// Normalized ||Psi_N|| sequences for the four rate regimes. The reference
// column carries the regime's comparison scale; "comparable" claims surface
// as the band_ratio of the values.
inline RateReport corollary_rates(RateCase rate_case, const Weight& g,
                                  const std::vector<std::size_t>& Ns) {
    if (Ns.empty()) throw std::domain_error("corollary_rates: Ns nonempty");
    switch (rate_case) {
        case RateCase::A:
            break;  // any admissible weight
        case RateCase::B: {
            // needs g(t) = o(t): built-in examples are t^q with q > 1
            const bool ok = (g.family() == WeightFamily::PowerAlpha && g.param() > 1.0) ||
                            g.family() == WeightFamily::ExpPower;
            if (!ok) throw std::domain_error("corollary_rates: case B needs g(t) = o(t)");
            break;
        }
        case RateCase::C:
            if (g.family() != WeightFamily::LogPower)
                throw std::domain_error("corollary_rates: case C needs a log-power weight");
            break;
        case RateCase::D:
            if (g.family() != WeightFamily::ExpPower)
                throw std::domain_error("corollary_rates: case D needs an exp-power weight");
            break;
    }
    RateReport rep;
    rep.Ns = Ns;
    rep.values.resize(Ns.size());
    rep.reference.assign(Ns.size(), 1.0);
    parallel_for(Ns.size(), [&](std::size_t i) {
        const double n = static_cast<double>(Ns[i]);
        const double nsq = psi_norm_sq(Ns[i], g).value_sq;
        switch (rate_case) {
            case RateCase::A:
                rep.values[i] = std::sqrt(nsq / n);  // ||Psi_N|| / sqrt(N) = o(1)
                break;
            case RateCase::B:
                rep.values[i] = nsq;  // ||Psi_N||^2 -> 0
                break;
            case RateCase::C:
                rep.values[i] =
                    nsq * std::pow(std::log(n), g.param() - 1.0) / n;  // ~ constant band
                break;
            case RateCase::D: {
                const double q = g.param();
                rep.values[i] =
                    -0.5 * std::log(nsq) / std::pow(n, q / (q + 1.0));  // ~ constant band
                break;
            }
        }
    });
    detail::finish_report(rep);
    return rep;
}

}  // namespace chui

#endif
