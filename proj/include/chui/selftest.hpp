#ifndef CHUI_SELFTEST_HPP
#define CHUI_SELFTEST_HPP

#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chui/asymptotics.hpp"
#include "chui/experiments.hpp"
#include "chui/moments.hpp"
#include "chui/norms.hpp"
#include "chui/optimize.hpp"
#include "chui/thompson.hpp"
#include "chui/weights.hpp"

namespace chui {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace selftest_detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Checker {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

// 1. scaled equispaced norms approach Gamma(alpha+2) zeta(alpha+1)
inline void limit_constant_criterion(Checker& c) {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto rep = scaled_norm_sequence(alpha, {10, 100, 1000, 10000});
        c.require(rep.monotone_increasing,
                  "alpha=" + fmt(alpha) + ": scaled sequence not monotone increasing");
        const double rel = std::abs(rep.ratios.back() - 1.0);
        c.require(rel < 0.01, "alpha=" + fmt(alpha) +
                                  ": N=1e4 value off the limit by " + fmt(rel));
    }
    const double pi2_3 = std::numbers::pi * std::numbers::pi / 3.0;
    c.require(std::abs(limit_constant(1.0) - pi2_3) < 1e-12,
              "alpha=1 limit constant != pi^2/3");
}

// 2. ||Psi_1e4||_1 sits just under pi/sqrt(3)
inline void pi_sqrt3_criterion(Checker& c) {
    const double v = std::sqrt(psi_norm_sq(10000, Weight::power(1.0)).value_sq);
    c.require(v <= pi_over_sqrt3 && v >= pi_over_sqrt3 - 0.02,
              "||Psi_1e4||_1 = " + fmt(v) + " outside [pi/sqrt3 - 0.02, pi/sqrt3]");
}

// 3. Gram-series vs 2-D quadrature, plus closed-form anchors
inline void engine_agreement_criterion(Checker& c) {
    const std::vector<Weight> ws = {Weight::power(0.5), Weight::power(1.0), Weight::power(2.0),
                                    Weight::log_power(2.0)};
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(0.0, two_pi);
    std::uniform_int_distribution<std::size_t> UN(2, 16);
    for (int trial = 0; trial < 50; ++trial) {
        const Weight& g = ws[static_cast<std::size_t>(trial) % ws.size()];
        std::vector<double> ang(UN(rng));
        for (double& t : ang) t = U(rng);
        const PoleConfiguration conf(ang);
        const double a = norm_sq_gram(conf, g).value_sq;
        const double b = norm_sq_quadrature(conf, g).value_sq;
        const double rel = std::abs(a - b) / std::abs(a);
        if (rel >= 1e-6) {
            c.require(false, "trial " + std::to_string(trial) + " (" + g.describe() +
                                 "): engines differ by " + fmt(rel));
            break;
        }
    }
    const double one_pole = norm_sq_gram(PoleConfiguration({0.0}), Weight::power(1.0)).value_sq;
    c.require(std::abs(one_pole - 2.0) < 1e-8, "||1/(z-1)||^2_1 anchor missed: " + fmt(one_pole));
    const double psi2 = psi_norm_sq(2, Weight::power(1.0)).value_sq;
    c.require(std::abs(psi2 - 8.0 * (1.0 - std::log(2.0))) < 1e-8,
              "||Psi_2||^2_1 anchor missed: " + fmt(psi2));
}

// 4. equispaced poles minimize the norm for concave nondecreasing weights
inline void minimality_criterion(Checker& c) {
    const std::vector<Weight> ws = {Weight::power(0.5), Weight::power(1.0),
                                    Weight::min_ramp(0.3)};
    std::mt19937_64 rng(777);
    std::normal_distribution<double> G(0.0, 1.0);
    for (const Weight& g : ws) {
        for (std::size_t N = 2; N <= 8; ++N) {
            const auto res = minimize_norm(N, g, 20, 0);
            const std::string tag = g.describe() + " N=" + std::to_string(N);
            c.require(res.max_converged_gauge_distance < 1e-3,
                      tag + ": converged start away from equispaced (gauge " +
                          fmt(res.max_converged_gauge_distance) + ")");
            const double ref = psi_norm_sq(N, g).value_sq;
            c.require(std::abs(res.best_norm_sq - ref) < 1e-6,
                      tag + ": objective " + fmt(res.best_norm_sq) + " vs " + fmt(ref));
        }
        // random small perturbations of the equispaced configuration
        const std::size_t N = 5;
        const PhiInterpolant interp(g);
        const double base =
            norm_sq_gram(PoleConfiguration::equispaced(N), g, &interp).value_sq;
        for (int t = 0; t < 100; ++t) {
            std::vector<double> ang = PoleConfiguration::equispaced(N).angles();
            for (double& a : ang) a += 1e-2 * G(rng);
            const double v = norm_sq_gram(PoleConfiguration(ang), g, &interp).value_sq;
            if (v <= base) {
                c.require(false, g.describe() + ": perturbation did not raise the norm");
                break;
            }
        }
    }
}

// 5. kernel convexity holds iff alpha <= 1
inline void convexity_criterion(Checker& c) {
    for (double alpha : {0.25, 0.5, 1.0}) {
        const auto rep = check_strict_convexity(Weight::power(alpha), 10000);
        c.require(rep.all_positive, "alpha=" + fmt(alpha) + ": phi'' not positive on the grid");
    }
    for (double alpha : {1.5, 2.0, 3.0}) {
        const auto rep = check_strict_convexity(Weight::power(alpha), 10000);
        c.require(rep.min_value < 0.0, "alpha=" + fmt(alpha) + ": no negative phi'' found");
    }
}

// 6. power-sum floors over seeded random unimodular families
inline void moment_bound_criterion(Checker& c) {
    std::mt19937_64 rng(2024);
    for (std::size_t N : {2, 4, 8, 16, 32, 64}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto fam = UnimodularFamily::random(N, rng);
            if (!moment_lower_bound_check(fam).pass) {
                c.require(false, "N=" + std::to_string(N) + " trial " +
                                     std::to_string(trial) + ": sum |S_j|^2 < N^2/2");
                break;
            }
            if (!fejer_weighted_bound(fam, 2 * N).pass) {
                c.require(false, "N=" + std::to_string(N) + " trial " +
                                     std::to_string(trial) + ": weighted floor missed");
                break;
            }
        }
    }
    for (std::size_t Mp1 : {2, 5, 17, 101}) {
        for (int i = 0; i < 10000; ++i) {
            const double x = two_pi * (i + 0.5) / 10000.0 - std::numbers::pi;
            if (fejer_kernel(Mp1, x) < 0.0) {
                c.require(false, "Fejer kernel negative at M+1=" + std::to_string(Mp1));
                break;
            }
        }
    }
}

// 7. bracket and normalized rate sequences stay in factor-3 bands
inline void rate_regime_criterion(Checker& c) {
    for (const Weight& g : {Weight::power(1.0), Weight::log_power(2.0)}) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t N : {10, 100, 1000, 10000}) {
            const double r = proposition_bounds(g, N).ratio;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        c.require(hi / lo < 3.0,
                  g.describe() + ": bracket ratio band " + fmt(hi / lo) + " >= 3");
    }
    const auto repC =
        corollary_rates(RateCase::C, Weight::log_power(2.0), {100, 1000, 10000});
    c.require(repC.band_ratio < 3.0, "case C band " + fmt(repC.band_ratio) + " >= 3");
    const auto repD = corollary_rates(RateCase::D, Weight::exp_power(1.0), {50, 200, 1000});
    c.require(repD.band_ratio < 3.0, "case D band " + fmt(repD.band_ratio) + " >= 3");
}

// 8. pole-placement construction: uniform convergence and growth bounds
inline void thompson_criterion(Checker& c) {
    const auto corpus = builtin_corpus();
    const std::vector<std::size_t> Ns = {64, 128, 256, 512, 1024};
    const double C0 = calibrate_C0(corpus, Ns);
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> Ur(0.0, 1.0), Ut(0.0, two_pi);
    for (std::size_t fi = 0; fi < corpus.size(); ++fi) {
        const auto& f = corpus[fi];
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t N : Ns) {
            const SimplestFraction h = thompson_approximant(f, N);
            double sup = 0.0;
            for (int ir = 0; ir < 64; ++ir)
                for (int it = 0; it < 64; ++it) {
                    const complexd z =
                        std::polar(0.4 * (ir + 1) / 64.0, two_pi * it / 64.0);
                    sup = std::max(sup, std::abs(f(z) - h(z)));
                }
            c.require(sup < prev * 1.05 + 1e-12,
                      "f#" + std::to_string(fi) + " N=" + std::to_string(N) +
                          ": sup error not decreasing");
            prev = sup;
            if (N == Ns.back())
                c.require(sup < 0.05, "f#" + std::to_string(fi) +
                                          ": final sup error " + fmt(sup) + " >= 0.05");
            std::vector<complexd> samples(10000);
            for (complexd& z : samples)
                z = std::polar(1.0 - std::pow(10.0, -4.0 * Ur(rng)), Ut(rng));
            const auto bc = check_pointwise_bound(h, f.sup_bound(), C0, samples);
            c.require(bc.pass,
                      "f#" + std::to_string(fi) + " N=" + std::to_string(N) +
                          ": pointwise bound margin " + fmt(bc.max_margin));
        }
    }
    // (x+y)^p <= (1+beta) x^p + rho(beta) y^p on random nonnegative pairs
    std::mt19937_64 rng2(99);
    std::uniform_real_distribution<double> Ux(0.0, 10.0);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        for (double beta : {0.1, 1.0, 10.0}) {
            const double r = rho(beta, p);
            for (int i = 0; i < 100000; ++i) {
                const double x = Ux(rng2), y = Ux(rng2);
                const double lhs = std::pow(x + y, p);
                const double rhs = (1.0 + beta) * std::pow(x, p) + r * std::pow(y, p);
                if (lhs > rhs * (1.0 + 1e-12)) {
                    c.require(false, "rho inequality failed at p=" + fmt(p) +
                                         " beta=" + fmt(beta));
                    break;
                }
            }
        }
    }
    const std::size_t Nc = 64;
    const auto ib = check_integral_bound(
        BoundedAnalyticFunction::constant(0.5), Nc, 2.0, 1.0, C0,
        {0.5, 0.9, 0.99, 1.0 - 1.0 / static_cast<double>(Nc)});
    c.require(ib.pass, "circle-mean bound failed at some radius");
}

// 9. distance bracket around pi/sqrt(3) for f = 1/2; exact reduction at f = 0
inline void distance_limit_criterion(Checker& c) {
    const auto rep = distance_limit_experiment(BoundedAnalyticFunction::constant(0.5),
                                               {128, 512}, 4, 0);
    for (const Assertion& a : rep.assertions)
        c.require(a.pass, a.name + ": value " + fmt(a.value) + " vs " + fmt(a.reference));
    const Weight g1 = Weight::power(1.0);
    const auto res = distance_to_SFN(BoundedAnalyticFunction::zero(), 8, g1, 8, 0);
    c.require(std::abs(res.best_norm_sq - psi_norm_sq(8, g1).value_sq) < 1e-6,
              "f=0: optimizer missed ||Psi_8||^2 (" + fmt(res.best_norm_sq) + ")");
    c.require(res.gauge_distance_to_equispaced < 1e-3,
              "f=0: best configuration not equispaced");
}

// 10. density branch for g(t) = o(t); uniform floor for alpha = 1
inline void density_criterion(Checker& c) {
    const auto half = BoundedAnalyticFunction::constant(0.5);
    const auto dens =
        closure_density_demo(half, Weight::power(2.0), {16, 32, 64, 128, 256, 512});
    for (const Assertion& a : dens.assertions)
        c.require(a.pass, a.name + ": value " + fmt(a.value) + " vs " + fmt(a.reference));
    for (const auto& f : {BoundedAnalyticFunction::zero(), half}) {
        const auto low = closure_lower_bound_check(f, {2, 4, 8, 16, 32, 64}, 4, 0);
        for (const Assertion& a : low.assertions)
            c.require(a.pass, a.name + ": value " + fmt(a.value) + " vs " + fmt(a.reference));
    }
}

}  // namespace selftest_detail

// The acceptance suite: one result per criterion; exceptions count as failure.
inline std::vector<CriterionResult> run_selftest(std::ostream* progress = nullptr) {
    using Fn = void (*)(selftest_detail::Checker&);
    struct Item {
        const char* name;
        Fn fn;
    };
    const Item items[] = {
        {"limit constant Gamma(alpha+2) zeta(alpha+1)",
         selftest_detail::limit_constant_criterion},
        {"||Psi_N||_1 approaches pi/sqrt(3) from below", selftest_detail::pi_sqrt3_criterion},
        {"Gram and quadrature engines agree", selftest_detail::engine_agreement_criterion},
        {"equispaced poles minimize the norm", selftest_detail::minimality_criterion},
        {"kernel convexity dichotomy at alpha = 1", selftest_detail::convexity_criterion},
        {"power-sum moment floors", selftest_detail::moment_bound_criterion},
        {"rate regimes stay in factor-3 bands", selftest_detail::rate_regime_criterion},
        {"pole-placement construction and growth bounds",
         selftest_detail::thompson_criterion},
        {"distance limit bracket at pi/sqrt(3)", selftest_detail::distance_limit_criterion},
        {"density branch and uniform distance floor", selftest_detail::density_criterion},
    };
    std::vector<CriterionResult> out;
    int idx = 1;
    for (const Item& item : items) {
        CriterionResult r;
        r.index = idx++;
        r.name = item.name;
        selftest_detail::Checker ch;
        try {
            item.fn(ch);
            r.pass = ch.pass;
            r.detail = ch.detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (progress)
            (*progress) << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << ": "
                        << r.name << (r.detail.empty() ? "" : " — " + r.detail) << "\n"
                        << std::flush;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace chui

#endif
