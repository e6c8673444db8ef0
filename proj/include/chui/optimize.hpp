#ifndef CHUI_OPTIMIZE_HPP
#define CHUI_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "chui/fractions.hpp"
#include "chui/norms.hpp"
#include "chui/parallel.hpp"
#include "chui/thompson.hpp"
#include "chui/weights.hpp"

namespace chui {

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what, std::vector<double> trace_in = {})
        : std::runtime_error(what), trace(std::move(trace_in)) {}
    std::vector<double> trace;
};

struct OptimizationResult {
    PoleConfiguration best;
    double best_norm_sq = 0.0;
    std::size_t starts = 0;
    double converged_fraction = 0.0;
    double gauge_distance_to_equispaced = 0.0;
    double max_converged_gauge_distance = 0.0;  // worst converged start
    std::vector<double> trace;  // objective per accepted step of the best start
};

// d/d theta_j of ||sum 1/(z - e^{i theta_k})||^2 = 2 kappa sum_{k != j} phi'(theta_j - theta_k)
inline std::vector<double> norm_gradient(const PoleConfiguration& c, const Weight& g,
                                         const PhiInterpolant* interp = nullptr) {
    const std::size_t n = c.size();
    std::vector<double> grad(n, 0.0);
    const double kap = g.kappa();
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const double d = c[j] - c[k];
            s += interp ? interp->eval_phi_prime(d) : phi_prime(g, d);
        }
        grad[j] = 2.0 * kap * s;
    }
    return grad;
}

namespace detail {

struct DescentOutcome {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    std::vector<double> trace;
};

// Gradient descent with backtracking line search; stops when the gradient
// sup-norm over the free coordinates drops below tol.
template <typename FVal, typename FGrad>
DescentOutcome descend(std::vector<double> x, FVal&& fval, FGrad&& fgrad, double tol,
                       int iteration_cap) {
    DescentOutcome out;
    double fx = fval(x);
    out.trace.push_back(fx);
    double step = 0.5;
    std::vector<double> xt(x.size());
    for (int it = 0; it < iteration_cap; ++it) {
        const std::vector<double> grad = fgrad(x);
        double gsup = 0.0, g2 = 0.0;
        for (double d : grad) {
            gsup = std::max(gsup, std::abs(d));
            g2 += d * d;
        }
        // the gradient cannot be driven below the double-precision resolution
        // of the objective (~1e-7 relative near a quadratic minimum)
        if (gsup < std::max(tol, 1e-7 * (1.0 + std::abs(fx)))) {
            out.x = std::move(x);
            out.value = fx;
            out.converged = true;
            return out;
        }
        step = std::min(step * 4.0, 1e3);
        bool accepted = false;
        while (step > 1e-18) {
            for (std::size_t i = 0; i < x.size(); ++i) xt[i] = x[i] - step * grad[i];
            const double ft = fval(xt);
            if (ft <= fx - 1e-4 * step * g2) {
                accepted = true;
                x.swap(xt);
                fx = ft;
                out.trace.push_back(fx);
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // the objective is flat to machine precision; near a minimum the
            // achievable gradient scales like sqrt(eps), which can exceed tol
            out.converged = gsup <= std::max(tol, 1e-7 * (1.0 + std::abs(fx)));
            break;
        }
    }
    out.x = std::move(x);
    out.value = fx;
    return out;
}

inline std::mt19937_64 start_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), 0x9e3779b9u};
    return std::mt19937_64(seq);
}

}  // namespace detail

// Multistart minimization of the squared norm over N-pole configurations,
// with the rotational gauge fixed by theta_0 = 0.
inline OptimizationResult minimize_norm(std::size_t N, const Weight& g, std::size_t starts = 20,
                                        std::uint64_t seed = 0, double tol = 1e-9,
                                        int iteration_cap = 5000) {
    if (N < 2) throw std::domain_error("minimize_norm: N >= 2");
    if (starts < 1) throw std::domain_error("minimize_norm: starts >= 1");
    if (!check_kernel_integrability(g))
        throw DivergenceError("minimize_norm: kernels are not in the space for this weight");
    const PhiInterpolant interp(g);
    const double kap = g.kappa();
    const double phi0 = interp.phi0();

    auto objective = [&](const std::vector<double>& x) {
        // x holds theta_1..theta_{N-1}; theta_0 = 0
        double s = static_cast<double>(N) * phi0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            s += 2.0 * interp.eval_phi(x[j]);
            for (std::size_t k = j + 1; k < x.size(); ++k)
                s += 2.0 * interp.eval_phi(x[j] - x[k]);
        }
        return kap * s;
    };
    auto gradient = [&](const std::vector<double>& x) {
        std::vector<double> grad(x.size(), 0.0);
        for (std::size_t j = 0; j < x.size(); ++j) {
            double s = interp.eval_phi_prime(x[j]);  // against the fixed pole at 0
            for (std::size_t k = 0; k < x.size(); ++k)
                if (k != j) s += interp.eval_phi_prime(x[j] - x[k]);
            grad[j] = 2.0 * kap * s;
        }
        return grad;
    };

    std::vector<detail::DescentOutcome> outcomes(starts);
    parallel_for(starts, [&](std::size_t i) {
        std::mt19937_64 rng = detail::start_rng(seed, i);
        std::uniform_real_distribution<double> U(0.0, two_pi);
        std::vector<double> x(N - 1);
        for (double& t : x) t = U(rng);
        outcomes[i] = detail::descend(x, objective, gradient, tol, iteration_cap);
    });

    const PoleConfiguration eq = PoleConfiguration::equispaced(N);
    std::size_t best_i = starts;
    double best_val = std::numeric_limits<double>::infinity(), best_gd = 0.0;
    std::size_t converged = 0;
    double worst_converged_gd = 0.0;
    for (std::size_t i = 0; i < starts; ++i) {
        std::vector<double> ang = outcomes[i].x;
        ang.insert(ang.begin(), 0.0);
        const double gd = gauge_distance(PoleConfiguration(ang), eq);
        if (outcomes[i].converged) {
            ++converged;
            worst_converged_gd = std::max(worst_converged_gd, gd);
        }
        if (outcomes[i].value < best_val - 1e-12 ||
            (outcomes[i].value < best_val + 1e-12 && gd < best_gd)) {
            best_val = outcomes[i].value;
            best_gd = gd;
            best_i = i;
        }
    }
    if (converged == 0)
        throw ConvergenceError("minimize_norm: no start converged within the iteration cap",
                               outcomes.empty() ? std::vector<double>{} : outcomes[0].trace);

    std::vector<double> ang = outcomes[best_i].x;
    ang.insert(ang.begin(), 0.0);
    OptimizationResult res{PoleConfiguration(ang)};
    // the interpolant drives the descent; the final value is re-evaluated with
    // the adaptive-integral Gram form when that is affordable
    res.best_norm_sq = N <= 32 ? norm_sq_gram(res.best, g).value_sq
                               : norm_sq_gram(res.best, g, &interp).value_sq;
    res.starts = starts;
    res.converged_fraction = static_cast<double>(converged) / static_cast<double>(starts);
    res.gauge_distance_to_equispaced = best_gd;
    res.max_converged_gauge_distance = worst_converged_gd;
    res.trace = std::move(outcomes[best_i].trace);
    return res;
}

namespace detail {

// ||f - h||^2 as a function of the pole angles of h; the cross term is a
// finite sum because f is a polynomial: <f, h> = kappa sum_s c_{g,s} a_s
// conj(b_s) with b_s = -sum_k e^{-i(s+1) theta_k}.
struct DistanceProblem {
    PhiInterpolant interp;
    double kap, phi0, fnorm_sq = 0.0;
    std::vector<complexd> a;
    MomentCoefficients mc;
    std::size_t N;
    bool parallel_gradient = false;

    DistanceProblem(const BoundedAnalyticFunction& f, std::size_t n, const Weight& g)
        : interp(g),
          kap(g.kappa()),
          phi0(interp.phi0()),
          a(f.taylor()),
          mc(MomentCoefficients::compute(g, static_cast<long>(f.taylor().size()))),
          N(n) {
        for (std::size_t s = 0; s < a.size(); ++s) fnorm_sq += std::norm(a[s]) * mc.values[s];
        fnorm_sq *= kap;
        parallel_gradient = N >= 128;
    }

    double cross(const std::vector<double>& x) const {
        // -2 kappa sum_s c_s Re(a_s conj(b_s))
        double s = 0.0;
        for (std::size_t d = 0; d < a.size(); ++d) {
            if (std::abs(a[d]) == 0.0) continue;
            complexd b(0.0, 0.0);
            for (double th : x) b -= std::polar(1.0, -static_cast<double>(d + 1) * th);
            s += mc.values[d] * (a[d] * std::conj(b)).real();
        }
        return -2.0 * kap * s;
    }

    double operator()(const std::vector<double>& x) const {
        double s = static_cast<double>(N) * phi0;
        for (std::size_t j = 0; j < x.size(); ++j)
            for (std::size_t k = j + 1; k < x.size(); ++k)
                s += 2.0 * interp.eval_phi(x[j] - x[k]);
        return fnorm_sq + kap * s + cross(x);
    }

    std::vector<double> gradient(const std::vector<double>& x) const {
        std::vector<double> grad(x.size(), 0.0);
        parallel_for(x.size(), [&](std::size_t j) {
            double s = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k)
                if (k != j) s += interp.eval_phi_prime(x[j] - x[k]);
            double cr = 0.0;
            for (std::size_t d = 0; d < a.size(); ++d) {
                if (std::abs(a[d]) == 0.0) continue;
                cr += mc.values[d] * static_cast<double>(d + 1) *
                      (a[d] * std::polar(1.0, static_cast<double>(d + 1) * x[j])).imag();
            }
            grad[j] = 2.0 * kap * s - 2.0 * kap * cr;
        }, parallel_gradient ? 0 : 1);
        return grad;
    }
};

}  // namespace detail

// ||f - h||^2 evaluated at a fixed pole configuration, with the pairwise
// energy driven by the kernel interpolant.
inline double distance_sq_at(const BoundedAnalyticFunction& f, const PoleConfiguration& c,
                             const Weight& g) {
    if (!check_kernel_integrability(g))
        throw DivergenceError("distance_sq_at: kernels are not in the space for this weight");
    detail::DistanceProblem prob(f, c.size(), g);
    return prob(c.angles());
}

// Single descent of ||f - h||^2 from the given pole configuration. The line
// search only ever decreases the objective, so the returned value is a valid
// upper bound for the distance even when the iteration cap is reached.
inline OptimizationResult distance_polish(const BoundedAnalyticFunction& f,
                                          const PoleConfiguration& start, const Weight& g,
                                          double tol = 1e-6, int iteration_cap = 2000) {
    if (!check_kernel_integrability(g))
        throw DivergenceError("distance_polish: kernels are not in the space for this weight");
    detail::DistanceProblem prob(f, start.size(), g);
    auto outcome = detail::descend(
        start.angles(), [&](const std::vector<double>& x) { return prob(x); },
        [&](const std::vector<double>& x) { return prob.gradient(x); }, tol, iteration_cap);
    OptimizationResult res{PoleConfiguration(outcome.x)};
    res.best_norm_sq = outcome.value;
    res.starts = 1;
    res.converged_fraction = outcome.converged ? 1.0 : 0.0;
    res.gauge_distance_to_equispaced =
        gauge_distance(res.best, PoleConfiguration::equispaced(start.size()));
    res.max_converged_gauge_distance = res.gauge_distance_to_equispaced;
    res.trace = std::move(outcome.trace);
    return res;
}

// min over h in SF_N of ||f - h||^2.
inline OptimizationResult distance_to_SFN(const BoundedAnalyticFunction& f, std::size_t N,
                                          const Weight& g, std::size_t starts = 8,
                                          std::uint64_t seed = 0, double tol = 1e-6,
                                          int iteration_cap = 5000) {
    if (N < 1) throw std::domain_error("distance_to_SFN: N >= 1");
    if (!check_kernel_integrability(g))
        throw DivergenceError("distance_to_SFN: kernels are not in the space for this weight");
    detail::DistanceProblem prob(f, N, g);
    auto objective = [&](const std::vector<double>& x) { return prob(x); };
    auto gradient = [&](const std::vector<double>& x) { return prob.gradient(x); };

    // start 0 is the constructive warm start; the rest are random
    std::vector<double> warm;
    if (static_cast<double>(N) > 2.0 * f.sup_bound())
        warm = construct_poles(f, N).angles();
    else
        warm = PoleConfiguration::equispaced(N).angles();

    std::vector<detail::DescentOutcome> outcomes(starts);
    const bool big = N >= 128;  // large runs: parallelism lives inside the gradient
    parallel_for(starts, [&](std::size_t i) {
        std::vector<double> x;
        if (i == 0) {
            x = warm;
        } else {
            std::mt19937_64 rng = detail::start_rng(seed, i);
            std::uniform_real_distribution<double> U(0.0, two_pi);
            x.resize(N);
            for (double& t : x) t = U(rng);
        }
        outcomes[i] = detail::descend(x, objective, gradient, tol, iteration_cap);
    }, big ? 1 : 0);

    const PoleConfiguration eq = PoleConfiguration::equispaced(N);
    std::size_t best_i = 0, converged = 0;
    double best_val = std::numeric_limits<double>::infinity(), best_gd = 0.0;
    for (std::size_t i = 0; i < starts; ++i) {
        if (outcomes[i].converged) ++converged;
        const double gd = gauge_distance(PoleConfiguration(outcomes[i].x), eq);
        if (outcomes[i].value < best_val - 1e-12 ||
            (outcomes[i].value < best_val + 1e-12 && gd < best_gd)) {
            best_val = outcomes[i].value;
            best_gd = gd;
            best_i = i;
        }
    }
    if (converged == 0)
        throw ConvergenceError("distance_to_SFN: no start converged within the iteration cap",
                               outcomes[0].trace);

    OptimizationResult res{PoleConfiguration(outcomes[best_i].x)};
    res.best_norm_sq = outcomes[best_i].value;
    res.starts = starts;
    res.converged_fraction = static_cast<double>(converged) / static_cast<double>(starts);
    res.gauge_distance_to_equispaced = best_gd;
    res.trace = std::move(outcomes[best_i].trace);
    return res;
}

struct SetDistanceResult {
    double best_value_sq = 0.0;
    double witness_value_sq = 0.0;  // ||Psi_k||^2, realized by nested pole sets
    double ratio = 0.0;             // best / witness
    double converged_fraction = 0.0;
    std::vector<double> h1_angles;
    std::vector<double> h2_angles;
};

// Joint minimization of ||h1 - h2||^2 over h1 in SF_n, h2 in SF_{n+k}: a
// signed-mass Gram energy with +1 masses on h1 poles and -1 on h2 poles.
inline SetDistanceResult set_distance_minimize(std::size_t n, std::size_t k, const Weight& g,
                                               std::size_t starts = 8, std::uint64_t seed = 0,
                                               double tol = 1e-7, int iteration_cap = 5000) {
    if (n < 1 || k < 1) throw std::domain_error("set_distance_minimize: n, k >= 1");
    if (!check_kernel_integrability(g))
        throw DivergenceError("set_distance_minimize: kernels are not in the space");
    const std::size_t m = 2 * n + k;  // total poles; first n carry +1, rest -1
    const PhiInterpolant interp(g);
    const double kap = g.kappa();
    const double phi0 = interp.phi0();
    auto sign = [&](std::size_t p) { return p < n ? 1.0 : -1.0; };

    auto objective = [&](const std::vector<double>& x) {
        // x holds angles 1..m-1; angle 0 (an h1 pole) is gauge-fixed at 0
        double s = static_cast<double>(m) * phi0;
        auto ang = [&](std::size_t p) { return p == 0 ? 0.0 : x[p - 1]; };
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q)
                s += 2.0 * sign(p) * sign(q) * interp.eval_phi(ang(p) - ang(q));
        return kap * s;
    };
    auto gradient = [&](const std::vector<double>& x) {
        std::vector<double> grad(x.size(), 0.0);
        auto ang = [&](std::size_t p) { return p == 0 ? 0.0 : x[p - 1]; };
        for (std::size_t p = 1; p < m; ++p) {
            double s = 0.0;
            for (std::size_t q = 0; q < m; ++q)
                if (q != p) s += sign(q) * interp.eval_phi_prime(ang(p) - ang(q));
            grad[p - 1] = 2.0 * kap * sign(p) * s;
        }
        return grad;
    };

    // witness: h2 = h1's poles plus k equispaced ones, so h2 - h1 is a rotated
    // Psi_k and the value ||Psi_k||^2 is always attainable
    std::vector<double> witness;
    for (std::size_t j = 1; j < n; ++j)
        witness.push_back(two_pi * static_cast<double>(j) / static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        witness.push_back(two_pi * static_cast<double>(j) / static_cast<double>(n));
    for (std::size_t j = 0; j < k; ++j)
        witness.push_back(1.0 + two_pi * static_cast<double>(j) / static_cast<double>(k));

    std::vector<detail::DescentOutcome> outcomes(starts);
    parallel_for(starts, [&](std::size_t i) {
        std::vector<double> x;
        if (i == 0) {
            x = witness;
        } else {
            std::mt19937_64 rng = detail::start_rng(seed, i);
            std::uniform_real_distribution<double> U(0.0, two_pi);
            x.resize(m - 1);
            for (double& t : x) t = U(rng);
        }
        outcomes[i] = detail::descend(x, objective, gradient, tol, iteration_cap);
    });

    // no convergence requirement: the descent is monotone from the witness, so
    // the best value is a valid upper bound either way
    std::size_t best_i = 0, converged = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < starts; ++i) {
        if (outcomes[i].converged) ++converged;
        if (outcomes[i].value < best_val) {
            best_val = outcomes[i].value;
            best_i = i;
        }
    }

    SetDistanceResult res;
    res.best_value_sq = best_val;
    res.witness_value_sq = psi_norm_sq(k, g).value_sq;
    res.ratio = res.best_value_sq / res.witness_value_sq;
    res.converged_fraction = static_cast<double>(converged) / static_cast<double>(starts);
    const auto& x = outcomes[best_i].x;
    res.h1_angles.push_back(0.0);
    for (std::size_t p = 1; p < m; ++p)
        (p < n ? res.h1_angles : res.h2_angles).push_back(wrap_angle(x[p - 1]));
    return res;
}

}  // namespace chui

#endif
