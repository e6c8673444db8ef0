#ifndef CHUI_EXPERIMENTS_HPP
#define CHUI_EXPERIMENTS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chui/optimize.hpp"
#include "chui/report.hpp"
#include "chui/thompson.hpp"

namespace chui {

inline constexpr double pi_over_sqrt3 = std::numbers::pi * std::numbers::inv_sqrt3;

namespace detail {

inline nlohmann::json taylor_to_json(const BoundedAnalyticFunction& f) {
    nlohmann::json j = nlohmann::json::array();
    for (const complexd& a : f.taylor()) j.push_back({a.real(), a.imag()});
    return j;
}

// ||f||^2 in A^2_(g) for a polynomial f: kappa sum_s c_{g,s} |a_s|^2.
inline double poly_norm_sq(const BoundedAnalyticFunction& f, const Weight& g,
                           const MomentCoefficients& mc) {
    double s = 0.0;
    const auto& a = f.taylor();
    for (std::size_t d = 0; d < a.size(); ++d) s += std::norm(a[d]) * mc.values[d];
    return g.kappa() * s;
}

// ||f - h||^2 with shared interpolant and moment table (cheap inside sweeps).
inline double error_sq_at(const BoundedAnalyticFunction& f, const PoleConfiguration& c,
                          const Weight& g, const PhiInterpolant& interp,
                          const MomentCoefficients& mc) {
    const double kap = g.kappa();
    const auto& th = c.angles();
    double s = static_cast<double>(c.size()) * interp.phi0();
    for (std::size_t j = 0; j < th.size(); ++j)
        for (std::size_t k = j + 1; k < th.size(); ++k)
            s += 2.0 * interp.eval_phi(th[j] - th[k]);
    const auto& a = f.taylor();
    double cross = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        if (std::abs(a[d]) == 0.0) continue;
        complexd b(0.0, 0.0);
        for (double t : th) b -= std::polar(1.0, -static_cast<double>(d + 1) * t);
        cross += mc.values[d] * (a[d] * std::conj(b)).real();
    }
    return poly_norm_sq(f, g, mc) + kap * s - 2.0 * kap * cross;
}

inline bool weight_is_small_o_of_t(const Weight& g) {
    return (g.family() == WeightFamily::PowerAlpha && g.param() > 1.0) ||
           g.family() == WeightFamily::ExpPower;
}

}  // namespace detail

// Distances from f to SF_N in A^2_1 along Ns; evidence for the uniform lower
// bound: every computed distance should stay above pi/sqrt(3) - slack. The
// result is consistent with (never a proof of) the liminf statement.
inline ExperimentReport closure_lower_bound_check(const BoundedAnalyticFunction& f,
                                                  const std::vector<std::size_t>& Ns,
                                                  std::size_t starts = 8,
                                                  std::uint64_t seed = 0,
                                                  double slack = 0.5) {
    if (Ns.empty()) throw std::domain_error("closure_lower_bound_check: Ns nonempty");
    ExperimentReport rep;
    detail::ReportTimer timer(rep);
    rep.name = "closure_lower_bound";
    const Weight g = Weight::power(1.0);
    rep.inputs = {{"f_taylor", detail::taylor_to_json(f)},
                  {"weight", g.describe()},
                  {"Ns", Ns},
                  {"starts", starts},
                  {"seed", seed},
                  {"slack", slack}};

    std::vector<double> dist_sq, dist;
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t N : Ns) {
        const auto res = distance_to_SFN(f, N, g, starts, seed);
        dist_sq.push_back(res.best_norm_sq);
        dist.push_back(std::sqrt(std::max(0.0, res.best_norm_sq)));
        min_dist = std::min(min_dist, dist.back());
    }
    rep.series = {{"Ns", Ns},
                  {"distance_sq", dist_sq},
                  {"distance", dist},
                  {"reference_limit", pi_over_sqrt3}};
    rep.assertions.push_back(
        assert_ge("min_distance_above_floor", min_dist, pi_over_sqrt3 - slack, 0.0));
    return rep;
}

// Density branch: g(t) = o(t). Constructive approximants h_N should drive
// ||f - h_N||^2 down; asserted in squared-norm form at the largest N.
inline ExperimentReport closure_density_demo(const BoundedAnalyticFunction& f, const Weight& g,
                                             const std::vector<std::size_t>& Ns,
                                             double final_fraction_sq = 0.1) {
    if (Ns.empty()) throw std::domain_error("closure_density_demo: Ns nonempty");
    if (!detail::weight_is_small_o_of_t(g))
        throw std::domain_error("closure_density_demo: weight must satisfy g(t) = o(t)");
    ExperimentReport rep;
    detail::ReportTimer timer(rep);
    rep.name = "closure_density";
    rep.inputs = {{"f_taylor", detail::taylor_to_json(f)},
                  {"weight", g.describe()},
                  {"Ns", Ns},
                  {"final_fraction_sq", final_fraction_sq}};

    const PhiInterpolant interp(g);
    const MomentCoefficients mc =
        MomentCoefficients::compute(g, static_cast<long>(f.taylor().size()));
    const double fnorm_sq = detail::poly_norm_sq(f, g, mc);
    std::vector<double> err_sq;
    for (std::size_t N : Ns) {
        const PoleConfiguration poles = construct_poles(f, N);
        err_sq.push_back(detail::error_sq_at(f, poles, g, interp, mc));
    }
    rep.series = {{"Ns", Ns}, {"error_sq", err_sq}, {"f_norm_sq", fnorm_sq}};
    rep.assertions.push_back(
        assert_le("final_vs_first_error_sq", err_sq.back(), 0.5 * err_sq.front(), 0.0));
    if (fnorm_sq > 0.0)
        rep.assertions.push_back(assert_le("final_error_sq_fraction", err_sq.back(),
                                           final_fraction_sq * fnorm_sq, 0.0));
    return rep;
}

// A^2_1 distance bracket: constructive upper bound (pole placement) and
// optimized estimate, both squeezing toward pi/sqrt(3) at the largest N.
inline ExperimentReport distance_limit_experiment(const BoundedAnalyticFunction& f,
                                                  const std::vector<std::size_t>& Ns,
                                                  std::size_t starts = 4,
                                                  std::uint64_t seed = 0,
                                                  double slack = 0.3) {
    if (Ns.empty()) throw std::domain_error("distance_limit_experiment: Ns nonempty");
    ExperimentReport rep;
    detail::ReportTimer timer(rep);
    rep.name = "distance_limit";
    const Weight g = Weight::power(1.0);
    rep.inputs = {{"f_taylor", detail::taylor_to_json(f)},
                  {"weight", g.describe()},
                  {"Ns", Ns},
                  {"starts", starts},
                  {"seed", seed},
                  {"slack", slack}};

    const PhiInterpolant interp(g);
    const MomentCoefficients mc =
        MomentCoefficients::compute(g, static_cast<long>(f.taylor().size()));
    std::vector<double> upper, optimized;
    for (std::size_t N : Ns) {
        const PoleConfiguration poles = construct_poles(f, N);
        upper.push_back(std::sqrt(detail::error_sq_at(f, poles, g, interp, mc)));
        // moderate N: full multistart; large N: monotone polish of the
        // constructive configuration (still a valid upper bound of dist)
        const double opt_sq = N <= 64
                                  ? distance_to_SFN(f, N, g, starts, seed).best_norm_sq
                                  : distance_polish(f, poles, g, 1e-6, 1200).best_norm_sq;
        optimized.push_back(std::sqrt(std::max(0.0, opt_sq)));
    }
    rep.series = {{"Ns", Ns},
                  {"constructive_upper", upper},
                  {"optimized", optimized},
                  {"reference_limit", pi_over_sqrt3}};
    rep.assertions.push_back(
        assert_le("constructive_upper_bound", upper.back(), pi_over_sqrt3 + slack, 0.0));
    rep.assertions.push_back(
        assert_ge("optimized_distance", optimized.back(), pi_over_sqrt3 - slack, 0.0));
    return rep;
}

// Distance between SF_n and SF_{n+k}; the nested-pole witness upper-bounds it
// by ||Psi_k||, and joint minimization must do at least as well.
inline ExperimentReport set_distance_experiment(std::size_t n, std::size_t k, const Weight& g,
                                                std::size_t starts = 8, std::uint64_t seed = 0) {
    ExperimentReport rep;
    detail::ReportTimer timer(rep);
    rep.name = "set_distance";
    rep.inputs = {
        {"n", n}, {"k", k}, {"weight", g.describe()}, {"starts", starts}, {"seed", seed}};
    const SetDistanceResult res = set_distance_minimize(n, k, g, starts, seed);
    rep.series = {{"best_value_sq", res.best_value_sq},
                  {"witness_value_sq", res.witness_value_sq},
                  {"ratio", res.ratio},
                  {"converged_fraction", res.converged_fraction},
                  {"h1_angles", res.h1_angles},
                  {"h2_angles", res.h2_angles}};
    rep.assertions.push_back(
        assert_le("best_vs_witness", res.best_value_sq, res.witness_value_sq, 1e-6));
    return rep;
}

}  // namespace chui

#endif
