#include <doctest.h>

#include <cmath>
#include <random>

#include "chui/quadrature.hpp"
#include "chui/special.hpp"
#include "chui/weights.hpp"

using namespace chui;

TEST_CASE("moment coefficients: closed forms") {
    Weight g1 = Weight::power(1.0);
    for (long k : {0L, 1L, 5L, 20L, 400L}) {
        double expect = 1.0 / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
        CHECK(moment_coefficient(g1, k) == doctest::Approx(expect).epsilon(1e-12));
    }
    for (double a : {0.5, 1.0, 2.0, 3.7})
        CHECK(moment_coefficient(Weight::power(a), 0) == doctest::Approx(1.0 / (a + 1.0)));
}

TEST_CASE("moment coefficient: logpow vs fixed-grid Simpson oracle") {
    Weight g = Weight::log_power(2.0);
    // independent oracle: high-resolution Simpson on int_0^1 log^{-2}(2/(1-t)) dt
    double oracle = quad::simpson(
        [](double t) {
            double u = 1.0 - t;
            if (u <= 1e-300) return 0.0;
            double L = std::log(2.0 / u);
            return 1.0 / (L * L);
        },
        0.0, 1.0, 2000000);
    CHECK(moment_coefficient(g, 0) == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("moment coefficients: positivity, decrease, k^{alpha+1} bracket") {
    for (double a : {0.5, 1.0, 2.0}) {
        auto mc = MomentCoefficients::compute(Weight::power(a), 2000);
        double prev = std::numeric_limits<double>::infinity();
        for (double c : mc.values) {
            CHECK(c > 0.0);
            CHECK(c < prev);
            prev = c;
        }
        // c_{alpha,k} * k^{alpha+1} -> Gamma(alpha+1); stays in fixed brackets
        for (long k : {500L, 1000L, 2000L}) {
            double scaled = mc.values[static_cast<std::size_t>(k)] *
                            std::pow(static_cast<double>(k), a + 1.0);
            CHECK(scaled > 0.5 * special::gamma_fn(a + 1.0));
            CHECK(scaled < 2.0 * special::gamma_fn(a + 1.0));
        }
    }
    auto mcl = MomentCoefficients::compute(Weight::log_power(2.0), 500);
    for (double c : mcl.values) CHECK(c > 0.0);
}

TEST_CASE("kappa normalization") {
    for (double a : {0.5, 1.0, 3.0})
        CHECK(Weight::power(a).kappa() == doctest::Approx(a + 1.0).epsilon(1e-14));
    Weight ramp = Weight::min_ramp(0.3);
    CHECK(ramp.kappa() == doctest::Approx(1.0 / (0.3 - 0.3 * 0.3 / 2.0)).epsilon(1e-12));
    // kappa * int g = 1 for every family, by quadrature
    for (const Weight& g : {Weight::log_power(2.0), Weight::exp_power(0.5), ramp}) {
        double I = quad::integrate([&](double t) { return g(t); }, 0.0, 1.0,
                                   {.rel_tol = 1e-12}).value;
        CHECK(g.kappa() * I == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("kernel integrability") {
    CHECK(check_kernel_integrability(Weight::power(1.0)));
    CHECK(check_kernel_integrability(Weight::power(0.25)));
    CHECK(check_kernel_integrability(Weight::log_power(2.0)));
    CHECK(check_kernel_integrability(Weight::exp_power(1.0)));
    CHECK(check_kernel_integrability(Weight::min_ramp(0.3)));
    CHECK_THROWS_AS((void)Weight::log_power(1.0), std::domain_error);
    // tabulated weight with g(0) > 0: dyadic shells do not decay
    Weight bad = Weight::tabulated({0.0, 1.0}, {1.0, 1.0});
    CHECK_FALSE(check_kernel_integrability(bad));
    CHECK_THROWS_AS((void)kernel_integral(bad), DivergenceError);
}

TEST_CASE("phi at t=0: telescoping oracle for alpha=1") {
    // oracle: partial sums of sum 1/((k+1)(k+2)) = 1 - 1/(K+2)
    double partial = 0.0;
    for (long k = 0; k < 2000000; ++k)
        partial += 1.0 / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    CHECK(partial == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(phi(Weight::power(1.0), 0.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("phi at t=pi for alpha=1: alternating series oracle") {
    // oracle: sum_{k>=1} (-1)^k / (k(k+1)), summed pairwise
    double s = 0.0;
    for (long k = 4000000; k >= 1; --k)
        s += (k % 2 ? -1.0 : 1.0) / (static_cast<double>(k) * static_cast<double>(k + 1));
    CHECK(s == doctest::Approx(1.0 - 2.0 * std::log(2.0)).epsilon(1e-9));
    CHECK(phi(Weight::power(1.0), std::numbers::pi) == doctest::Approx(s).epsilon(1e-8));
}

TEST_CASE("phi: evenness and periodicity") {
    Weight g = Weight::power(0.5);
    for (double t : {0.3, 1.1, 2.9}) {
        CHECK(phi(g, t) == doctest::Approx(phi(g, two_pi - t)).epsilon(1e-10));
        CHECK(phi(g, t) == doctest::Approx(phi(g, t + two_pi)).epsilon(1e-10));
    }
}

TEST_CASE("phi: series vs integral agreement") {
    struct Case {
        Weight g;
        long K;
        std::vector<double> ts;
    };
    std::vector<Case> cases;
    cases.push_back({Weight::power(1.0), 25000, {0.1, 1.0, std::numbers::pi, 5.0}});
    cases.push_back({Weight::power(0.5), 600000, {0.1, 1.0, std::numbers::pi}});
    cases.push_back({Weight::power(2.0), 5000, {0.1, std::numbers::pi}});
    cases.push_back({Weight::log_power(2.0), 800000, {0.3, std::numbers::pi}});
    cases.push_back({Weight::exp_power(1.0), 2000, {0.3, std::numbers::pi}});
    for (const auto& c : cases) {
        auto mc = MomentCoefficients::compute(c.g, c.K);
        for (double t : c.ts) {
            double series = phi_series(mc, t);
            double integral = phi(c.g, t);
            CHECK(std::abs(series - integral) < 1e-7 + phi_series_tail(mc, t));
            CHECK(std::abs(series - integral) < 1e-6);
        }
    }
}

TEST_CASE("phi_second at pi, alpha=1: alternating series oracle") {
    // paper series: 1/2 + sum cos(k pi)/(k+1) = 1/2 + (log 2 - 1) = log 2 - 1/2
    double s = 0.0;
    for (long k = 4000000; k >= 1; --k) s += (k % 2 ? -1.0 : 1.0) / static_cast<double>(k + 1);
    double oracle = 0.5 + s;
    CHECK(oracle == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-6));
    CHECK(phi_second(Weight::power(1.0), std::numbers::pi) ==
          doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-8));
}

TEST_CASE("phi_second: positivity for alpha <= 1, sign change for alpha > 1") {
    for (double a : {0.5, 1.0}) {
        auto rep = check_strict_convexity(Weight::power(a), 2000);
        CHECK(rep.all_positive);
    }
    for (double a : {2.0, 3.0}) {
        Weight g = Weight::power(a);
        bool found_negative = false;
        for (int i = 1; i <= 200 && !found_negative; ++i)
            found_negative = phi_second(g, 0.5 * i / 200.0) < 0.0;
        CHECK(found_negative);
        CHECK_FALSE(check_strict_convexity(g, 2000).all_positive);
    }
    CHECK_THROWS_AS((void)phi_second(Weight::power(1.0), 0.0), std::domain_error);
}

TEST_CASE("concave-nondecreasing flags") {
    CHECK(Weight::power(0.5).is_concave_nondecreasing());
    CHECK(Weight::power(1.0).is_concave_nondecreasing());
    CHECK_FALSE(Weight::power(2.0).is_concave_nondecreasing());
    CHECK(Weight::min_ramp(0.3).is_concave_nondecreasing());
    CHECK_FALSE(Weight::exp_power(1.0).is_concave_nondecreasing());
}

TEST_CASE("phi interpolant matches direct evaluation") {
    for (const Weight& g : {Weight::power(1.0), Weight::power(0.5), Weight::min_ramp(0.3)}) {
        PhiInterpolant tab(g);
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> U(1e-6, two_pi - 1e-6);
        for (int i = 0; i < 40; ++i) {
            double t = U(rng);
            CHECK(tab.eval_phi(t) == doctest::Approx(phi(g, t)).epsilon(1e-9));
            CHECK(tab.eval_phi_prime(t) == doctest::Approx(phi_prime(g, t)).epsilon(1e-8));
        }
        CHECK(tab.phi0() == doctest::Approx(kernel_integral(g)).epsilon(1e-10));
    }
}

TEST_CASE("zeta and gamma helpers") {
    CHECK(special::riemann_zeta(2.0) ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-13));
    CHECK(special::riemann_zeta(4.0) ==
          doctest::Approx(std::pow(std::numbers::pi, 4) / 90.0).epsilon(1e-13));
    CHECK(special::gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-13));
    // Bose integral identity: int s^a/(e^s-1) = Gamma(a+1) zeta(a+1)
    for (double a : {0.5, 1.0, 2.0, 3.0})
        CHECK(special::bose_integral(a) ==
              doctest::Approx(special::gamma_fn(a + 1.0) * special::riemann_zeta(a + 1.0))
                  .epsilon(1e-10));
}
