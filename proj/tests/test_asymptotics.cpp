#include <doctest.h>

#include "chui/asymptotics.hpp"

using namespace chui;

TEST_CASE("limit constant: closed forms and Bose-integral cross-validation") {
    CHECK(limit_constant(1.0) ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0).epsilon(1e-12));
    CHECK(limit_constant(2.0) == doctest::Approx(6.0 * 1.2020569031595943).epsilon(1e-12));
    // Gamma(alpha+2) zeta(alpha+1) = (alpha+1) int_0^inf s^alpha/(e^s - 1) ds
    for (double a : {0.5, 1.0, 2.0, 3.0})
        CHECK(std::abs(limit_constant(a) - (a + 1.0) * special::bose_integral(a)) < 1e-9);
    CHECK_THROWS_AS((void)limit_constant(0.0), std::domain_error);
}

TEST_CASE("scaled norm sequence: monotone increase toward the limit") {
    std::vector<std::size_t> Ns;
    for (std::size_t n = 1; n <= 100; ++n) Ns.push_back(n);
    auto rep = scaled_norm_sequence(1.0, Ns);
    CHECK(rep.monotone_increasing);
    CHECK(rep.values.front() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rep.ratios.front() ==
          doctest::Approx(2.0 / (std::numbers::pi * std::numbers::pi / 3.0)).epsilon(1e-10));
    CHECK(rep.ratios.back() > 0.95);
    for (double r : rep.ratios) CHECK(r < 1.0);

    auto rep05 = scaled_norm_sequence(0.5, {10, 100, 1000});
    CHECK(rep05.monotone_increasing);
    for (double v : rep05.values) CHECK(v < limit_constant(0.5));
    CHECK_THROWS_AS((void)scaled_norm_sequence(1.0, {5, 5}), std::domain_error);
}

TEST_CASE("monotonicity of the scaled sequence across alpha") {
    std::vector<std::size_t> Ns;
    for (std::size_t n = 1; n <= 200; ++n) Ns.push_back(n);
    for (double a : {0.5, 1.0, 2.0}) CHECK(scaled_norm_sequence(a, Ns).monotone_increasing);
}

TEST_CASE("proposition bracket: positive, finite, and a stable band") {
    auto b1 = proposition_bounds(Weight::power(1.0), 1);
    CHECK(b1.head > 0.0);
    CHECK(b1.tail >= 0.0);  // the tail interval [1/N, 1] is empty at N = 1
    CHECK(b1.bracket > 0.0);
    CHECK(b1.norm_sq > 0.0);
    CHECK(std::isfinite(b1.bracket));

    for (const Weight& g : {Weight::power(1.0), Weight::log_power(2.0)}) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t N : {2, 10, 100, 1000, 10000}) {
            auto b = proposition_bounds(g, N);
            CHECK(b.ratio > 0.0);
            lo = std::min(lo, b.ratio);
            hi = std::max(hi, b.ratio);
        }
        CHECK(hi / lo < 3.0);
    }
}

TEST_CASE("case C: N / log^{q-1} N regime") {
    Weight g = Weight::log_power(2.0);
    auto rep = corollary_rates(RateCase::C, g, {100, 316, 1000, 3162, 10000});
    CHECK(rep.band_ratio < 3.0);
    for (double v : rep.values) CHECK(v > 0.0);
}

TEST_CASE("case D: stretched-exponential decay exponent") {
    Weight g = Weight::exp_power(1.0);
    auto rep = corollary_rates(RateCase::D, g, {50, 100, 400, 1000, 2000});
    CHECK(rep.band_ratio < 3.0);
    // log values of ||Psi_N|| itself are negative and decreasing
    double prev = 0.0;
    for (std::size_t i = 0; i < rep.Ns.size(); ++i) {
        const double log_norm = -rep.values[i] * std::pow(static_cast<double>(rep.Ns[i]), 0.5);
        CHECK(log_norm < prev);
        prev = log_norm;
    }
}

TEST_CASE("case A and case B trends") {
    auto repA = corollary_rates(RateCase::A, Weight::power(1.0), {10, 100, 1000});
    for (std::size_t i = 1; i < repA.values.size(); ++i)
        CHECK(repA.values[i] < repA.values[i - 1]);

    auto repB = corollary_rates(RateCase::B, Weight::power(1.5), {10, 100, 1000});
    for (std::size_t i = 1; i < repB.values.size(); ++i)
        CHECK(repB.values[i] < repB.values[i - 1]);
    CHECK(repB.values.back() < 0.2);
}

TEST_CASE("case parameter validation") {
    CHECK_THROWS_AS((void)corollary_rates(RateCase::C, Weight::power(1.0), {10}),
                    std::domain_error);
    CHECK_THROWS_AS((void)corollary_rates(RateCase::D, Weight::power(1.0), {10}),
                    std::domain_error);
    CHECK_THROWS_AS((void)corollary_rates(RateCase::B, Weight::power(0.5), {10}),
                    std::domain_error);
}
