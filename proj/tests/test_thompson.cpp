#include <doctest.h>

#include <random>

#include "chui/thompson.hpp"

using namespace chui;

namespace {

double sup_error_on_disk(const BoundedAnalyticFunction& f, const SimplestFraction& h,
                         double radius, std::size_t n = 64) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const complexd z = std::polar(radius * static_cast<double>(i + 1) /
                                              static_cast<double>(n),
                                          two_pi * static_cast<double>(j) /
                                              static_cast<double>(n));
            worst = std::max(worst, std::abs(f(z) - h(z)));
        }
    return worst;
}

}  // namespace

TEST_CASE("bounded analytic function: sup bound and dilation") {
    auto f = BoundedAnalyticFunction::constant(0.5);
    CHECK(f.sup_bound() == doctest::Approx(0.5 * 1.001).epsilon(1e-12));
    auto g = BoundedAnalyticFunction::from_taylor({{1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}});
    CHECK(g.sup_bound() == doctest::Approx((2.0 / 3.0) * 1.001).epsilon(1e-6));
    auto gd = g.dilate(0.5);
    CHECK(gd.taylor()[1].real() == doctest::Approx(1.0 / 6.0));
    CHECK(BoundedAnalyticFunction::zero().is_zero());
    CHECK_THROWS_AS((void)g.dilate(1.5), std::domain_error);
}

TEST_CASE("weight function W: closed forms and endpoints") {
    auto zero = BoundedAnalyticFunction::zero();
    for (double t : {0.0, 0.3, 0.77, 1.0})
        CHECK(weight_function_W(zero, 16, t) == doctest::Approx(16.0 * t).epsilon(1e-14));
    const double c = 0.5;
    auto fc = BoundedAnalyticFunction::constant(c);
    for (double t : {0.1, 0.5, 0.9}) {
        const double expect = 8.0 * t - (c / std::numbers::pi) * std::sin(two_pi * t);
        CHECK(weight_function_W(fc, 8, t) == doctest::Approx(expect).epsilon(1e-13));
    }
    for (const auto& f : builtin_corpus()) {
        CHECK(weight_function_W(f, 32, 0.0) == 0.0);
        CHECK(weight_function_W(f, 32, 1.0) == doctest::Approx(32.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)weight_function_W(fc, 1, 0.5), MonotonicityError);
}

TEST_CASE("construct_poles: zero function gives exact equispaced poles") {
    auto poles = construct_poles(BoundedAnalyticFunction::zero(), 8);
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(poles[k] == doctest::Approx(two_pi * static_cast<double>(k) / 8.0)
                              .epsilon(1e-11));
    SimplestFraction h = thompson_approximant(BoundedAnalyticFunction::zero(), 8);
    for (complexd z : {complexd(0.3, 0.1), complexd(-0.2, 0.5)})
        CHECK(std::abs(h(z) - psi(8, z)) < 1e-9);
}

TEST_CASE("construct_poles: spacing law") {
    auto f = BoundedAnalyticFunction::constant(0.5);
    const double M = f.sup_bound();
    const std::size_t N = 64;
    auto poles = construct_poles(f, N);
    std::vector<double> x = poles.angles();
    CHECK(std::is_sorted(x.begin(), x.end()));
    x.push_back(x.front() + two_pi);  // wraparound spacing
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double spacing = (x[k + 1] - x[k]) / two_pi;
        CHECK(std::abs(spacing - 1.0 / static_cast<double>(N)) <=
              8.0 * M / static_cast<double>(N * N));
    }
}

TEST_CASE("construct_poles: linear target stays monotone and in range") {
    auto f = BoundedAnalyticFunction::from_taylor({{0.0, 0.0}, {0.5, 0.0}});
    auto poles = construct_poles(f, 128);
    CHECK(poles.size() == 128);
    CHECK(std::is_sorted(poles.angles().begin(), poles.angles().end()));
    for (double t : poles.angles()) {
        CHECK(t >= 0.0);
        CHECK(t < two_pi);
    }
}

TEST_CASE("thompson approximant: locally uniform convergence") {
    for (const auto& f : builtin_corpus()) {
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t N : {32, 64, 128, 256}) {
            const double err = sup_error_on_disk(f, thompson_approximant(f, N), 0.4);
            CHECK(err < prev * 1.05 + 1e-12);  // essentially decreasing, modulo grid noise
            prev = err;
        }
        CHECK(prev < 0.12);
    }
    // the headline compact-set example at a larger N
    auto fc = BoundedAnalyticFunction::constant(0.5);
    CHECK(sup_error_on_disk(fc, thompson_approximant(fc, 512), 0.5) < 0.05);
}

TEST_CASE("pointwise bound: Psi_N case has no log term") {
    SimplestFraction h{PoleConfiguration::equispaced(32)};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> Ur(0.0, 0.999), Ut(0.0, two_pi);
    std::vector<complexd> samples;
    for (int i = 0; i < 2000; ++i) samples.push_back(std::polar(Ur(rng), Ut(rng)));
    samples.push_back(std::polar(0.999, 0.0001));  // near a pole direction
    auto rep = check_pointwise_bound(h, 0.0, 1.0, samples);
    CHECK(rep.pass);
    CHECK(rep.max_margin <= 1e-12);
}

TEST_CASE("pointwise bound: calibrated constant covers the corpus") {
    auto corpus = builtin_corpus();
    const double C0 = calibrate_C0(corpus, {64, 128}, 2000, 5);
    CHECK(C0 > 0.0);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> Ur(0.0, 1.0), Ut(0.0, two_pi);
    for (const auto& f : corpus) {
        if (f.sup_bound() == 0.0) continue;
        SimplestFraction h = thompson_approximant(f, 128);
        std::vector<complexd> samples;
        for (int i = 0; i < 2000; ++i) {
            const double r = 1.0 - std::pow(10.0, -4.0 * Ur(rng));
            samples.push_back(std::polar(r, Ut(rng)));
        }
        auto rep = check_pointwise_bound(h, f.sup_bound(), C0, samples);
        CHECK(rep.pass);
    }
}

TEST_CASE("rho: closed forms and the two-term inequality") {
    CHECK(rho(0.7, 1.0) == 1.0);
    for (double beta : {0.1, 1.0, 10.0})
        CHECK(rho(beta, 2.0) == doctest::Approx((1.0 + beta) / beta).epsilon(1e-14));
    CHECK(rho(1.0, 3.0) ==
          doctest::Approx(2.0 / ((std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0)))
              .epsilon(1e-12));
    CHECK_THROWS_AS((void)rho(1.0, 0.5), std::domain_error);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    for (double p : {1.0, 1.5, 2.0, 3.0})
        for (double beta : {0.1, 1.0, 10.0}) {
            const double r = rho(beta, p);
            for (int i = 0; i < 10000; ++i) {
                const double x = U(rng), y = U(rng);
                CHECK(std::pow(x + y, p) <=
                      (1.0 + beta) * std::pow(x, p) + r * std::pow(y, p) + 1e-9);
            }
        }
}

TEST_CASE("circle means: closed forms and Parseval") {
    for (double r : {0.3, 0.8}) {
        auto m1 = circle_mean_p([](complexd z) { return psi(1, z); }, r, 2.0, 512);
        CHECK(m1.value == doctest::Approx(1.0 / (1.0 - r * r)).epsilon(1e-10));
        auto m6 = circle_mean_p([](complexd z) { return psi(6, z); }, r, 2.0, 512);
        const double r12 = std::pow(r, 12);
        CHECK(m6.value ==
              doctest::Approx(36.0 * std::pow(r, 10) / (1.0 - r12)).epsilon(1e-10));
    }
    // Parseval oracle for a polynomial
    auto f = BoundedAnalyticFunction::from_taylor({{0.3, 0.0}, {0.0, 0.5}, {-0.2, 0.1}});
    const double r = 0.7;
    double parseval = 0.0;
    for (std::size_t s = 0; s < f.taylor().size(); ++s)
        parseval += std::norm(f.taylor()[s]) * std::pow(r, 2.0 * static_cast<double>(s));
    CHECK(circle_mean_p([&](complexd z) { return f(z); }, r, 2.0, 512).value ==
          doctest::Approx(parseval).epsilon(1e-8));
    CHECK_THROWS_AS((void)circle_mean_p([](complexd z) { return z; }, 1.5, 2.0, 512),
                    std::domain_error);
}

TEST_CASE("integral bound at several radii") {
    auto f = BoundedAnalyticFunction::constant(0.5);
    const std::size_t N = 64;
    const double C0 = calibrate_C0({f}, {N}, 2000, 5);
    auto rep = check_integral_bound(f, N, 2.0, 1.0, C0,
                                    {0.5, 0.9, 0.99, 1.0 - 1.0 / static_cast<double>(N)});
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 4);
    for (const auto& row : rep.rows) CHECK(row.margin <= 1e-9 * std::abs(row.rhs));
    // inside r > 1 - 1/N the Remark comparison is recorded
    CHECK(rep.rows.back().remark_ratio > 0.0);
}
