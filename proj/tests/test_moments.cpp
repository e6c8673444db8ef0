#include <doctest.h>

#include <random>

#include "chui/moments.hpp"

using namespace chui;

TEST_CASE("power sums: structural identities") {
    // N-th roots of unity: S_j = 0 off multiples of N, N on them
    auto roots = UnimodularFamily::roots_of_unity(5);
    auto S = power_sums(roots, 12);
    for (std::size_t j = 1; j <= 12; ++j) {
        if (j % 5 == 0)
            CHECK(std::abs(S[j - 1] - complexd(5.0, 0.0)) < 1e-12);
        else
            CHECK(std::abs(S[j - 1]) < 1e-12);
    }
    // all ones
    UnimodularFamily ones{std::vector<double>(7, 0.0)};
    for (const auto& s : power_sums(ones, 4)) CHECK(std::abs(s - complexd(7.0, 0.0)) < 1e-13);
    // {1, -1}
    UnimodularFamily pm{{0.0, std::numbers::pi}};
    auto Spm = power_sums(pm, 6);
    for (std::size_t j = 1; j <= 6; ++j)
        CHECK(Spm[j - 1].real() == doctest::Approx(j % 2 == 0 ? 2.0 : 0.0).epsilon(1e-12));
    // |S_j| <= N always
    std::mt19937_64 rng(4);
    auto fam = UnimodularFamily::random(16, rng);
    for (const auto& s : power_sums(fam, 64)) CHECK(std::abs(s) <= 16.0 + 1e-12);
}

TEST_CASE("Fejer kernel: closed form vs cosine sum, nonnegativity") {
    CHECK(fejer_kernel(2, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fejer_kernel(2, 1e-9) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fejer_kernel(2, std::numbers::pi) == doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t Mp1 : {2, 5, 17, 101}) {
        for (int i = 0; i < 10000; ++i) {
            const double x = two_pi * (i + 0.5) / 10000.0 - std::numbers::pi;
            const double closed = fejer_kernel(Mp1, x);
            CHECK(closed >= 0.0);
            CHECK(std::abs(closed - fejer_cosine_sum(Mp1, x)) < 1e-10);
        }
    }
}

TEST_CASE("Fejer weighted bound: worked examples") {
    UnimodularFamily one{{0.0}};
    auto b1 = fejer_weighted_bound(one, 2);
    CHECK(b1.weighted_sum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b1.paper_floor == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b1.pass);

    UnimodularFamily pm{{0.0, std::numbers::pi}};
    auto b2 = fejer_weighted_bound(pm, 4);
    CHECK(b2.weighted_sum == doctest::Approx(3.2).epsilon(1e-12));
    CHECK(b2.paper_floor == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(b2.pass);
}

TEST_CASE("randomized moment bounds") {
    std::mt19937_64 rng(7);
    for (std::size_t N : {2, 4, 8, 16, 32, 64}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto fam = UnimodularFamily::random(N, rng);
            CHECK(fejer_weighted_bound(fam, 2 * N).pass);
            CHECK(moment_lower_bound_check(fam).pass);
        }
    }
    // adversarial fixtures: clustered and near-duplicate angles
    UnimodularFamily cluster{{0.0, 1e-6, 2e-6, 3e-6, 0.1, 0.1 + 1e-9}};
    CHECK(fejer_weighted_bound(cluster, 12).pass);
    CHECK(moment_lower_bound_check(cluster).pass);
}

TEST_CASE("moment bound: roots of unity saturate cleanly") {
    auto fam = UnimodularFamily::roots_of_unity(8);
    auto mb = moment_lower_bound_check(fam);
    CHECK(mb.sum == doctest::Approx(2.0 * 64.0).epsilon(1e-12));  // |S_8|^2 + |S_16|^2
    CHECK(mb.pass);
}

TEST_CASE("annulus energy: quadrature matches the coefficient sum") {
    for (std::size_t N : {2, 8, 16}) {
        auto e = annulus_energy(PoleConfiguration::equispaced(N));
        CHECK(e.value > 0.0);
        CHECK(std::abs(e.value - e.taylor_proxy) < 1e-6 * e.value + 1e-12);
        CHECK(e.ratio_to_N > 0.0);
    }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, two_pi);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> ang(16);
        for (double& t : ang) t = U(rng);
        auto e = annulus_energy(PoleConfiguration(ang));
        CHECK(std::abs(e.value - e.taylor_proxy) < 1e-5 * e.value);
    }
    // two antipodal poles: finite positive energy
    auto e2 = annulus_energy(PoleConfiguration({0.0, std::numbers::pi}));
    CHECK(e2.value > 0.0);
    CHECK(std::isfinite(e2.value));
}
