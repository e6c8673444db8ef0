#include <doctest.h>

#include <cmath>

#include "chui/experiments.hpp"
#include "chui/norms.hpp"

using namespace chui;

TEST_CASE("assertion helpers and report plumbing") {
    CHECK(assert_le("a", 1.0, 2.0, 0.0).pass);
    CHECK_FALSE(assert_le("a", 2.5, 2.0, 0.4).pass);
    CHECK(assert_ge("b", 2.0, 1.0, 0.0).pass);
    CHECK_FALSE(assert_ge("b", 0.5, 1.0, 0.4).pass);
    CHECK(assert_abs("c", 1.0 + 1e-9, 1.0, 1e-8).pass);
    CHECK_FALSE(assert_abs("c", 1.1, 1.0, 1e-8).pass);

    ExperimentReport rep;
    rep.name = "demo";
    rep.assertions.push_back(assert_le("ok", 1.0, 2.0, 0.0));
    CHECK(rep.all_pass());
    rep.assertions.push_back(assert_ge("bad", 0.0, 1.0, 0.0));
    CHECK_FALSE(rep.all_pass());

    const auto j = rep.to_json();
    CHECK(j["schema"] == report_schema_version);
    CHECK(j["name"] == "demo");
    CHECK(j["assertions"].size() == 2);
    CHECK(j["assertions"][0]["pass"] == true);
    CHECK(j["assertions"][1]["pass"] == false);
    CHECK(j["all_pass"] == false);
}

TEST_CASE("distance_sq_at: exact reduction for f = 0") {
    const Weight g = Weight::power(1.0);
    for (std::size_t N : {2, 5}) {
        const auto conf = PoleConfiguration::equispaced(N);
        const double d = distance_sq_at(BoundedAnalyticFunction::zero(), conf, g);
        CHECK(d == doctest::Approx(norm_sq_gram(conf, g).value_sq).epsilon(1e-8));
    }
}

TEST_CASE("distance_polish: monotone improvement from a perturbed start") {
    const Weight g = Weight::power(1.0);
    const auto f = BoundedAnalyticFunction::zero();
    std::vector<double> ang = PoleConfiguration::equispaced(6).angles();
    for (std::size_t i = 0; i < ang.size(); ++i) ang[i] += 0.05 * (i % 2 ? 1.0 : -1.0);
    const PoleConfiguration start(ang);
    const double before = distance_sq_at(f, start, g);
    const auto res = distance_polish(f, start, g);
    CHECK(res.best_norm_sq <= before);
    CHECK(res.best_norm_sq ==
          doctest::Approx(psi_norm_sq(6, g).value_sq).epsilon(1e-7));
    for (std::size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i] <= res.trace[i - 1] + 1e-12);
}

TEST_CASE("closure lower bound: f = 0 reduces to the equispaced norms") {
    const auto rep =
        closure_lower_bound_check(BoundedAnalyticFunction::zero(), {2, 4, 8}, 4, 0);
    CHECK(rep.all_pass());
    const Weight g = Weight::power(1.0);
    const auto dist_sq = rep.series["distance_sq"].get<std::vector<double>>();
    const std::vector<std::size_t> Ns = {2, 4, 8};
    for (std::size_t i = 0; i < Ns.size(); ++i)
        CHECK(dist_sq[i] == doctest::Approx(psi_norm_sq(Ns[i], g).value_sq).epsilon(1e-6));
    CHECK_THROWS_AS(
        (void)closure_lower_bound_check(BoundedAnalyticFunction::zero(), {}, 4, 0),
        std::domain_error);
}

TEST_CASE("closure density: decreasing errors for g(t) = o(t)") {
    const auto half = BoundedAnalyticFunction::constant(0.5);
    const auto rep = closure_density_demo(half, Weight::power(2.0), {16, 64, 256, 512});
    CHECK(rep.all_pass());
    const auto errs = rep.series["error_sq"].get<std::vector<double>>();
    for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] < errs[i - 1]);
    // alpha = 1 is not o(t): rejected
    CHECK_THROWS_AS((void)closure_density_demo(half, Weight::power(1.0), {16}),
                    std::domain_error);
}

TEST_CASE("distance limit: f = 0 gives exact brackets") {
    const auto rep =
        distance_limit_experiment(BoundedAnalyticFunction::zero(), {8, 32}, 2, 0);
    CHECK(rep.all_pass());
    const Weight g = Weight::power(1.0);
    const auto upper = rep.series["constructive_upper"].get<std::vector<double>>();
    const auto opt = rep.series["optimized"].get<std::vector<double>>();
    const std::vector<std::size_t> Ns = {8, 32};
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        const double ref = std::sqrt(psi_norm_sq(Ns[i], g).value_sq);
        CHECK(upper[i] == doctest::Approx(ref).epsilon(1e-6));
        CHECK(opt[i] == doctest::Approx(ref).epsilon(1e-6));
    }
}

TEST_CASE("set distance experiment wraps the joint minimization") {
    const auto rep = set_distance_experiment(1, 1, Weight::power(1.0), 4, 0);
    CHECK(rep.all_pass());
    CHECK(rep.series["witness_value_sq"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rep.series["best_value_sq"].get<double>() <=
          rep.series["witness_value_sq"].get<double>() + 1e-6);
    CHECK(rep.runtime_seconds >= 0.0);
}
