// chui — weighted Bergman norms of simplest fractions: minimization,
// approximation, and rate experiments, with JSON/CSV reports.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chui/asymptotics.hpp"
#include "chui/cli_support.hpp"
#include "chui/experiments.hpp"
#include "chui/moments.hpp"
#include "chui/norms.hpp"
#include "chui/optimize.hpp"
#include "chui/selftest.hpp"
#include "chui/thompson.hpp"

namespace {

using chui::cli::CsvTable;
using chui::cli::UsageError;
using nlohmann::json;

struct Common {
    std::string json_path;
    std::string csv_path;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--json", c.json_path, "JSON report path ('-' = stdout)");
    cmd->add_option("--csv", c.csv_path, "CSV table path ('-' = stdout)");
    cmd->add_option("--seed", c.seed, "RNG seed, recorded in every output")
        ->default_val(0);
    cmd->add_option("--threads", c.threads,
                    "worker thread cap (0 = CHUI_LAB_THREADS or hardware)")
        ->default_val(0);
}

void apply_threads(const Common& c) {
    if (c.threads > 0) setenv("CHUI_LAB_THREADS", std::to_string(c.threads).c_str(), 1);
}

// Emit the report; exit code 0 when all assertions pass, 2 otherwise.
int emit(json payload, const CsvTable* table, const Common& c, const json& config,
         bool pass) {
    payload["schema"] = chui::cli::schema_version;
    payload["config"] = config;
    payload["pass"] = pass;
    bool wrote = false;
    if (!c.csv_path.empty()) {
        if (!table) throw UsageError("this subcommand has no CSV form");
        chui::cli::write_text(chui::cli::render_csv(*table, config), c.csv_path);
        wrote = true;
    }
    if (!c.json_path.empty()) {
        chui::cli::write_text(payload.dump(2) + "\n", c.json_path);
        wrote = true;
    }
    if (!wrote) chui::cli::write_text(payload.dump(2) + "\n", "-");
    return pass ? 0 : 2;
}

chui::PoleConfiguration load_poles(const std::string& poles_file, std::size_t equispaced) {
    if (!poles_file.empty() && equispaced > 0)
        throw UsageError("give either --poles or --equispaced, not both");
    if (equispaced > 0) return chui::PoleConfiguration::equispaced(equispaced);
    if (poles_file.empty()) throw UsageError("poles required: --poles <file> or --equispaced N");
    std::ifstream in(poles_file);
    if (!in) throw UsageError("cannot open poles file '" + poles_file + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad poles JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("poles file must hold a JSON array");
    std::vector<double> ang;
    for (const auto& v : j) ang.push_back(v.get<double>());
    return chui::PoleConfiguration(std::move(ang));
}

json report_payload(const chui::ExperimentReport& rep) {
    json j = rep.to_json();
    return {{"report", std::move(j)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Bergman norms of simplest fractions"};
    app.set_version_flag("--version", "chui 1.0.0");
    app.require_subcommand(1);
    std::function<int()> run;

    // ---- norm ----
    {
        auto* cmd = app.add_subcommand("norm", "squared norm of a pole configuration");
        auto c = std::make_shared<Common>();
        auto poles_file = std::make_shared<std::string>();
        auto equispaced = std::make_shared<std::size_t>(0);
        auto weight = std::make_shared<std::string>("alpha:1.0");
        auto method = std::make_shared<std::string>("gram");
        cmd->add_option("--poles", *poles_file, "JSON file with pole angles (radians)");
        cmd->add_option("--equispaced", *equispaced, "use N equispaced poles");
        cmd->add_option("--weight", *weight, "weight spec (alpha:a, logpow:q, exppow:q, minramp:d, table:file)");
        cmd->add_option("--method", *method, "gram | quad | radial")
            ->check(CLI::IsMember({"gram", "quad", "radial"}));
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const chui::Weight g = chui::cli::parse_weight(*weight);
                chui::NormResult res;
                if (*method == "radial") {
                    if (*equispaced == 0)
                        throw UsageError("--method radial needs --equispaced N");
                    res = chui::psi_norm_sq(*equispaced, g);
                } else {
                    const auto conf = load_poles(*poles_file, *equispaced);
                    res = *method == "gram" ? chui::norm_sq_gram(conf, g)
                                            : chui::norm_sq_quadrature(conf, g);
                }
                const json config = chui::cli::make_config(
                    "norm",
                    {{"weight", *weight}, {"method", *method},
                     {"poles", *poles_file}, {"equispaced", *equispaced}},
                    c->seed, c->threads);
                const json payload = {{"value_sq", res.value_sq},
                                      {"value", std::sqrt(std::max(0.0, res.value_sq))},
                                      {"error_estimate", res.error_estimate}};
                CsvTable t{{"value_sq", "error_estimate"},
                           {{res.value_sq, res.error_estimate}}};
                return emit(payload, &t, *c, config, true);
            };
        });
    }

    // ---- minimize ----
    {
        auto* cmd = app.add_subcommand("minimize", "minimize the norm over N pole angles");
        auto c = std::make_shared<Common>();
        auto N = std::make_shared<std::size_t>(0);
        auto weight = std::make_shared<std::string>("alpha:1.0");
        auto starts = std::make_shared<std::size_t>(20);
        auto tol = std::make_shared<double>(1e-9);
        auto cap = std::make_shared<int>(5000);
        cmd->add_option("--N", *N, "number of poles")->required();
        cmd->add_option("--weight", *weight, "weight spec");
        cmd->add_option("--starts", *starts, "multistart count")->default_val(20);
        cmd->add_option("--tol", *tol, "gradient tolerance")->default_val(1e-9);
        cmd->add_option("--cap", *cap, "iteration cap")->default_val(5000);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const chui::Weight g = chui::cli::parse_weight(*weight);
                const auto res = chui::minimize_norm(*N, g, *starts, c->seed, *tol, *cap);
                const json config = chui::cli::make_config(
                    "minimize",
                    {{"N", *N}, {"weight", *weight}, {"starts", *starts},
                     {"tol", *tol}, {"cap", *cap}},
                    c->seed, c->threads);
                const json payload = {
                    {"best_norm_sq", res.best_norm_sq},
                    {"best_angles", res.best.angles()},
                    {"converged_fraction", res.converged_fraction},
                    {"gauge_distance_to_equispaced", res.gauge_distance_to_equispaced},
                    {"max_converged_gauge_distance", res.max_converged_gauge_distance}};
                CsvTable t{{"best_norm_sq", "gauge_distance", "converged_fraction"},
                           {{res.best_norm_sq, res.gauge_distance_to_equispaced,
                             res.converged_fraction}}};
                return emit(payload, &t, *c, config, true);
            };
        });
    }

    // ---- distance ----
    {
        auto* cmd = app.add_subcommand("distance", "distance from f to SF_N");
        auto c = std::make_shared<Common>();
        auto fspec = std::make_shared<std::string>("zero");
        auto N = std::make_shared<std::size_t>(0);
        auto weight = std::make_shared<std::string>("alpha:1.0");
        auto starts = std::make_shared<std::size_t>(8);
        cmd->add_option("--f", *fspec, "function (zero, const:c, taylor:file)");
        cmd->add_option("--N", *N, "pole count")->required();
        cmd->add_option("--weight", *weight, "weight spec");
        cmd->add_option("--starts", *starts, "multistart count")->default_val(8);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto f = chui::cli::parse_function(*fspec);
                const chui::Weight g = chui::cli::parse_weight(*weight);
                const auto res = chui::distance_to_SFN(f, *N, g, *starts, c->seed);
                const json config = chui::cli::make_config(
                    "distance",
                    {{"f", *fspec}, {"N", *N}, {"weight", *weight}, {"starts", *starts}},
                    c->seed, c->threads);
                const json payload = {
                    {"distance_sq", res.best_norm_sq},
                    {"distance", std::sqrt(std::max(0.0, res.best_norm_sq))},
                    {"best_angles", res.best.angles()},
                    {"converged_fraction", res.converged_fraction}};
                CsvTable t{{"distance_sq", "converged_fraction"},
                           {{res.best_norm_sq, res.converged_fraction}}};
                return emit(payload, &t, *c, config, true);
            };
        });
    }

    // ---- setdist ----
    {
        auto* cmd = app.add_subcommand("setdist", "distance between SF_n and SF_{n+k}");
        auto c = std::make_shared<Common>();
        auto n = std::make_shared<std::size_t>(0);
        auto k = std::make_shared<std::size_t>(0);
        auto weight = std::make_shared<std::string>("alpha:1.0");
        auto starts = std::make_shared<std::size_t>(8);
        cmd->add_option("--n", *n, "smaller pole count")->required();
        cmd->add_option("--k", *k, "pole count difference")->required();
        cmd->add_option("--weight", *weight, "weight spec");
        cmd->add_option("--starts", *starts, "multistart count")->default_val(8);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const chui::Weight g = chui::cli::parse_weight(*weight);
                const auto rep = chui::set_distance_experiment(*n, *k, g, *starts, c->seed);
                const json config = chui::cli::make_config(
                    "setdist",
                    {{"n", *n}, {"k", *k}, {"weight", *weight}, {"starts", *starts}},
                    c->seed, c->threads);
                return emit(report_payload(rep), nullptr, *c, config, rep.all_pass());
            };
        });
    }

    // ---- asymptotics ----
    {
        auto* cmd = app.add_subcommand("asymptotics",
                                       "scaled norms N^{a-1} ||Psi_N||^2_a vs the limit");
        auto c = std::make_shared<Common>();
        auto alpha = std::make_shared<double>(1.0);
        auto nmax = std::make_shared<std::size_t>(100);
        auto nmin = std::make_shared<std::size_t>(1);
        cmd->add_option("--alpha", *alpha, "power weight exponent")->default_val(1.0);
        cmd->add_option("--N-max", *nmax, "sweep upper end")->default_val(100);
        cmd->add_option("--N-min", *nmin, "sweep lower end")->default_val(1);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto Ns = chui::cli::parse_sweep(std::to_string(*nmin) + ":" +
                                                       std::to_string(*nmax) + ":geom");
                const auto rep = chui::scaled_norm_sequence(*alpha, Ns);
                const json config = chui::cli::make_config(
                    "asymptotics", {{"alpha", *alpha}, {"N_min", *nmin}, {"N_max", *nmax}},
                    c->seed, c->threads);
                CsvTable t{{"N", "scaled_norm_sq", "ratio"}, {}};
                for (std::size_t i = 0; i < rep.Ns.size(); ++i)
                    t.rows.push_back({static_cast<double>(rep.Ns[i]), rep.values[i],
                                      rep.ratios[i]});
                const json payload = {{"Ns", rep.Ns},
                                      {"scaled_norm_sq", rep.values},
                                      {"ratios", rep.ratios},
                                      {"limit", chui::limit_constant(*alpha)},
                                      {"monotone_increasing", rep.monotone_increasing}};
                return emit(payload, &t, *c, config, rep.monotone_increasing);
            };
        });
    }

    // ---- rates ----
    {
        auto* cmd = app.add_subcommand("rates", "normalized decay-rate sequences (cases A-D)");
        auto c = std::make_shared<Common>();
        auto rcase = std::make_shared<std::string>("A");
        auto weight = std::make_shared<std::string>("alpha:1.0");
        auto sweep = std::make_shared<std::string>("10:10000:geom");
        cmd->add_option("--case", *rcase, "rate case A | B | C | D")
            ->check(CLI::IsMember({"A", "B", "C", "D"}));
        cmd->add_option("--weight", *weight, "weight spec");
        cmd->add_option("--Ns", *sweep, "N sweep (a:b[:geom|:lin:s] or list)");
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const chui::Weight g = chui::cli::parse_weight(*weight);
                const chui::RateCase rc = *rcase == "A"   ? chui::RateCase::A
                                          : *rcase == "B" ? chui::RateCase::B
                                          : *rcase == "C" ? chui::RateCase::C
                                                          : chui::RateCase::D;
                const auto Ns = chui::cli::parse_sweep(*sweep);
                const auto rep = chui::corollary_rates(rc, g, Ns);
                const json config = chui::cli::make_config(
                    "rates", {{"case", *rcase}, {"weight", *weight}, {"Ns", *sweep}},
                    c->seed, c->threads);
                CsvTable t{{"N", "value"}, {}};
                for (std::size_t i = 0; i < rep.Ns.size(); ++i)
                    t.rows.push_back({static_cast<double>(rep.Ns[i]), rep.values[i]});
                const json payload = {{"Ns", rep.Ns},
                                      {"values", rep.values},
                                      {"band_ratio", rep.band_ratio}};
                return emit(payload, &t, *c, config, true);
            };
        });
    }

    // ---- thompson ----
    {
        auto* cmd = app.add_subcommand("thompson", "pole-placement approximant of f");
        auto c = std::make_shared<Common>();
        auto fspec = std::make_shared<std::string>("const:0.5");
        auto N = std::make_shared<std::size_t>(0);
        auto krad = std::make_shared<double>(0.4);
        auto check = std::make_shared<bool>(false);
        auto C0 = std::make_shared<double>(0.0);
        cmd->add_option("--f", *fspec, "function (zero, const:c, taylor:file)");
        cmd->add_option("--N", *N, "pole count")->required();
        cmd->add_option("--K-radius", *krad, "compact-set radius")->default_val(0.4);
        cmd->add_flag("--check-bounds", *check, "verify pointwise and circle-mean bounds");
        cmd->add_option("--C0", *C0, "bound constant (0 = calibrate on the built-in corpus)");
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto f = chui::cli::parse_function(*fspec);
                const auto h = chui::thompson_approximant(f, *N);
                double sup = 0.0;
                for (int ir = 0; ir < 64; ++ir)
                    for (int it = 0; it < 64; ++it) {
                        const auto z = std::polar(*krad * (ir + 1) / 64.0,
                                                  chui::two_pi * it / 64.0);
                        sup = std::max(sup, std::abs(f(z) - h(z)));
                    }
                json payload = {{"N", *N},
                                {"sup_error_on_K", sup},
                                {"K_radius", *krad},
                                {"sup_bound_M", f.sup_bound()},
                                {"pole_angles", h.poles().angles()}};
                bool pass = true;
                if (*check) {
                    const double c0 =
                        *C0 > 0.0 ? *C0
                                  : chui::calibrate_C0(chui::builtin_corpus(), {*N});
                    std::mt19937_64 rng(c->seed);
                    std::uniform_real_distribution<double> Ur(0.0, 1.0),
                        Ut(0.0, chui::two_pi);
                    std::vector<chui::complexd> samples(10000);
                    for (auto& z : samples)
                        z = std::polar(1.0 - std::pow(10.0, -4.0 * Ur(rng)), Ut(rng));
                    const auto pw = chui::check_pointwise_bound(h, f.sup_bound(), c0, samples);
                    const auto ib = chui::check_integral_bound(
                        f, *N, 2.0, 1.0, c0,
                        {0.5, 0.9, 0.99, 1.0 - 1.0 / static_cast<double>(*N)});
                    payload["C0"] = c0;
                    payload["pointwise_bound"] = {{"pass", pw.pass},
                                                  {"max_margin", pw.max_margin},
                                                  {"samples", pw.samples}};
                    json rows = json::array();
                    for (const auto& row : ib.rows)
                        rows.push_back({{"r", row.r},
                                        {"lhs", row.lhs},
                                        {"rhs", row.rhs},
                                        {"margin", row.margin},
                                        {"remark_ratio", row.remark_ratio}});
                    payload["integral_bound"] = {{"pass", ib.pass}, {"rows", rows}};
                    pass = pw.pass && ib.pass;
                }
                const json config = chui::cli::make_config(
                    "thompson",
                    {{"f", *fspec}, {"N", *N}, {"K_radius", *krad},
                     {"check_bounds", *check}, {"C0", *C0}},
                    c->seed, c->threads);
                CsvTable t{{"N", "sup_error_on_K"},
                           {{static_cast<double>(*N), sup}}};
                return emit(payload, &t, *c, config, pass);
            };
        });
    }

    // ---- moments ----
    {
        auto* cmd = app.add_subcommand("moments", "power-sum floors over random families");
        auto c = std::make_shared<Common>();
        auto N = std::make_shared<std::size_t>(32);
        auto trials = std::make_shared<std::size_t>(1000);
        cmd->add_option("--N", *N, "family size")->default_val(32);
        cmd->add_option("--trials", *trials, "random families to draw")->default_val(1000);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                std::mt19937_64 rng(c->seed);
                std::size_t failures = 0;
                double min_sum = std::numeric_limits<double>::infinity();
                double min_weighted_gap = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < *trials; ++i) {
                    const auto fam = chui::UnimodularFamily::random(*N, rng);
                    const auto mb = chui::moment_lower_bound_check(fam);
                    const auto fb = chui::fejer_weighted_bound(fam, 2 * *N);
                    if (!mb.pass || !fb.pass) ++failures;
                    min_sum = std::min(min_sum, mb.sum);
                    min_weighted_gap =
                        std::min(min_weighted_gap, fb.weighted_sum - fb.paper_floor);
                }
                const json config = chui::cli::make_config(
                    "moments", {{"N", *N}, {"trials", *trials}}, c->seed, c->threads);
                const json payload = {
                    {"trials", *trials},
                    {"failures", failures},
                    {"min_sum", min_sum},
                    {"floor", 0.5 * static_cast<double>(*N) * static_cast<double>(*N)},
                    {"min_weighted_gap", min_weighted_gap}};
                CsvTable t{{"N", "trials", "failures", "min_sum"},
                           {{static_cast<double>(*N), static_cast<double>(*trials),
                             static_cast<double>(failures), min_sum}}};
                return emit(payload, &t, *c, config, failures == 0);
            };
        });
    }

    // ---- annulus ----
    {
        auto* cmd = app.add_subcommand("annulus", "energy on the critical annulus");
        auto c = std::make_shared<Common>();
        auto poles_file = std::make_shared<std::string>();
        auto equispaced = std::make_shared<std::size_t>(0);
        cmd->add_option("--poles", *poles_file, "JSON file with pole angles (radians)");
        cmd->add_option("--equispaced", *equispaced, "use N equispaced poles");
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto conf = load_poles(*poles_file, *equispaced);
                const auto e = chui::annulus_energy(conf);
                const double rel =
                    std::abs(e.value - e.taylor_proxy) / std::max(1e-300, e.value);
                const json config = chui::cli::make_config(
                    "annulus", {{"poles", *poles_file}, {"equispaced", *equispaced}},
                    c->seed, c->threads);
                const json payload = {{"value", e.value},
                                      {"taylor_proxy", e.taylor_proxy},
                                      {"relative_gap", rel},
                                      {"ratio_to_N", e.ratio_to_N}};
                CsvTable t{{"value", "taylor_proxy", "ratio_to_N"},
                           {{e.value, e.taylor_proxy, e.ratio_to_N}}};
                return emit(payload, &t, *c, config, rel < 1e-5);
            };
        });
    }

    // ---- closure ----
    {
        auto* cmd = app.add_subcommand("closure", "closure dichotomy experiments");
        auto c = std::make_shared<Common>();
        auto branch = std::make_shared<std::string>("lower");
        auto fspec = std::make_shared<std::string>("const:0.5");
        auto weight = std::make_shared<std::string>("alpha:2.0");
        auto sweep = std::make_shared<std::string>("16:512:geom");
        auto starts = std::make_shared<std::size_t>(4);
        cmd->add_option("--branch", *branch, "lower | density")
            ->check(CLI::IsMember({"lower", "density"}));
        cmd->add_option("--f", *fspec, "function spec");
        cmd->add_option("--weight", *weight, "weight spec (density branch only)");
        cmd->add_option("--Ns", *sweep, "N sweep");
        cmd->add_option("--starts", *starts, "multistart count (lower branch)")
            ->default_val(4);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto f = chui::cli::parse_function(*fspec);
                const auto Ns = chui::cli::parse_sweep(*sweep);
                const chui::ExperimentReport rep =
                    *branch == "lower"
                        ? chui::closure_lower_bound_check(f, Ns, *starts, c->seed)
                        : chui::closure_density_demo(f, chui::cli::parse_weight(*weight), Ns);
                const json config = chui::cli::make_config(
                    "closure",
                    {{"branch", *branch}, {"f", *fspec}, {"weight", *weight},
                     {"Ns", *sweep}, {"starts", *starts}},
                    c->seed, c->threads);
                return emit(report_payload(rep), nullptr, *c, config, rep.all_pass());
            };
        });
    }

    // ---- distlimit ----
    {
        auto* cmd = app.add_subcommand("distlimit", "distance bracket around pi/sqrt(3)");
        auto c = std::make_shared<Common>();
        auto fspec = std::make_shared<std::string>("const:0.5");
        auto nmax = std::make_shared<std::size_t>(512);
        auto starts = std::make_shared<std::size_t>(4);
        cmd->add_option("--f", *fspec, "function spec");
        cmd->add_option("--N-max", *nmax, "largest N")->default_val(512);
        cmd->add_option("--starts", *starts, "multistart count")->default_val(4);
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto f = chui::cli::parse_function(*fspec);
                const auto Ns =
                    chui::cli::parse_sweep("32:" + std::to_string(*nmax) + ":geom");
                const auto rep = chui::distance_limit_experiment(f, Ns, *starts, c->seed);
                const json config = chui::cli::make_config(
                    "distlimit", {{"f", *fspec}, {"N_max", *nmax}, {"starts", *starts}},
                    c->seed, c->threads);
                return emit(report_payload(rep), nullptr, *c, config, rep.all_pass());
            };
        });
    }

    // ---- selftest ----
    {
        auto* cmd = app.add_subcommand("selftest", "run the full acceptance suite");
        auto c = std::make_shared<Common>();
        add_common(cmd, *c);
        cmd->callback([=, &run] {
            run = [=] {
                apply_threads(*c);
                const auto results = chui::run_selftest(&std::cerr);
                bool pass = true;
                json rows = json::array();
                for (const auto& r : results) {
                    pass = pass && r.pass;
                    rows.push_back({{"index", r.index},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"detail", r.detail}});
                }
                const json config =
                    chui::cli::make_config("selftest", json::object(), c->seed, c->threads);
                return emit(json{{"criteria", rows}}, nullptr, *c, config, pass);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
