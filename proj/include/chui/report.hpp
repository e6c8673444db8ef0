#ifndef CHUI_REPORT_HPP
#define CHUI_REPORT_HPP

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace chui {

inline constexpr const char* report_schema_version = "chui-report-1";

// One asserted comparison inside an experiment, with its tolerance on record.
struct Assertion {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    std::string comparison;  // "le", "ge", or "abs"
    bool pass = false;
};

inline Assertion assert_le(std::string name, double value, double reference, double tol) {
    return {std::move(name), value, reference, tol, "le", value <= reference + tol};
}

inline Assertion assert_ge(std::string name, double value, double reference, double tol) {
    return {std::move(name), value, reference, tol, "ge", value >= reference - tol};
}

inline Assertion assert_abs(std::string name, double value, double reference, double tol) {
    return {std::move(name), value, reference, tol, "abs",
            std::abs(value - reference) <= tol};
}

struct ExperimentReport {
    std::string name;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json series = nlohmann::json::object();
    std::vector<Assertion> assertions;
    double runtime_seconds = 0.0;

    bool all_pass() const {
        for (const Assertion& a : assertions)
            if (!a.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema"] = report_schema_version;
        j["name"] = name;
        j["inputs"] = inputs;
        j["series"] = series;
        j["assertions"] = nlohmann::json::array();
        for (const Assertion& a : assertions)
            j["assertions"].push_back({{"name", a.name},
                                       {"value", a.value},
                                       {"reference", a.reference},
                                       {"tolerance", a.tolerance},
                                       {"comparison", a.comparison},
                                       {"pass", a.pass}});
        j["all_pass"] = all_pass();
        j["runtime_seconds"] = runtime_seconds;
        return j;
    }
};

namespace detail {

// Scope timer filling ExperimentReport::runtime_seconds on destruction.
class ReportTimer {
public:
    explicit ReportTimer(ExperimentReport& rep)
        : rep_(rep), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        rep_.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    ExperimentReport& rep_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

}  // namespace chui

#endif
