#ifndef CHUI_CLI_SUPPORT_HPP
#define CHUI_CLI_SUPPORT_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chui/report.hpp"
#include "chui/thompson.hpp"
#include "chui/weights.hpp"

namespace chui::cli {

inline constexpr const char* schema_version = "chui-cli-1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "alpha:1.0" | "logpow:2.0" | "exppow:0.5" | "minramp:0.3" | "table:<file.csv>"
inline Weight parse_weight(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("weight spec needs the form kind:value, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "table") {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open weight table '" + arg + "'");
        std::vector<double> ts, gs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            double t, v;
            char comma;
            if (!(row >> t >> comma >> v))
                throw UsageError("weight table row must be 't,g': '" + line + "'");
            ts.push_back(t);
            gs.push_back(v);
        }
        return Weight::tabulated(std::move(ts), std::move(gs));
    }
    double value;
    try {
        value = std::stod(arg);
    } catch (const std::exception&) {
        throw UsageError("weight parameter is not a number: '" + arg + "'");
    }
    if (kind == "alpha") return Weight::power(value);
    if (kind == "logpow") return Weight::log_power(value);
    if (kind == "exppow") return Weight::exp_power(value);
    if (kind == "minramp") return Weight::min_ramp(value);
    throw UsageError("unknown weight kind '" + kind + "'");
}

// "zero" | "const:0.5" | "taylor:<file.json>" (JSON array of [re, im] pairs)
inline BoundedAnalyticFunction parse_function(const std::string& spec) {
    if (spec == "zero") return BoundedAnalyticFunction::zero();
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("function spec must be zero, const:<c>, or taylor:<file>");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "const") {
        try {
            return BoundedAnalyticFunction::constant(std::stod(arg));
        } catch (const std::invalid_argument&) {
            throw UsageError("const function value is not a number: '" + arg + "'");
        }
    }
    if (kind == "taylor") {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open Taylor coefficient file '" + arg + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("bad Taylor JSON: ") + e.what());
        }
        if (!j.is_array()) throw UsageError("Taylor file must hold a JSON array");
        std::vector<complexd> coeffs;
        for (const auto& item : j) {
            if (item.is_number()) {
                coeffs.emplace_back(item.get<double>(), 0.0);
            } else if (item.is_array() && item.size() == 2) {
                coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
            } else {
                throw UsageError("Taylor entries must be numbers or [re, im] pairs");
            }
        }
        return BoundedAnalyticFunction::from_taylor(std::move(coeffs));
    }
    throw UsageError("unknown function kind '" + kind + "'");
}

// "8" | "2,4,8" | "a:b" or "a:b:geom" (doubling) | "a:b:lin:<step>"
inline std::vector<std::size_t> parse_sweep(const std::string& spec) {
    std::vector<std::size_t> out;
    auto push = [&](long v) {
        if (v < 1) throw UsageError("sweep values must be >= 1");
        out.push_back(static_cast<std::size_t>(v));
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::istringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() < 2 || parts.size() > 4)
            throw UsageError("sweep spec must be a:b[:geom|:lin:<step>]");
        long a, b;
        try {
            a = std::stol(parts[0]);
            b = std::stol(parts[1]);
        } catch (const std::exception&) {
            throw UsageError("sweep endpoints must be integers");
        }
        if (a < 1 || b < a) throw UsageError("sweep needs 1 <= a <= b");
        const std::string mode = parts.size() >= 3 ? parts[2] : "geom";
        if (mode == "geom") {
            for (long v = a; v < b; v *= 2) push(v);
            push(b);
        } else if (mode == "lin") {
            long step = 1;
            if (parts.size() == 4) {
                try {
                    step = std::stol(parts[3]);
                } catch (const std::exception&) {
                    throw UsageError("lin sweep step must be an integer");
                }
            }
            if (step < 1) throw UsageError("lin sweep step must be >= 1");
            for (long v = a; v < b; v += step) push(v);
            push(b);
        } else {
            throw UsageError("unknown sweep mode '" + mode + "'");
        }
        return out;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            push(std::stol(tok));
        } catch (const std::invalid_argument&) {
            throw UsageError("sweep entry is not an integer: '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("empty sweep spec");
    return out;
}

// Full run configuration embedded in every output.
inline nlohmann::json make_config(const std::string& subcommand, nlohmann::json flags,
                                  std::uint64_t seed, std::size_t threads) {
    return {{"schema", schema_version},
            {"subcommand", subcommand},
            {"flags", std::move(flags)},
            {"seed", seed},
            {"threads", threads}};
}

// Flat table for CSV emission; config rides along as comment lines.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline std::string render_csv(const CsvTable& table, const nlohmann::json& config) {
    std::ostringstream out;
    out << "# schema=" << schema_version << "\n";
    out << "# config=" << config.dump() << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    out.precision(17);
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    return out.str();
}

// path "-" means standard output.
inline void write_text(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << text;
}

}  // namespace chui::cli

#endif
