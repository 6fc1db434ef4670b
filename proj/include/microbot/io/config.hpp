#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "../scenario.hpp"

namespace microbot::io {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& text, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(where + ": not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw ConfigError(where + ": not a finite number: '" + text + "'");
    return v;
}

}  // namespace detail

/**
 * @brief Scenario from key=value text, SI units.
 *
 * Keys: preset, name, c, rho, T_body, eta, nu, a, U. A preset fills defaults
 * that later keys override; nu, if given, must equal eta/rho.
 */
inline Scenario parse_scenario(std::istream& in, const std::string& source = "<config>") {
    static const char* keys[] = {"preset", "name", "c", "rho", "T_body", "eta", "nu", "a", "U"};
    std::map<std::string, std::pair<std::string, int>> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) {
            throw ConfigError(where + ": unknown key '" + key + "' (known: preset, name, c, rho, T_body, eta, nu, a, U)");
        }
        if (values.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
        values[key] = {value, line_no};
    }
    auto where = [&](const std::string& key) { return source + ":" + std::to_string(values[key].second); };
    Scenario s = make_scenario(Preset::LOW);
    s.name = "custom";
    if (values.count("preset")) {
        try {
            s = make_scenario(values["preset"].first);
        } catch (const InvalidParameter& e) {
            throw ConfigError(where("preset") + ": " + e.what());
        }
    }
    if (values.count("name")) s.name = values["name"].first;
    auto num = [&](const char* key, double& field) {
        if (values.count(key)) field = detail::parse_number(values[key].first, where(key) + " (" + key + ")");
    };
    num("c", s.c);
    num("rho", s.rho);
    num("T_body", s.T_body);
    num("eta", s.eta);
    num("a", s.a);
    num("U", s.U);
    s.nu = s.eta / s.rho;
    if (values.count("nu")) {
        double nu = 0.0;
        num("nu", nu);
        if (std::abs(nu - s.nu) > 1e-12 * s.nu) {
            throw ConfigError(where("nu") + ": nu=" + values["nu"].first + " disagrees with eta/rho=" +
                              microbot::detail::fmt(s.nu));
        }
    }
    try {
        validate(s);
    } catch (const InvalidParameter& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return s;
}

inline Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path);
    return parse_scenario(in, path);
}

/// "low", "high" or "file:<path>".
inline Scenario resolve_scenario(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return load_scenario_file(spec.substr(5));
    try {
        return make_scenario(spec);
    } catch (const InvalidParameter& e) {
        throw ConfigError(std::string("--scenario: ") + e.what() + ", or file:<path>");
    }
}

}  // namespace microbot::io
