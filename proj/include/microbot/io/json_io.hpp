#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

#include "../actuator_models.hpp"
#include "../squirmer_modes.hpp"

namespace microbot::io {

using nlohmann::ordered_json;

inline ordered_json to_json(const ModeSpectrum& s) {
    ordered_json j;
    j["epsilon"] = s.epsilon;
    j["omega"] = s.omega;
    j["normalized"] = s.normalized;
    j["modes"] = ordered_json::array();
    for (const Mode& m : s.modes) j["modes"].push_back({{"n", m.n}, {"A", m.A}, {"B", m.B}, {"gamma", m.gamma}, {"eta", m.eta}});
    return j;
}

/// Spectrum from {"epsilon", "omega", "modes": [{"n", "A", "B", "gamma", "eta"}]}; phases in radians.
inline ModeSpectrum spectrum_from_json(const ordered_json& j) {
    try {
        ModeSpectrum s;
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& k = it.key();
            if (k != "epsilon" && k != "omega" && k != "modes" && k != "normalized") {
                throw ConfigError("spectrum: unknown key '" + k + "'");
            }
        }
        s.epsilon = j.value("epsilon", 0.05);
        s.omega = j.value("omega", 0.0);
        for (const auto& m : j.at("modes")) {
            for (auto it = m.begin(); it != m.end(); ++it) {
                const auto& k = it.key();
                if (k != "n" && k != "A" && k != "B" && k != "gamma" && k != "eta") {
                    throw ConfigError("spectrum mode: unknown key '" + k + "'");
                }
            }
            s.modes.push_back({m.at("n").get<int>(), m.value("A", 0.0), m.value("B", 0.0), m.value("gamma", 0.0),
                               m.value("eta", 0.0)});
        }
        validate(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("spectrum JSON: ") + e.what());
    } catch (const InvalidParameter& e) {
        throw ConfigError(std::string("spectrum JSON: ") + e.what());
    }
}

inline ModeSpectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spectrum file " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return spectrum_from_json(j);
}

inline ordered_json to_json(const TreadmillDesign& d) {
    return {{"W", d.W},         {"L", d.L},         {"h", d.h},
            {"E", d.E},         {"r", d.r},         {"count", d.count},
            {"sliding_area", d.sliding_area},       {"failure_strength", d.failure_strength}};
}

inline TreadmillDesign treadmill_from_json(const ordered_json& j) {
    TreadmillDesign d;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& k = it.key();
            if (k == "W") d.W = it->get<double>();
            else if (k == "L") d.L = it->get<double>();
            else if (k == "h") d.h = it->get<double>();
            else if (k == "E") d.E = it->get<double>();
            else if (k == "r") d.r = it->get<double>();
            else if (k == "count") d.count = it->get<int>();
            else if (k == "sliding_area") d.sliding_area = it->get<double>();
            else if (k == "failure_strength") d.failure_strength = it->get<double>();
            else throw ConfigError("treadmill: unknown key '" + k + "'");
        }
        validate(d);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("treadmill JSON: ") + e.what());
    } catch (const InvalidParameter& e) {
        throw ConfigError(std::string("treadmill JSON: ") + e.what());
    }
    return d;
}

inline ordered_json to_json(const RodArrayDesign& r) {
    return {{"rod_radius", r.rod_radius}, {"rod_length", r.rod_length},     {"rod_count", r.rod_count},
            {"sliding_area", r.sliding_area}, {"max_displacement", r.max_displacement}, {"spacing", r.spacing}};
}

}  // namespace microbot::io
