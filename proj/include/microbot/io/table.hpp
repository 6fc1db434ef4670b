#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "../errors.hpp"

namespace microbot::io {

using Cell = std::variant<double, long long, std::string>;

struct Column {
    std::string name;
    std::string unit;  ///< "1" for dimensionless, "" for text
};

/// Column-labelled rows, written as CSV or JSON.
struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw InvalidState("row width does not match the table header");
        rows.push_back(std::move(row));
    }
};

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline std::string header_label(const Column& c) { return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]"; }

inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(header_label(t.columns[i]));
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        os << format_number(v);
                    } else if constexpr (std::is_same_v<T, long long>) {
                        os << v;
                    } else {
                        os << csv_escape(v);
                    }
                },
                row[i]);
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::ordered_json to_json_value(const Table& t) {
    nlohmann::ordered_json j;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : t.columns) j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row) std::visit([&](const auto& v) { r.push_back(v); }, cell);
        j["rows"].push_back(r);
    }
    return j;
}

inline std::string to_json(const Table& t) { return to_json_value(t).dump(2) + "\n"; }

/// Write through a temporary file in the same directory, then rename over the target.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    if (!std::filesystem::is_directory(dir)) throw ConfigError("output directory does not exist: " + dir.string());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot open output file " + tmp.string());
        os << content;
        os.flush();
        if (!os) throw ConfigError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace microbot::io
