#include "stilde/report.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <cmath>

namespace stilde {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // also folds -0
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string format_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

void write_csv(std::ostream& os, const Report& r) {
    os << "# command=" << r.command << '\n';
    for (const auto& [key, value] : r.meta) os << "# " << key << '=' << format_cell(value) << '\n';
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
}

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        // JSON has no inf/nan literals
        if (!std::isfinite(*d)) return format_double(*d);
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return std::get<std::string>(c);
}

}  // namespace

void write_json(std::ostream& os, const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.meta) meta[key] = to_json(value);
    j["meta"] = std::move(meta);
    j["columns"] = r.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& c : row) jr.push_back(to_json(c));
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
}

}  // namespace stilde
