#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace stilde {

/// Shortest-safe decimal for a double: 17 significant digits, '.' separator,
/// no grouping, independent of the global locale.
std::string format_double(double v);

using Cell = std::variant<double, std::int64_t, std::string>;

std::string format_cell(const Cell& c);

/// Tabular report emitted by every CLI command. `meta` entries become
/// "# key=value" comment lines in CSV and a "meta" object in JSON.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, Cell value) { meta.emplace_back(std::move(key), std::move(value)); }
};

/// CSV with LF line endings.
void write_csv(std::ostream& os, const Report& r);
void write_json(std::ostream& os, const Report& r);

}  // namespace stilde
