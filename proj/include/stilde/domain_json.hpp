#pragma once

#include "stilde/boundary.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace stilde {

/// Malformed or schema-violating configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses one of
///   {"type":"sphere","center":[...],"radius":r}
///   {"type":"halfspace","normal":[...],"offset":o}
///   {"type":"points","points":[[...],...]}
///   {"type":"chain","vertices":[[...],...],"closed":bool}
/// each with an optional "interior" tag (inside | outside | positive |
/// negative | complement). Unknown keys are rejected.
DomainSpec domain_from_json(const nlohmann::json& j);

/// As domain_from_json, from text; syntax errors report line and column.
DomainSpec parse_domain(const std::string& text);

nlohmann::json domain_to_json(const DomainSpec& d);

/// "1,2.5,-3" -> Point{1, 2.5, -3}
Point parse_point(const std::string& text);

}  // namespace stilde
