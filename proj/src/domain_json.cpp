#include "stilde/domain_json.hpp"

#include <charconv>
#include <set>

namespace stilde {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const std::set<std::string>& required) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown key \"" + key + "\" in domain");
    }
    for (const auto& key : required) {
        if (!j.contains(key)) throw ConfigError("missing key \"" + key + "\" in domain");
    }
}

double number(const json& j, const char* what) {
    if (!j.is_number()) throw ConfigError(std::string(what) + " must be a number");
    return j.get<double>();
}

Point point(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ConfigError(std::string(what) + " must be a nonempty array of numbers");
    std::vector<double> v;
    for (const auto& c : j) v.push_back(number(c, what));
    try {
        return Point(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

std::vector<Point> point_list(const json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of points");
    std::vector<Point> pts;
    for (const auto& p : j) pts.push_back(point(p, what));
    return pts;
}

json point_json(const Point& p) {
    return json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

}  // namespace

DomainSpec domain_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("domain must be a JSON object");
    if (!j.contains("type") || !j["type"].is_string()) throw ConfigError("domain needs a string \"type\"");
    const std::string type = j["type"].get<std::string>();
    try {
        std::optional<BoundarySet> boundary;
        if (type == "sphere") {
            require_keys(j, {"type", "center", "radius", "interior"}, {"center", "radius"});
            boundary = BoundarySet::sphere(point(j["center"], "center"), number(j["radius"], "radius"));
        } else if (type == "halfspace") {
            require_keys(j, {"type", "normal", "offset", "interior"}, {"normal", "offset"});
            boundary = BoundarySet::halfspace(point(j["normal"], "normal"), number(j["offset"], "offset"));
        } else if (type == "points") {
            require_keys(j, {"type", "points", "interior"}, {"points"});
            boundary = BoundarySet::points(point_list(j["points"], "points"));
        } else if (type == "chain") {
            require_keys(j, {"type", "vertices", "closed", "interior"}, {"vertices", "closed"});
            if (!j["closed"].is_boolean()) throw ConfigError("closed must be a boolean");
            boundary = BoundarySet::chain(point_list(j["vertices"], "vertices"), j["closed"].get<bool>());
        } else {
            throw ConfigError("unknown domain type \"" + type + "\"");
        }
        DomainSpec spec{std::move(*boundary), std::nullopt};
        if (j.contains("interior")) {
            if (!j["interior"].is_string()) throw ConfigError("interior must be a string");
            auto side = interior_from_string(j["interior"].get<std::string>());
            if (!side) throw ConfigError("unknown interior tag \"" + j["interior"].get<std::string>() + "\"");
            validate_interior(spec.boundary, *side);
            spec.interior = side;
        }
        return spec;
    } catch (const std::invalid_argument& e) {
        // DimensionError and the factory invariants
        throw ConfigError(std::string("invalid domain: ") + e.what());
    }
}

DomainSpec parse_domain(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line/column
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": " + e.what());
    }
    return domain_from_json(j);
}

json domain_to_json(const DomainSpec& d) {
    json j;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Sphere>) {
                j = {{"type", "sphere"}, {"center", point_json(b.center)}, {"radius", b.radius}};
            } else if constexpr (std::is_same_v<T, HalfSpaceBoundary>) {
                j = {{"type", "halfspace"}, {"normal", point_json(b.normal)}, {"offset", b.offset}};
            } else if constexpr (std::is_same_v<T, FinitePointSet>) {
                json pts = json::array();
                for (const Point& p : b.points) pts.push_back(point_json(p));
                j = {{"type", "points"}, {"points", pts}};
            } else {
                json pts = json::array();
                for (const Point& p : b.vertices) pts.push_back(point_json(p));
                j = {{"type", "chain"}, {"vertices", pts}, {"closed", b.closed}};
            }
        },
        d.boundary.variant());
    if (d.interior) j["interior"] = to_string(*d.interior);
    return j;
}

Point parse_point(const std::string& text) {
    std::vector<double> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        while (first < last && *first == ' ') ++first;
        double value = 0.0;
        auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc() || res.ptr != last) {
            throw ConfigError("cannot parse coordinate list \"" + text + "\"");
        }
        v.push_back(value);
        start = end + 1;
    }
    try {
        return Point(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid point: ") + e.what());
    }
}

}  // namespace stilde
